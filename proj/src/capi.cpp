// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/sliceworks.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "sliceworks/error.hpp"
#include "sliceworks/io.hpp"
#include "sliceworks/slice_function.hpp"
#include "sliceworks/testkit.hpp"
#include "sliceworks/zeros.hpp"

struct sw_function {
  sliceworks::SliceFunction value;
  std::vector<std::string> warnings;
};

struct sw_domain {
  sliceworks::SliceDomain value;
};

struct sw_path {
  sliceworks::PathCn value;
};

struct sw_zeroset {
  sliceworks::ZeroSet value;
};

namespace {

using namespace sliceworks;

thread_local std::string last_error;

sw_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return SW_ERR_PARSE;
    case ErrorCode::InvalidArgument: return SW_ERR_INVALID_ARGUMENT;
    case ErrorCode::ZeroDivision: return SW_ERR_ZERO_DIVISION;
    case ErrorCode::NotInSliceCone: return SW_ERR_NOT_IN_SLICE_CONE;
    case ErrorCode::DegenerateSlicePair: return SW_ERR_DEGENERATE_SLICE_PAIR;
    case ErrorCode::EmptyUnitSet: return SW_ERR_EMPTY_UNIT_SET;
    case ErrorCode::InsufficientUnits: return SW_ERR_INSUFFICIENT_UNITS;
    case ErrorCode::NonRealSymmetrization: return SW_ERR_NON_REAL_SYMMETRIZATION;
    case ErrorCode::NoWitnessPath: return SW_ERR_NO_WITNESS_PATH;
    case ErrorCode::StepOutOfRange: return SW_ERR_STEP_OUT_OF_RANGE;
    case ErrorCode::OutOfDomain: return SW_ERR_OUT_OF_DOMAIN;
    case ErrorCode::IncompatibleDomains: return SW_ERR_INCOMPATIBLE_DOMAINS;
    case ErrorCode::DomainCheckFailed: return SW_ERR_DOMAIN_CHECK_FAILED;
    case ErrorCode::NoConvergence: return SW_ERR_NO_CONVERGENCE;
  }
  return SW_ERR_INTERNAL;
}

template <class F>
sw_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SW_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
  }
  return SW_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Quaternion from_c(const sw_quat* q) { return {q->w, q->x, q->y, q->z}; }
sw_quat to_c(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

std::optional<SliceDomain> optional_domain(const sw_domain* d) {
  if (d == nullptr) return std::nullopt;
  return d->value;
}

}  // namespace

extern "C" {

const char* sw_version(void) { return "1.0.0"; }

const char* sw_last_error(void) { return last_error.c_str(); }

const char* sw_status_name(sw_status status) {
  switch (status) {
    case SW_OK: return "Ok";
    case SW_ERR_PARSE: return to_string(ErrorCode::ParseError);
    case SW_ERR_INVALID_ARGUMENT: return to_string(ErrorCode::InvalidArgument);
    case SW_ERR_ZERO_DIVISION: return to_string(ErrorCode::ZeroDivision);
    case SW_ERR_NOT_IN_SLICE_CONE: return to_string(ErrorCode::NotInSliceCone);
    case SW_ERR_DEGENERATE_SLICE_PAIR: return to_string(ErrorCode::DegenerateSlicePair);
    case SW_ERR_EMPTY_UNIT_SET: return to_string(ErrorCode::EmptyUnitSet);
    case SW_ERR_INSUFFICIENT_UNITS: return to_string(ErrorCode::InsufficientUnits);
    case SW_ERR_NON_REAL_SYMMETRIZATION: return to_string(ErrorCode::NonRealSymmetrization);
    case SW_ERR_NO_WITNESS_PATH: return to_string(ErrorCode::NoWitnessPath);
    case SW_ERR_STEP_OUT_OF_RANGE: return to_string(ErrorCode::StepOutOfRange);
    case SW_ERR_OUT_OF_DOMAIN: return to_string(ErrorCode::OutOfDomain);
    case SW_ERR_INCOMPATIBLE_DOMAINS: return to_string(ErrorCode::IncompatibleDomains);
    case SW_ERR_DOMAIN_CHECK_FAILED: return to_string(ErrorCode::DomainCheckFailed);
    case SW_ERR_NO_CONVERGENCE: return to_string(ErrorCode::NoConvergence);
    case SW_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

int sw_exit_code(sw_status status) {
  switch (status) {
    case SW_OK: return 0;
    case SW_ERR_PARSE: return 1;
    case SW_ERR_NO_CONVERGENCE: return 3;
    default: return 2;
  }
}

void sw_string_free(char* s) { std::free(s); }

sw_status sw_parse_quaternion(const char* text, sw_quat* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = to_c(parse_quaternion(text));
  });
}

sw_status sw_quaternion_to_json(const sw_quat* q, char** out_json) {
  return guarded([&] {
    require(q, "q");
    require(out_json, "out_json");
    *out_json = duplicate(io::quaternion_result_to_json(from_c(q)));
  });
}

sw_status sw_function_parse(const char* json, sw_function** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new sw_function{io::parse_function(json), {}};
  });
}

void sw_function_free(sw_function* f) { delete f; }

sw_status sw_function_to_json(const sw_function* f, char** out_json) {
  return guarded([&] {
    require(f, "f");
    require(out_json, "out_json");
    *out_json = duplicate(io::function_to_json(f->value, f->warnings));
  });
}

sw_status sw_function_evaluate(const sw_function* f, const sw_quat* q, size_t n, sw_quat* out) {
  return guarded([&] {
    require(f, "f");
    require(q, "q");
    require(out, "out");
    std::vector<Quaternion> point;
    for (size_t i = 0; i < n; ++i) point.push_back(from_c(q + i));
    if (point.size() != f->value.dimension()) {
      throw Error(ErrorCode::InvalidArgument, "point has " + std::to_string(n) + " components, function takes " +
                                                  std::to_string(f->value.dimension()));
    }
    *out = to_c(f->value.evaluate(to_slice_point(point)));
  });
}

sw_status sw_star(const sw_function* f, const sw_function* g, sw_function** out) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(out, "out");
    *out = new sw_function{star_product(f->value, g->value), {}};
  });
}

sw_status sw_conjugate(const sw_function* f, const sw_domain* omega, sw_function** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    auto checked = conjugation(f->value, optional_domain(omega));
    *out = new sw_function{std::move(checked.value), std::move(checked.warnings)};
  });
}

sw_status sw_symmetrize(const sw_function* f, const sw_domain* omega, sw_function** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    auto checked = symmetrization(f->value, optional_domain(omega));
    *out = new sw_function{std::move(checked.value), std::move(checked.warnings)};
  });
}

sw_status sw_domain_parse(const char* json, sw_domain** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new sw_domain{io::parse_domain(json)};
  });
}

void sw_domain_free(sw_domain* d) { delete d; }

sw_status sw_domain_to_json(const sw_domain* d, char** out_json) {
  return guarded([&] {
    require(d, "d");
    require(out_json, "out_json");
    *out_json = duplicate(io::domain_to_json(d->value));
  });
}

sw_status sw_path_parse(const char* json, sw_path** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new sw_path{io::parse_path(json)};
  });
}

void sw_path_free(sw_path* p) { delete p; }

sw_status sw_domain_info(const sw_domain* d, const sw_path* path, uint64_t seed, char** out_json) {
  return guarded([&] {
    require(d, "d");
    require(out_json, "out_json");
    std::optional<PathCn> p;
    if (path != nullptr) p = path->value;
    *out_json = duplicate(io::domain_info_to_json(io::compute_domain_info(d->value, p, seed)));
  });
}

sw_status sw_find_zeros(const sw_function* f, const sw_domain* domain, uint64_t seed, int check_domain,
                        sw_zeroset** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    const auto* p = f->value.get_if<SlicePolynomial>();
    if (p == nullptr) throw Error(ErrorCode::InvalidArgument, "zeros are computed for polynomials only");
    const SliceDomain d = domain != nullptr ? domain->value : SliceDomain::whole_space(p->dimension());
    ZeroOptions options;
    options.seed = seed;
    options.check_domain = check_domain != 0;
    *out = new sw_zeroset{find_zeros(*p, d, options)};
  });
}

void sw_zeroset_free(sw_zeroset* z) { delete z; }

sw_status sw_zeroset_to_json(const sw_zeroset* z, char** out_json) {
  return guarded([&] {
    require(z, "z");
    require(out_json, "out_json");
    *out_json = duplicate(io::zeroset_to_json(z->value));
  });
}

sw_status sw_zeroset_to_csv(const sw_zeroset* z, char** out_csv) {
  return guarded([&] {
    require(z, "z");
    require(out_csv, "out_csv");
    *out_csv = duplicate(zeros_to_csv(z->value));
  });
}

sw_status sw_zeroset_plot_csv(const sw_zeroset* z, size_t units, uint64_t seed, char** out_csv) {
  return guarded([&] {
    require(z, "z");
    require(out_csv, "out_csv");
    const auto sample = units == 0 ? std::vector<ImaginaryUnit>{} : sphere_sample(units, seed);
    *out_csv = duplicate(emit_plot_data(z->value, sample));
  });
}

int sw_zeroset_domain_check_failed(const sw_zeroset* z) {
  if (z == nullptr) return 0;
  for (const auto& w : z->value.warnings) {
    if (w.rfind("DomainCheckFailed", 0) == 0) return 1;
  }
  return 0;
}

sw_status sw_representation_extend(const sw_quat* vJ, const sw_quat* vK, const sw_quat* J, const sw_quat* K,
                                   const sw_quat* I, sw_quat* out) {
  return guarded([&] {
    for (const void* p : {static_cast<const void*>(vJ), static_cast<const void*>(vK), static_cast<const void*>(J),
                          static_cast<const void*>(K), static_cast<const void*>(I), static_cast<const void*>(out)}) {
      require(p, "argument");
    }
    *out = to_c(representation_extend(from_c(vJ), from_c(vK), ImaginaryUnit(from_c(J)), ImaginaryUnit(from_c(K)),
                                      ImaginaryUnit(from_c(I))));
  });
}

sw_status sw_run_check(const char* config_json, char** out_report_json, int* all_pass) {
  return guarded([&] {
    require(out_report_json, "out_report_json");
    const OracleConfig config = config_json != nullptr ? io::parse_oracle_config(config_json) : OracleConfig{};
    const PropertyReport report = run_acceptance_suite(config);
    *out_report_json = duplicate(report.to_json());
    if (all_pass != nullptr) *all_pass = report.all_pass ? 1 : 0;
  });
}

}  // extern "C"
