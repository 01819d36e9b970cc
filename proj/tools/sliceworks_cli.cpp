// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Everything goes through the C interface of the
// shared library.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sliceworks/sliceworks.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCheckFailed = 4;

struct Failure {
  int code;
  std::string message;
};

void check(sw_status status) {
  if (status != SW_OK) throw Failure{sw_exit_code(status), sw_last_error()};
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr{nullptr};
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};
using Function = Handle<sw_function, sw_function_free>;
using Domain = Handle<sw_domain, sw_domain_free>;
using Path = Handle<sw_path, sw_path_free>;
using ZeroSet = Handle<sw_zeroset, sw_zeroset_free>;

std::string take(char* s) {
  std::string out(s);
  sw_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void load(const std::string& file, Function& f) {
  const std::string text = read_file(file);
  const sw_status s = sw_function_parse(text.c_str(), &f.ptr);
  if (s != SW_OK) throw Failure{sw_exit_code(s), file + ": " + sw_last_error()};
}

void load(const std::string& file, Domain& d) {
  const std::string text = read_file(file);
  const sw_status s = sw_domain_parse(text.c_str(), &d.ptr);
  if (s != SW_OK) throw Failure{sw_exit_code(s), file + ": " + sw_last_error()};
}

void load(const std::string& file, Path& p) {
  const std::string text = read_file(file);
  const sw_status s = sw_path_parse(text.c_str(), &p.ptr);
  if (s != SW_OK) throw Failure{sw_exit_code(s), file + ": " + sw_last_error()};
}

void emit(const std::string& text, const std::string& out_file) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body.push_back('\n');
  if (out_file.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out || !(out << body)) throw Failure{kExitIo, "cannot write " + out_file};
}

sw_quat parse_quat(const std::string& text, const char* flag) {
  sw_quat q;
  const sw_status s = sw_parse_quaternion(text.c_str(), &q);
  if (s != SW_OK) throw Failure{sw_exit_code(s), std::string(flag) + ": " + sw_last_error()};
  return q;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("SLICEWORKS_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Failure{kExitUsage, "SLICEWORKS_SEED must be a non-negative integer"};
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice analysis of quaternionic polynomials and domains"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sw_version()));

  std::string out_file;
  std::optional<std::uint64_t> seed_flag;
  std::string domain_file;

  auto* roots = app.add_subcommand("roots", "Zeros of a one-variable polynomial");
  std::string roots_input;
  std::string format = "json";
  std::size_t plot_units = 64;
  bool check_domain = false;
  roots->add_option("--input", roots_input, "Function file (JSON)")->required();
  roots->add_option("--domain", domain_file, "Domain file (JSON); whole space when omitted");
  roots->add_option("--seed", seed_flag, "Sampling seed");
  roots->add_option("--format", format, "json, csv or plot")->check(CLI::IsMember({"json", "csv", "plot"}));
  roots->add_option("--units", plot_units, "Units per sphere in plot output");
  roots->add_flag("--check-domain", check_domain, "Check that the domain is self-stem-preserving");
  roots->add_option("--out", out_file, "Output file");

  std::vector<std::string> unary_input(1);
  auto* symmetrize = app.add_subcommand("symmetrize", "Symmetrization f^c * f");
  auto* conjugate = app.add_subcommand("conjugate", "Slice conjugation");
  for (auto* sub : {symmetrize, conjugate}) {
    sub->add_option("--input", unary_input[0], "Function file (JSON)")->required();
    sub->add_option("--domain", domain_file, "Domain file used to check preconditions");
    sub->add_option("--out", out_file, "Output file");
  }

  auto* star = app.add_subcommand("star", "*-product of two functions");
  std::vector<std::string> star_inputs;
  star->add_option("--input", star_inputs, "Function files, given twice in factor order")
      ->required()
      ->expected(1, 2)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  star->add_option("--out", out_file, "Output file");

  auto* extend = app.add_subcommand("extend", "Value on the slice of I from values on the slices of J and K");
  std::string vj, vk, uj, uk, ui;
  extend->add_option("--vj", vj, "Value on the slice of J")->required();
  extend->add_option("--vk", vk, "Value on the slice of K")->required();
  extend->add_option("--J", uj, "Unit J")->required();
  extend->add_option("--K", uk, "Unit K")->required();
  extend->add_option("--I", ui, "Target unit I")->required();
  extend->add_option("--out", out_file, "Output file");

  auto* info = app.add_subcommand("domain-info", "Slice units, radii and domain checks");
  std::string path_file;
  info->add_option("--domain", domain_file, "Domain file (JSON)")->required();
  info->add_option("--path", path_file, "Path file (JSON)");
  info->add_option("--seed", seed_flag, "Sampling seed");
  info->add_option("--out", out_file, "Output file");

  auto* check_cmd = app.add_subcommand("check", "Randomized property suite");
  std::size_t trials = 1000;
  unsigned degree_cap = 8;
  double coeff_cap = 4.0;
  std::size_t unit_samples = 64;
  double fd_step = 1e-5;
  check_cmd->add_option("--seed", seed_flag, "Suite seed");
  check_cmd->add_option("--trials", trials, "Upper bound on trials per property");
  check_cmd->add_option("--degree-cap", degree_cap, "Largest random degree");
  check_cmd->add_option("--coeff-cap", coeff_cap, "Largest coefficient norm");
  check_cmd->add_option("--unit-samples", unit_samples, "Units per sampled sphere");
  check_cmd->add_option("--fd-step", fd_step, "Finite-difference step");
  check_cmd->add_option("--out", out_file, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();
    Domain domain;
    if (!domain_file.empty()) load(domain_file, domain);

    if (roots->parsed()) {
      Function f;
      load(roots_input, f);
      ZeroSet z;
      check(sw_find_zeros(f.ptr, domain.ptr, seed, check_domain ? 1 : 0, &z.ptr));
      char* text = nullptr;
      if (format == "json") {
        check(sw_zeroset_to_json(z.ptr, &text));
      } else if (format == "csv") {
        check(sw_zeroset_to_csv(z.ptr, &text));
      } else {
        check(sw_zeroset_plot_csv(z.ptr, plot_units, seed, &text));
      }
      emit(take(text), out_file);
      if (sw_zeroset_domain_check_failed(z.ptr)) {
        std::cerr << "warning: the domain failed the self-stem-preserving check\n";
        return sw_exit_code(SW_ERR_DOMAIN_CHECK_FAILED);
      }
      return 0;
    }
    if (symmetrize->parsed() || conjugate->parsed()) {
      Function f;
      load(unary_input[0], f);
      Function result;
      check(symmetrize->parsed() ? sw_symmetrize(f.ptr, domain.ptr, &result.ptr)
                                 : sw_conjugate(f.ptr, domain.ptr, &result.ptr));
      char* text = nullptr;
      check(sw_function_to_json(result.ptr, &text));
      emit(take(text), out_file);
      return 0;
    }
    if (star->parsed()) {
      if (star_inputs.size() != 2) throw Failure{kExitUsage, "star needs --input twice"};
      Function f;
      Function g;
      load(star_inputs[0], f);
      load(star_inputs[1], g);
      Function result;
      check(sw_star(f.ptr, g.ptr, &result.ptr));
      char* text = nullptr;
      check(sw_function_to_json(result.ptr, &text));
      emit(take(text), out_file);
      return 0;
    }
    if (extend->parsed()) {
      const sw_quat a = parse_quat(vj, "--vj");
      const sw_quat b = parse_quat(vk, "--vk");
      const sw_quat J = parse_quat(uj, "--J");
      const sw_quat K = parse_quat(uk, "--K");
      const sw_quat I = parse_quat(ui, "--I");
      sw_quat value;
      check(sw_representation_extend(&a, &b, &J, &K, &I, &value));
      char* text = nullptr;
      check(sw_quaternion_to_json(&value, &text));
      emit(take(text), out_file);
      return 0;
    }
    if (info->parsed()) {
      Path path;
      if (!path_file.empty()) load(path_file, path);
      char* text = nullptr;
      check(sw_domain_info(domain.ptr, path.ptr, seed, &text));
      emit(take(text), out_file);
      return 0;
    }
    if (check_cmd->parsed()) {
      char config[512];
      std::snprintf(config, sizeof config,
                    "{\"seed\": %" PRIu64 ", \"trials\": %zu, \"degree_cap\": %u, \"coeff_norm_cap\": %.17g, "
                    "\"unit_samples\": %zu, \"fd_step\": %.17g}",
                    seed, trials, degree_cap, coeff_cap, unit_samples, fd_step);
      char* text = nullptr;
      int all_pass = 0;
      check(sw_run_check(config, &text, &all_pass));
      emit(take(text), out_file);
      return all_pass ? 0 : kExitCheckFailed;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}
