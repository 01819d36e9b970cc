// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "format.hpp"
#include "sliceworks/error.hpp"
#include "sliceworks/random.hpp"

namespace sliceworks {
namespace {

using detail::format_double;

// g / (q^2 - 2xq + x^2 + y^2). The divisor is real, so it commutes with every
// coefficient and ordinary synthetic division applies.
std::vector<Quaternion> divide_by_sphere(const std::vector<Quaternion>& g, double x, double y) {
  const double b = -2.0 * x;
  const double c = x * x + y * y;
  std::vector<Quaternion> rem = g;
  std::vector<Quaternion> q(g.size() - 2);
  for (std::size_t k = g.size() - 1; k >= 2; --k) {
    const Quaternion lead = rem[k];
    q[k - 2] = lead;
    rem[k] = Quaternion();
    rem[k - 1] -= b * lead;
    rem[k - 2] -= c * lead;
  }
  return q;
}

// Coefficients of the symmetrization, accumulated in long double. The k-th
// coefficient is the sum of <a_i, a_j> over i + j = k.
std::vector<long double> symmetrized_coefficients(const std::vector<Quaternion>& a) {
  std::vector<long double> out(2 * a.size() - 1, 0.0L);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out[i + j] += static_cast<long double>(a[i].w) * a[j].w + static_cast<long double>(a[i].x) * a[j].x +
                    static_cast<long double>(a[i].y) * a[j].y + static_cast<long double>(a[i].z) * a[j].z;
    }
  }
  return out;
}

bool below(const StemValue& s, double tol) { return abs(s.f1) < tol && abs(s.f2) < tol; }

bool sphere_meets_domain(const SliceDomain& domain, std::complex<double> z) {
  const Point p{z};
  if (domain.axial_contains(p)) return true;
  for (const auto& a : domain.attachments()) {
    if (domain.contains(p, a.unit) || domain.contains(p, -a.unit)) return true;
  }
  return false;
}

}  // namespace

const char* to_string(SphereKind kind) noexcept {
  return kind == SphereKind::SphericalZero ? "spherical_zero_of_f" : "symmetrization_only";
}

unsigned ZeroSet::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& r : real_roots) total += r.multiplicity;
  for (const auto& z : isolated) total += z.multiplicity;
  for (const auto& s : spheres) total += (s.kind == SphereKind::SphericalZero ? 2 : 1) * s.multiplicity;
  return total;
}

SlicePolynomial symmetrized_polynomial(const SlicePolynomial& f) {
  const SlicePolynomial s = star_product(conjugate_coefficients(f), f);
  const double bound = 1e-9 * s.scale();
  auto terms = s.terms();
  for (auto& [k, a] : terms) {
    if (abs(a.imag()) > bound) {
      throw Error(ErrorCode::NonRealSymmetrization, "symmetrized coefficient is not real");
    }
    a = Quaternion(a.w);
  }
  return SlicePolynomial(f.dimension(), std::move(terms));
}

ZeroSet find_zeros(const SlicePolynomial& f, const SliceDomain& domain, const ZeroOptions& options) {
  if (f.dimension() != 1) {
    throw Error(ErrorCode::InvalidArgument, "zeros are computed for one-variable polynomials only");
  }
  if (domain.dimension() != 1) throw Error(ErrorCode::IncompatibleDomains, "domain must have one variable");
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "zeros need a polynomial of degree >= 1");

  ZeroSet out;
  if (options.check_domain) {
    const DomainCheckReport r = check_self_stem_preserving(domain, options.domain_samples, options.seed);
    if (r.verdict == Verdict::Violated) {
      out.warnings.push_back("DomainCheckFailed: domain is not self-stem-preserving (witness: " +
                             r.witnesses.front().kind + ")");
    }
  } else if (!domain.is_axially_symmetric()) {
    out.warnings.emplace_back("PreconditionUnverified: the domain was not checked for self-stem preservation");
  }

  const double scale = f.scale();
  const double tol_root = 1e-8 * scale;
  const double tol_sph = 1e-9 * scale;

  const std::vector<Quaternion> fc = f.coefficients();

  for (const ComplexRoot& root : complex_roots(symmetrized_coefficients(fc))) {
    const double x = root.value.real();
    const double y = root.value.imag();
    if (y < 0.0) continue;
    if (y == 0.0) {
      if (!domain.contains_real({{x, 0.0}})) continue;
      if (abs(f.evaluate(SlicePoint::real({x}))) >= tol_root) {
        out.warnings.push_back("real root " + format_double(x) + " of the symmetrization is not a zero of f");
        continue;
      }
      if (root.multiplicity % 2 != 0) {
        out.warnings.push_back("real root " + format_double(x) + " has odd multiplicity in the symmetrization");
      }
      out.real_roots.push_back({x, (root.multiplicity + 1) / 2});
      continue;
    }
    if (!sphere_meets_domain(domain, root.value)) continue;

    // Peel off whole spheres while the stem vanishes there.
    std::vector<Quaternion> g = fc;
    unsigned spherical = 0;
    while (2 * (spherical + 1) <= root.multiplicity && g.size() >= 3 &&
           below(SlicePolynomial::univariate(g).stem_at({root.value}), tol_sph)) {
      g = divide_by_sphere(g, x, y);
      ++spherical;
    }
    if (spherical > 0) out.spheres.push_back({x, y, spherical, SphereKind::SphericalZero});

    const unsigned remaining = root.multiplicity - 2 * spherical;
    if (remaining == 0) continue;
    const StemValue s = SlicePolynomial::univariate(g).stem_at({root.value});
    bool accepted = false;
    if (abs(s.f2) >= tol_sph) {
      const Quaternion unit = -(s.f1 * inverse(s.f2));
      if (std::abs(unit.w) < 1e-8 && std::abs(abs(unit) - 1.0) < 1e-8) {
        const ImaginaryUnit I = ImaginaryUnit::normalized(unit);
        const SlicePoint q = SlicePoint::on_slice({root.value}, I);
        if (abs(f.evaluate(q)) < tol_root) {
          accepted = true;
          if (domain.contains(q)) out.isolated.push_back({embed(root.value, I), x, y, remaining});
        }
      }
    }
    if (!accepted) out.spheres.push_back({x, y, remaining, SphereKind::SymmetrizationOnly});
  }

  std::sort(out.real_roots.begin(), out.real_roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  std::sort(out.isolated.begin(), out.isolated.end(), [](const IsolatedZero& a, const IsolatedZero& b) {
    return std::tie(a.x, a.y, a.point.x, a.point.y, a.point.z) < std::tie(b.x, b.y, b.point.x, b.point.y, b.point.z);
  });
  std::stable_sort(out.spheres.begin(), out.spheres.end(),
                   [](const SphereZero& a, const SphereZero& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  return out;
}

ResidualReport zero_inclusion_check(const SlicePolynomial& f, const ZeroSet& zeros) {
  const SlicePolynomial s = symmetrized_polynomial(f);
  ResidualReport report;
  report.threshold = 1e-6 * s.scale();
  const auto record = [&](const SlicePoint& q) {
    report.max_residual = std::max(report.max_residual, abs(s.evaluate(q)));
    ++report.checked;
  };
  for (const auto& r : zeros.real_roots) record(SlicePoint::real({r.value}));
  for (const auto& z : zeros.isolated) record(to_slice_point(std::span<const Quaternion>(&z.point, 1)));
  for (const auto& sp : zeros.spheres) record(SlicePoint::on_slice({{sp.x, sp.y}}, ImaginaryUnit::i()));
  return report;
}

ResidualReport sphere_propagation_check(const SlicePolynomial& f, double x, double y,
                                        const std::vector<ImaginaryUnit>& units) {
  const SlicePolynomial s = symmetrized_polynomial(f);
  ResidualReport report;
  report.threshold = 1e-6 * s.scale();
  for (const auto& unit : units) {
    report.max_residual = std::max(report.max_residual, abs(s.evaluate(SlicePoint::on_slice({{x, y}}, unit))));
    ++report.checked;
  }
  return report;
}

AnalyticWitness analytic_witness(const SlicePolynomial& f, const SliceDomain& domain, const PathCn& path,
                                 std::uint64_t seed) {
  if (f.dimension() != domain.dimension() || path.dimension() != domain.dimension()) {
    throw Error(ErrorCode::IncompatibleDomains, "function, domain and path dimensions differ");
  }
  AnalyticWitness w;
  w.path = path;
  const SlicePolynomial s = symmetrized_polynomial(f);
  w.e = s;
  if (s.is_zero()) {
    w.whole_domain = true;
    w.verified = true;
    return w;
  }

  const SliceUnitSet units = slice_units(domain, path, seed);
  w.r = std::min(radius_two_units(domain, path, seed), 1.0);
  const Point& center = path.endpoint();
  for (const auto& unit : units.units) {
    w.r_per_unit.emplace_back(unit, std::min(w.r, domain.boundary_distance(center, unit)));
  }

  // E is f^s read on C^n; on the slice of I it must reproduce f^s. Residuals
  // are relative to the size of the terms of E at the sample point.
  const std::size_t n = center.size();
  const auto e_on_slice = [&](const Point& z, const ImaginaryUnit& unit) {
    const StemValue st = s.stem_at(z);
    return embed({st.f1.w, st.f2.w}, unit);
  };
  const auto term_size = [&](const Point& z) {
    double total = 1.0;
    for (const auto& [k, a] : s.terms()) {
      double m = abs(a);
      for (std::size_t l = 0; l < n; ++l) m *= std::pow(std::abs(z[l]), static_cast<double>(k[l]));
      total += m;
    }
    return total;
  };
  const auto record = [&](double value, const Point& z) {
    w.max_containment_residual = std::max(w.max_containment_residual, value / term_size(z));
    ++w.containment_samples;
  };
  Rng rng(seed ^ 0x243f6a8885a308d3ULL);
  for (std::size_t t = 0; t < 64 && !w.r_per_unit.empty(); ++t) {
    const auto& [unit, radius] = w.r_per_unit[t % w.r_per_unit.size()];
    Point z = center;
    for (auto& c : z) {
      c += std::polar(radius * rng.uniform(), 6.283185307179586 * rng.uniform()) / std::sqrt(static_cast<double>(n));
    }
    record(abs(s.evaluate(SlicePoint::on_slice(z, unit)) - e_on_slice(z, unit)), z);
  }
  if (n == 1 && s.degree() >= 1) {
    for (const ComplexRoot& root : complex_roots(symmetrized_coefficients(f.coefficients()))) {
      for (const auto& [unit, radius] : w.r_per_unit) {
        if (std::abs(root.value - center[0]) < radius) record(abs(e_on_slice({root.value}, unit)), {root.value});
      }
    }
  }
  w.verified = w.max_containment_residual < 1e-8;
  return w;
}

std::string zeros_to_csv(const ZeroSet& zeros) {
  std::ostringstream out;
  out << "kind,x,y,w,qx,qy,qz,multiplicity\r\n";
  for (const auto& r : zeros.real_roots) {
    out << "real," << format_double(r.value) << ",0," << format_double(r.value) << ",0,0,0," << r.multiplicity
        << "\r\n";
  }
  for (const auto& z : zeros.isolated) {
    out << "isolated," << format_double(z.x) << ',' << format_double(z.y) << ',' << format_double(z.point.w) << ','
        << format_double(z.point.x) << ',' << format_double(z.point.y) << ',' << format_double(z.point.z) << ','
        << z.multiplicity << "\r\n";
  }
  for (const auto& s : zeros.spheres) {
    out << (s.kind == SphereKind::SphericalZero ? "sphere" : "symmetrization_only") << ',' << format_double(s.x)
        << ',' << format_double(s.y) << ",,,,," << s.multiplicity << "\r\n";
  }
  return out.str();
}

std::string emit_plot_data(const ZeroSet& zeros, const std::vector<ImaginaryUnit>& units) {
  struct Row {
    std::string kind;
    double x;
    double y;
    Quaternion unit;
  };
  std::vector<Row> rows;
  for (const auto& r : zeros.real_roots) rows.push_back({"real", r.value, 0.0, Quaternion()});
  for (const auto& z : zeros.isolated) {
    rows.push_back({"isolated", z.x, z.y, ImaginaryUnit::normalized(z.point).value()});
  }
  for (const auto& s : zeros.spheres) {
    const char* kind = s.kind == SphereKind::SphericalZero ? "sphere" : "symmetrization_only";
    for (const auto& u : units) rows.push_back({kind, s.x, s.y, u.value()});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return std::tie(a.kind, a.x, a.y) < std::tie(b.kind, b.x, b.y); });
  std::ostringstream out;
  out << "x,y,unit_w,unit_x,unit_y,unit_z,kind\r\n";
  for (const Row& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.unit.w) << ','
        << format_double(r.unit.x) << ',' << format_double(r.unit.y) << ',' << format_double(r.unit.z) << ','
        << r.kind << "\r\n";
  }
  return out.str();
}

}  // namespace sliceworks
