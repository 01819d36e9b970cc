// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run. Each criterion combines the rows of the `check` report
// produced by the command-line binary with a cross-check computed here from
// the reference oracles. One PASS/FAIL line per criterion, then a summary.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sliceworks/error.hpp"
#include "sliceworks/io.hpp"
#include "sliceworks/zeros.hpp"

using namespace sliceworks;
using cd = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

Quaternion from_oracle(const oracle::Q& q) { return {q[0], q[1], q[2], q[3]}; }
oracle::Q to_oracle(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

SlicePolynomial poly_of(const std::vector<oracle::Q>& c) {
  std::vector<Quaternion> q;
  for (const auto& a : c) q.push_back(from_oracle(a));
  return SlicePolynomial::univariate(q);
}

std::vector<oracle::Q> coeffs_of(const SlicePolynomial& f) {
  std::vector<oracle::Q> out;
  for (const auto& a : f.coefficients()) out.push_back(to_oracle(a));
  return out;
}

// Coefficients of f^c * f, with f^c the coefficientwise conjugate.
std::vector<oracle::Q> oracle_symmetrized(const std::vector<oracle::Q>& f) {
  std::vector<oracle::Q> c;
  for (const auto& a : f) c.push_back(oracle::conj(a));
  return oracle::convolve(c, f);
}

// sum_k |c_k| |q|^k, the size against which residuals at q are measured.
double size_at(const std::vector<oracle::Q>& c, double r) {
  double s = 0.0, p = 1.0;
  for (const auto& a : c) {
    s += oracle::norm(a) * p;
    p *= r;
  }
  return std::max(s, 1e-300);
}

struct Run {
  int exit_code;
  std::string out;
  double seconds;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string("env -u SLICEWORKS_SEED ") + SLICEWORKS_CLI_PATH + " " + args;
  const auto start = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, "", 0.0};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, seconds};
}

struct Outcome {
  bool pass{true};
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Rows of the report for one criterion must exist and pass.
void suite_rows(const PropertyReport& report, int criterion, Outcome& o) {
  bool any = false;
  for (const auto& p : report.properties) {
    if (p.criterion != criterion) continue;
    any = true;
    o.require(p.pass, p.name + " residual " + fmt(p.max_residual) + " vs " + fmt(p.threshold));
  }
  o.require(any, "no report rows");
}

// ------------------------------------------------------------- cross-checks

Outcome representation_formula() {
  Outcome o;
  oracle::Random rng(1001);
  double worst = 0.0;
  const auto start = Clock::now();
  for (int t = 0; t < 1000; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const double x = rng.uniform(-1.5, 1.5), y = rng.uniform(-1.5, 1.5);
    oracle::Q J = rng.unit(), K = rng.unit(), I = rng.unit();
    while (oracle::dist(J, K) < 1e-3) K = rng.unit();
    const auto value = [&](const oracle::Q& u) { return oracle::eval(c, oracle::slice(x, y, u)); };
    const Quaternion got = representation_extend(from_oracle(value(J)), from_oracle(value(K)),
                                                 ImaginaryUnit::normalized(from_oracle(J)),
                                                 ImaginaryUnit::normalized(from_oracle(K)),
                                                 ImaginaryUnit::normalized(from_oracle(I)));
    worst = std::max(worst, oracle::dist(to_oracle(got), value(I)) / size_at(c, std::hypot(x, y)));
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(worst < 1e-9, "residual " + fmt(worst));
  o.require(seconds < 5.0, "took " + fmt(seconds) + " s");
  o.detail = o.detail.empty() ? "1000 cases, residual " + fmt(worst) + ", " + fmt(seconds) + " s" : o.detail;
  return o;
}

Outcome symmetrization_realness() {
  Outcome o;
  oracle::Random rng(1002);
  double worst_imag = 0.0, worst_diff = 0.0;
  for (int t = 0; t < 500; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const auto expected = oracle_symmetrized(c);
    const double scale = std::pow(oracle::coeff_scale(c), 2);
    const auto got = coeffs_of(symmetrized_polynomial(poly_of(c)));
    o.require(got.size() == expected.size(), "degree mismatch");
    if (got.size() != expected.size()) break;
    for (std::size_t k = 0; k < got.size(); ++k) {
      worst_imag = std::max(worst_imag, std::hypot(got[k][1], got[k][2], got[k][3]) / scale);
      worst_diff = std::max(worst_diff, oracle::dist(got[k], expected[k]) / scale);
    }
  }
  o.require(worst_imag < 1e-9, "imaginary part " + fmt(worst_imag));
  o.require(worst_diff < 1e-9, "oracle difference " + fmt(worst_diff));
  if (o.pass) o.detail = "500 polynomials, imaginary part " + fmt(worst_imag);
  return o;
}

Outcome real_point_identities() {
  Outcome o;
  oracle::Random rng(1003);
  const SliceDomain whole = SliceDomain::whole_space(1);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const SliceFunction f = poly_of(c);
    const SliceFunction fc = conjugation(f, whole).value;
    const SliceFunction fs = symmetrization(f, whole).value;
    for (int p = 0; p < 100; ++p) {
      const double x = rng.uniform(-1.5, 1.5);
      const oracle::Q fx = oracle::eval(c, {x, 0, 0, 0});
      const double s = size_at(c, std::abs(x));
      const auto at = [&](const SliceFunction& g) { return to_oracle(g.evaluate(SlicePoint::real({x}))); };
      worst = std::max(worst, oracle::dist(at(fc), oracle::conj(fx)) / s);
      const double n = oracle::norm(fx);
      worst = std::max(worst, oracle::dist(at(fs), {n * n, 0, 0, 0}) / (s * s));
    }
  }
  o.require(worst < 1e-9, "residual " + fmt(worst));
  if (o.pass) o.detail = "200 x 100 probes, residual " + fmt(worst);
  return o;
}

struct Product {
  std::vector<oracle::Q> coeffs;
  ZeroSet zeros;
  bool solved{true};
};

std::vector<Product> random_products() {
  oracle::Random rng(1004);
  std::vector<Product> out;
  for (int t = 0; t < 200; ++t) {
    std::vector<oracle::Q> c{{1, 0, 0, 0}};
    const int factors = 1 + static_cast<int>(rng.uniform(0, 5.99));
    oracle::Q previous{};
    for (int m = 0; m < factors; ++m) {
      oracle::Q a = rng.quaternion(2.0);
      if (rng.uniform(0, 1) < 0.15) a = {a[0], 0, 0, 0};
      if (m == 1 && t % 4 == 0) a = oracle::conj(previous);
      previous = a;
      c = oracle::convolve(c, {oracle::scale(-1.0, a), {1, 0, 0, 0}});
    }
    Product p{c, {}, true};
    try {
      p.zeros = find_zeros(poly_of(c), SliceDomain::whole_space(1));
    } catch (const Error&) {
      p.solved = false;
    }
    out.push_back(std::move(p));
  }
  return out;
}

Outcome zero_inclusion(const std::vector<Product>& products) {
  Outcome o;
  double worst = 0.0;
  std::size_t checked = 0;
  for (const auto& p : products) {
    o.require(p.solved, "solver failure");
    const auto s = oracle_symmetrized(p.coeffs);
    const auto residual = [&](const oracle::Q& q) { return oracle::norm(oracle::eval(s, q)) / size_at(s, oracle::norm(q)); };
    for (const auto& r : p.zeros.real_roots) worst = std::max(worst, residual({r.value, 0, 0, 0})), ++checked;
    for (const auto& z : p.zeros.isolated) worst = std::max(worst, residual(to_oracle(z.point))), ++checked;
    for (const auto& z : p.zeros.spheres) worst = std::max(worst, residual({z.x, z.y, 0, 0})), ++checked;
    unsigned total = p.zeros.total_multiplicity();
    o.require(total == p.coeffs.size() - 1, "multiplicities do not add up to the degree");
  }
  o.require(worst < 1e-6, "residual " + fmt(worst));
  if (o.pass) o.detail = std::to_string(checked) + " zeros, residual " + fmt(worst);
  return o;
}

Outcome sphere_propagation(const std::vector<Product>& products) {
  Outcome o;
  oracle::Random rng(1005);
  double worst = 0.0;
  std::size_t spheres = 0;
  for (const auto& p : products) {
    const auto s = oracle_symmetrized(p.coeffs);
    for (const auto& z : p.zeros.spheres) {
      ++spheres;
      const double r = std::hypot(z.x, z.y);
      for (int u = 0; u < 64; ++u) {
        const oracle::Q q = oracle::slice(z.x, z.y, rng.unit());
        worst = std::max(worst, oracle::norm(oracle::eval(s, q)) / size_at(s, r));
        if (z.kind == SphereKind::SphericalZero) {
          worst = std::max(worst, oracle::norm(oracle::eval(p.coeffs, q)) / size_at(p.coeffs, r));
        }
      }
    }
  }
  o.require(spheres > 0, "no spheres were produced");
  o.require(worst < 1e-6, "residual " + fmt(worst));
  if (o.pass) o.detail = std::to_string(spheres) + " spheres x 64 units, residual " + fmt(worst);
  return o;
}

Outcome canonical_roots() {
  Outcome o;
  const SliceDomain whole = SliceDomain::whole_space(1);
  const auto one = oracle::Q{1, 0, 0, 0};
  const auto lin = [&](const oracle::Q& a) { return std::vector<oracle::Q>{oracle::scale(-1.0, a), one}; };
  double worst = 0.0;
  const auto residual = [&](const std::vector<oracle::Q>& c, const oracle::Q& q) {
    worst = std::max(worst, oracle::norm(oracle::eval(c, q)) / size_at(c, oracle::norm(q)));
  };
  const auto sphere_only = [&](const std::vector<oracle::Q>& c, double x, double y, const char* name) {
    const ZeroSet z = find_zeros(poly_of(c), whole);
    const bool shape = z.real_roots.empty() && z.isolated.empty() && z.spheres.size() == 1 &&
                       z.spheres[0].kind == SphereKind::SphericalZero;
    o.require(shape, std::string(name) + " is not a single sphere");
    if (!shape) return;
    o.require(std::hypot(z.spheres[0].x - x, z.spheres[0].y - y) < 1e-8, std::string(name) + " sphere is misplaced");
    oracle::Random rng(1006);
    for (int u = 0; u < 64; ++u) residual(c, oracle::slice(z.spheres[0].x, z.spheres[0].y, rng.unit()));
  };

  try {
    sphere_only({one, {}, one}, 0.0, 1.0, "q^2 + 1");
    sphere_only(oracle::convolve(lin({1, 2, 0, 0}), lin({1, -2, 0, 0})), 1.0, 2.0, "(q - (1+2i)) * (q - (1-2i))");

    const auto ij = oracle::convolve(lin({0, 1, 0, 0}), lin({0, 0, 1, 0}));
    const ZeroSet a = find_zeros(poly_of(ij), whole);
    const bool isolated = a.real_roots.empty() && a.spheres.empty() && a.isolated.size() == 1;
    o.require(isolated, "(q - i) * (q - j) is not a single isolated zero");
    if (isolated) {
      o.require(oracle::dist(to_oracle(a.isolated[0].point), {0, 1, 0, 0}) < 1e-8, "(q - i) * (q - j) zero is not i");
      residual(ij, to_oracle(a.isolated[0].point));
    }

    const std::vector<oracle::Q> sq{{-1, 0, 0, 0}, {}, one};
    const ZeroSet b = find_zeros(poly_of(sq), whole);
    const bool two = b.isolated.empty() && b.spheres.empty() && b.real_roots.size() == 2;
    o.require(two, "q^2 - 1 does not have exactly two real roots");
    if (two) {
      o.require(std::abs(b.real_roots[0].value + 1) < 1e-8 && std::abs(b.real_roots[1].value - 1) < 1e-8,
                "q^2 - 1 roots are not -1 and 1");
      for (const auto& r : b.real_roots) residual(sq, {r.value, 0, 0, 0});
    }
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  o.require(worst < 1e-8, "residual " + fmt(worst));
  if (o.pass) o.detail = "4 functions, residual " + fmt(worst);
  return o;
}

Outcome star_algebra() {
  Outcome o;
  oracle::Random rng(1007);
  double law = 0.0, agreement = 0.0;
  const auto deg = [&] { return static_cast<std::size_t>(rng.uniform(0, 8.99)); };
  const auto diff = [](const SlicePolynomial& a, const SlicePolynomial& b) {
    const auto x = a.coefficients(), y = b.coefficients();
    double d = 0.0;
    for (std::size_t k = 0; k < std::max(x.size(), y.size()); ++k) {
      const Quaternion p = k < x.size() ? x[k] : Quaternion(), q = k < y.size() ? y[k] : Quaternion();
      d = std::max(d, abs(p - q));
    }
    return d;
  };
  const SlicePolynomial one = SlicePolynomial::constant(1, 1.0);
  for (int t = 0; t < 200; ++t) {
    const auto a = rng.poly(deg(), 1.0), b = rng.poly(deg(), 1.0), c = rng.poly(deg(), 1.0);
    const SlicePolynomial f = poly_of(a), g = poly_of(b), h = poly_of(c);
    law = std::max(law, diff(star_product(star_product(f, g), h), star_product(f, star_product(g, h))));
    law = std::max(law, std::max(diff(star_product(one, f), f), diff(star_product(f, one), f)));
    agreement = std::max(agreement, diff(star_product(f, g), poly_of(oracle::convolve(a, b))));
  }
  o.require(law < 1e-10, "associativity/unit residual " + fmt(law));
  o.require(agreement < 1e-12, "oracle agreement " + fmt(agreement));
  if (o.pass) o.detail = "200 triples, laws " + fmt(law) + ", oracle " + fmt(agreement);
  return o;
}

using Stem = std::array<oracle::Q, 2>;

// 1/2 (dF/dx + sigma dF/dy) with sigma (A, B) = (-B, A), by central differences.
double oracle_cr(const std::function<Stem(cd)>& stem, cd z, double h) {
  const Stem px = stem(z + h), mx = stem(z - h), py = stem(z + cd(0, h)), my = stem(z - cd(0, h));
  double r = 0.0;
  for (int m = 0; m < 4; ++m) {
    const double fx1 = (px[0][m] - mx[0][m]) / (2 * h), fx2 = (px[1][m] - mx[1][m]) / (2 * h);
    const double fy1 = (py[0][m] - my[0][m]) / (2 * h), fy2 = (py[1][m] - my[1][m]) / (2 * h);
    r = std::max(r, 0.5 * std::hypot(fx1 - fy2, fx2 + fy1));
  }
  return r;
}

// z -> sum_k (Re z^k, Im z^k) c_k.
std::function<Stem(cd)> polynomial_stem(const std::vector<oracle::Q>& c) {
  return [c](cd w) {
    Stem F{};
    cd p = 1.0;
    for (const auto& a : c) {
      F[0] = oracle::add(F[0], oracle::scale(p.real(), a));
      F[1] = oracle::add(F[1], oracle::scale(p.imag(), a));
      p *= w;
    }
    return F;
  };
}

Outcome stem_holomorphy() {
  Outcome o;
  oracle::Random rng(1008);
  const double h = 1e-5;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    std::vector<oracle::Q> cc;
    for (const auto& a : c) cc.push_back(oracle::conj(a));
    const cd z = std::polar(rng.uniform(0, 1), rng.uniform(0, 2 * M_PI));
    worst = std::max({worst, oracle_cr(polynomial_stem(c), z, h), oracle_cr(polynomial_stem(cc), z, h)});
  }
  // (x, -y): the stem of q -> conj(q), which is not slice regular.
  const auto reflection = [](cd w) { return Stem{oracle::Q{w.real(), 0, 0, 0}, oracle::Q{-w.imag(), 0, 0, 0}}; };
  const double counter = oracle_cr(reflection, cd(0.3, 0.4), h);
  o.require(worst < 1e-6, "oracle residual " + fmt(worst));
  o.require(counter > 0.5, "counterexample residual " + fmt(counter));
  if (o.pass) o.detail = "100 stems and conjugates, oracle residual " + fmt(worst);
  return o;
}

Outcome domain_geometry() {
  Outcome o;
  oracle::Random rng(1009);
  double worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const double c = rng.uniform(-2, 2), r = rng.uniform(0.5, 3);
    const SliceDomain d(1, PlanarRegion::disk(0, c, r));
    const cd z = cd(c, 0.0) + std::polar(rng.uniform(0, 0.9) * r, rng.uniform(0, 2 * M_PI));
    const PathCn path = ray_from_real({z});
    const double expected = r - std::abs(z - c);
    worst = std::max(worst, std::abs(radius_for_units(d, path, sphere_sample(16, t)) - expected));
    worst = std::max(worst, std::abs(radius_path_ball(d, path, t) - expected));
    worst = std::max(worst, std::abs(radius_two_units(d, path, t) - expected));
  }
  o.require(worst < 1e-12, "radius error " + fmt(worst));

  const SliceDomain glued(1, PlanarRegion::disk(0, 0.0, 1.0),
                          {Attachment{ImaginaryUnit::i(), PlanarRegion::disk(0, cd(0.0, 1.25), 0.9)}});
  const SliceUnitSet units = slice_units(glued, ray_from_real({cd(0.0, 2.0)}), 0);
  o.require(!units.all_of_sphere && units.size() == 1 && units.units[0] == ImaginaryUnit::i(),
            "slice units are not exactly {i}");

  // Walk a latitude/longitude grid through i: only i may lift the path.
  std::size_t lifting = 0;
  for (int a = 1; a < 30; ++a) {
    for (int b = 0; b < 60; ++b) {
      const double th = M_PI * a / 30, ph = 2 * M_PI * b / 60;
      const ImaginaryUnit I = ImaginaryUnit::normalized(
          Quaternion(0, std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)));
      bool ok = true;
      for (int s = 0; s <= 100 && ok; ++s) ok = glued.contains({cd(0.0, 2.0 * s / 100)}, I);
      lifting += ok ? 1 : 0;
    }
  }
  o.require(lifting == 1, "grid oracle found " + std::to_string(lifting) + " lifting units");

  const DomainCheckReport r = check_self_stem_preserving(glued, 48, 0);
  o.require(r.verdict == Verdict::Violated, "stem-preserving check did not flag the counterexample");
  o.require(!r.witnesses.empty() && replay_violation(glued, glued, r.witnesses.front(), 0),
            "violation witness does not replay");
  if (o.pass) o.detail = "radius error " + fmt(worst) + ", units {i}, violation replayed";
  return o;
}

}  // namespace

int main() {
  const Run first = run_cli("check");
  const Run second = run_cli("check");

  PropertyReport report;
  bool report_ok = true;
  std::string report_error;
  try {
    report = io::parse_property_report(first.out);
  } catch (const Error& e) {
    report_ok = false;
    report_error = e.what();
  }

  const std::vector<Product> products = random_products();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"representation formula", representation_formula},
      {"symmetrization realness", symmetrization_realness},
      {"real-point identities", real_point_identities},
      {"zero inclusion", [&] { return zero_inclusion(products); }},
      {"sphere propagation", [&] { return sphere_propagation(products); }},
      {"canonical roots", canonical_roots},
      {"star algebra", star_algebra},
      {"stem holomorphy", stem_holomorphy},
      {"domain geometry", domain_geometry},
      {"determinism", [&] {
         Outcome o;
         o.require(first.out == second.out, "two check runs differ");
         o.require(!first.out.empty(), "empty report");
         if (o.pass) o.detail = "two check runs byte-identical (" + std::to_string(first.out.size()) + " bytes)";
         return o;
       }},
  };

  int passed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    if (report_ok) {
      suite_rows(report, id, o);
    } else {
      o.require(false, "check report unreadable: " + report_error);
    }
    o.require(first.exit_code == 0, "check exited " + std::to_string(first.exit_code));
    o.require(first.seconds < 60.0, "check took " + fmt(first.seconds) + " s");
    passed += o.pass ? 1 : 0;
    std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", criteria[c].first.c_str(), o.detail.c_str());
  }
  std::printf("acceptance: %d/%zu criteria pass; check ran in %.2f s\n", passed, criteria.size(), first.seconds);
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
