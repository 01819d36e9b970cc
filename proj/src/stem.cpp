// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/stem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sliceworks/error.hpp"

namespace sliceworks {

double stem_distance(const StemValue& a, const StemValue& b) {
  return std::max(abs(a.f1 - b.f1), abs(a.f2 - b.f2));
}

double stem_norm(const StemValue& f) { return std::sqrt(norm2(f.f1) + norm2(f.f2)); }

Quaternion eval_stem(const StemValue& f, const ImaginaryUnit& unit) { return f.f1 + unit.value() * f.f2; }

StemValue star(const StemValue& f, const StemValue& g) {
  return {f.f1 * g.f1 - f.f2 * g.f2, f.f1 * g.f2 + f.f2 * g.f1};
}

StemValue stem_from_two_slices(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                               const ImaginaryUnit& K) {
  const auto [f1, f2] = vandermonde2_inverse(J, K).apply(vJ, vK);
  return {f1, f2};
}

StemValue reflect_stem(const StemValue& f) { return {f.f1, -f.f2}; }

StemValue conj_stem(const StemValue& f) { return {conj(f.f1), conj(f.f2)}; }

StemValue sym_stem(const StemValue& f) {
  const StemValue s = star(conj_stem(f), f);
  const double bound = 1e-9 * (norm2(f.f1) + norm2(f.f2));
  const double imag = std::max(abs(s.f1.imag()), abs(s.f2.imag()));
  if (imag > bound) {
    throw Error(ErrorCode::NonRealSymmetrization, "symmetrized stem has imaginary part " + std::to_string(imag));
  }
  return {Quaternion(s.f1.w), Quaternion(s.f2.w)};
}

StemValue point_stem(const PathStem& f, const SliceDomain& omega1, const SlicePoint& q, std::uint64_t seed) {
  if (!omega1.contains(q)) throw Error(ErrorCode::OutOfDomain, "point lies outside the domain");
  if (q.is_real()) {
    return real_endpoint_stem(f(PathCn::constant(real_part(q.coords))).f1);
  }
  const auto path = find_witness_path(omega1, q, seed);
  if (!path) throw Error(ErrorCode::NoWitnessPath, "no real-anchored path to the point was found");
  return f(*path);
}

HolomorphyReport check_stem_holomorphic(const PathStem& f, const PathCn& path, double r, double h) {
  if (!(h > 0.0) || !(h < r / 4.0)) {
    throw Error(ErrorCode::StepOutOfRange, "finite-difference step must satisfy 0 < h < r/4");
  }
  const std::size_t n = path.dimension();
  const Point& p = path.endpoint();

  std::vector<Point> centers{p};
  for (int k = 0; k < 8; ++k) {
    Point w = p;
    w[static_cast<std::size_t>(k) % n] += std::polar(r / 2.0, std::numbers::pi * k / 4.0);
    centers.push_back(std::move(w));
  }

  HolomorphyReport report;
  for (const Point& w : centers) {
    const PathCn to_w = (w == p) ? path : extend(path, w);
    const auto at = [&](std::size_t l, std::complex<double> step) {
      Point v = w;
      v[l] += step;
      return f(extend(to_w, v));
    };
    for (std::size_t l = 0; l < n; ++l) {
      const StemValue xp = at(l, {h, 0.0});
      const StemValue xm = at(l, {-h, 0.0});
      const StemValue yp = at(l, {0.0, h});
      const StemValue ym = at(l, {0.0, -h});
      const Quaternion dx1 = (xp.f1 - xm.f1) * (1.0 / (2.0 * h));
      const Quaternion dx2 = (xp.f2 - xm.f2) * (1.0 / (2.0 * h));
      const Quaternion dy1 = (yp.f1 - ym.f1) * (1.0 / (2.0 * h));
      const Quaternion dy2 = (yp.f2 - ym.f2) * (1.0 / (2.0 * h));
      // sigma maps the column (a, b) to (-b, a).
      const StemValue residual{(dx1 - dy2) * 0.5, (dx2 + dy1) * 0.5};
      report.max_residual = std::max(report.max_residual, stem_norm(residual));
    }
    ++report.evaluation_points;
  }
  return report;
}

}  // namespace sliceworks
