// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/path.hpp"

#include <algorithm>
#include <cmath>

#include "sliceworks/error.hpp"

namespace sliceworks {

Point real_part(const Point& z) {
  Point out(z.size());
  for (std::size_t l = 0; l < z.size(); ++l) out[l] = {z[l].real(), 0.0};
  return out;
}

Point conj(const Point& z) {
  Point out(z.size());
  for (std::size_t l = 0; l < z.size(); ++l) out[l] = std::conj(z[l]);
  return out;
}

double distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "points of different dimension");
  double s = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l) s += std::norm(a[l] - b[l]);
  return std::sqrt(s);
}

double norm(const Point& z) {
  double s = 0.0;
  for (auto c : z) s += std::norm(c);
  return std::sqrt(s);
}

bool is_real_point(const Point& z) {
  return std::all_of(z.begin(), z.end(), [](std::complex<double> c) {
    return std::abs(c.imag()) <= 1e-10 * (1.0 + std::abs(c));
  });
}

PathCn::PathCn(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidArgument, "a path needs at least one vertex");
  const std::size_t n = vertices_.front().size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a path lives in C^n with n >= 1");
  for (const Point& v : vertices_) {
    if (v.size() != n) throw Error(ErrorCode::InvalidArgument, "path vertices have mixed dimensions");
  }
  for (auto& c : vertices_.front()) c = {c.real(), 0.0};
}

Point PathCn::at(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  if (vertices_.size() == 1) return vertices_.front();
  std::vector<double> cumulative(vertices_.size(), 0.0);
  for (std::size_t s = 1; s < vertices_.size(); ++s) {
    cumulative[s] = cumulative[s - 1] + distance(vertices_[s - 1], vertices_[s]);
  }
  const double total = cumulative.back();
  if (total == 0.0) return vertices_.back();
  const double target = t * total;
  std::size_t s = 1;
  while (s + 1 < vertices_.size() && cumulative[s] < target) ++s;
  const double len = cumulative[s] - cumulative[s - 1];
  const double u = len > 0.0 ? (target - cumulative[s - 1]) / len : 1.0;
  Point out(dimension());
  for (std::size_t l = 0; l < out.size(); ++l) out[l] = vertices_[s - 1][l] + u * (vertices_[s][l] - vertices_[s - 1][l]);
  return out;
}

std::vector<Point> PathCn::trace(std::size_t per_segment) const {
  std::vector<Point> out;
  out.reserve(vertices_.size() + per_segment * segment_count());
  out.push_back(vertices_.front());
  for (std::size_t s = 1; s < vertices_.size(); ++s) {
    const Point& a = vertices_[s - 1];
    const Point& b = vertices_[s];
    for (std::size_t p = 1; p <= per_segment; ++p) {
      const double u = static_cast<double>(p) / static_cast<double>(per_segment + 1);
      Point mid(a.size());
      for (std::size_t l = 0; l < a.size(); ++l) mid[l] = a[l] + u * (b[l] - a[l]);
      out.push_back(std::move(mid));
    }
    out.push_back(b);
  }
  return out;
}

std::vector<SlicePoint> lift(const PathCn& path, const ImaginaryUnit& unit) {
  std::vector<SlicePoint> out;
  out.reserve(path.vertices().size());
  for (const Point& v : path.vertices()) out.push_back(SlicePoint::on_slice(v, unit));
  return out;
}

PathCn conj_path(const PathCn& path) {
  std::vector<Point> vs;
  vs.reserve(path.vertices().size());
  for (const Point& v : path.vertices()) vs.push_back(conj(v));
  return PathCn(std::move(vs));
}

PathCn extend(const PathCn& path, const Point& z) {
  if (z.size() != path.dimension()) throw Error(ErrorCode::InvalidArgument, "extension point has wrong dimension");
  std::vector<Point> vs = path.vertices();
  vs.push_back(z);
  return PathCn(std::move(vs));
}

PathCn ray_from_real(const Point& z) {
  if (is_real_point(z)) return PathCn::constant(real_part(z));
  return PathCn({real_part(z), z});
}

PathCn PathBall::member(const Point& z) const {
  if (!contains(z)) throw Error(ErrorCode::OutOfDomain, "point outside the path ball");
  return extend(base, z);
}

}  // namespace sliceworks
