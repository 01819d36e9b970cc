// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "sliceworks/quaternion.hpp"

namespace sliceworks {

/// A point of C^n.
using Point = std::vector<std::complex<double>>;

Point real_part(const Point& z);
Point conj(const Point& z);
double distance(const Point& a, const Point& b);
double norm(const Point& z);
bool is_real_point(const Point& z);

/// Polyline in C^n starting on R^n, parameterized proportionally to arc length.
class PathCn {
 public:
  /// The first vertex has its imaginary parts zeroed.
  explicit PathCn(std::vector<Point> vertices);

  static PathCn constant(const Point& p) { return PathCn({p}); }

  std::size_t dimension() const { return vertices_.front().size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& start() const { return vertices_.front(); }
  const Point& endpoint() const { return vertices_.back(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }

  Point at(double t) const;

  /// Vertices plus `per_segment` evenly spaced interior points on each segment.
  std::vector<Point> trace(std::size_t per_segment) const;

  friend bool operator==(const PathCn&, const PathCn&) = default;

 private:
  std::vector<Point> vertices_;
};

/// Vertexwise image of the path in the slice of `unit`.
std::vector<SlicePoint> lift(const PathCn& path, const ImaginaryUnit& unit);

/// Componentwise complex conjugate of every vertex.
PathCn conj_path(const PathCn& path);

/// Appends the straight segment from path(1) to z.
PathCn extend(const PathCn& path, const Point& z);

/// Two-vertex path Re(z) -> z, or the constant path when z is real.
PathCn ray_from_real(const Point& z);

/// The family of extensions path o L_{path(1)}^z for |z - path(1)| < radius.
/// Radius 0 is the empty family.
struct PathBall {
  PathCn base;
  double radius{0.0};

  bool empty() const { return !(radius > 0.0); }
  bool contains(const Point& z) const { return !empty() && distance(z, base.endpoint()) < radius; }
  /// The lift L_gamma(z); throws OutOfDomain outside the ball.
  PathCn member(const Point& z) const;
};

}  // namespace sliceworks
