// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sliceworks/path.hpp"

namespace sliceworks {

struct RegionNode;

/// Open subset of C^n built as a CSG tree over disks, balls and half-planes.
/// The signed distance is negative inside, exact for primitives and combined
/// by min/max at union/intersection nodes, which keeps -sd a lower bound on
/// the distance to the boundary for interior points.
class PlanarRegion {
 public:
  static PlanarRegion whole();
  /// Euclidean ball of C^n.
  static PlanarRegion ball(Point center, double radius);
  /// {z : |z_coord - center| < radius}.
  static PlanarRegion disk(std::size_t coord, std::complex<double> center, double radius);
  /// {z : Re(a z_coord) < b}.
  static PlanarRegion half_plane(std::size_t coord, std::complex<double> a, double b);
  static PlanarRegion unite(std::vector<PlanarRegion> parts);
  static PlanarRegion intersect(std::vector<PlanarRegion> parts);
  /// Interior of the complement, i.e. {z : sd(z) > 0}.
  static PlanarRegion complement(PlanarRegion operand);

  double signed_distance(const Point& z) const;
  bool contains(const Point& z) const { return signed_distance(z) < 0.0; }
  double boundary_distance(const Point& z) const;

  /// True for a single disk, ball or half-plane, where distances are exact.
  bool is_primitive() const;
  /// Radius of an origin-centred ball of C^n holding the region, if bounded.
  std::optional<double> bounding_radius(std::size_t n) const;
  /// Smallest n for which every coordinate referenced by the tree exists.
  std::size_t required_dimension() const;
  /// Whether the region meets R^n. Decided exactly for n = 1, nullopt otherwise.
  std::optional<bool> meets_real_line(std::size_t n) const;

  const RegionNode& node() const { return *node_; }

 private:
  explicit PlanarRegion(std::shared_ptr<const RegionNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const RegionNode> node_;
};

namespace csg {
struct Whole {};
struct Ball {
  Point center;
  double radius;
};
struct Disk {
  std::size_t coord;
  std::complex<double> center;
  double radius;
};
struct HalfPlane {
  std::size_t coord;
  std::complex<double> a;
  double b;
};
struct Union {
  std::vector<PlanarRegion> parts;
};
struct Intersection {
  std::vector<PlanarRegion> parts;
};
struct Complement {
  PlanarRegion operand;
};
}  // namespace csg

struct RegionNode {
  std::variant<csg::Whole, csg::Ball, csg::Disk, csg::HalfPlane, csg::Union, csg::Intersection, csg::Complement> value;
};

}  // namespace sliceworks
