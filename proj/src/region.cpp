// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sliceworks/error.hpp"

namespace sliceworks {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Finite unions of disjoint open intervals of the real line.
using Intervals = std::vector<std::pair<double, double>>;

Intervals normalize(Intervals v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const auto& iv) { return !(iv.first < iv.second); }), v.end());
  std::sort(v.begin(), v.end());
  Intervals out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.first < out.back().second) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

Intervals intersect_intervals(const Intervals& a, const Intervals& b) {
  Intervals out;
  for (const auto& x : a) {
    for (const auto& y : b) out.emplace_back(std::max(x.first, y.first), std::min(x.second, y.second));
  }
  return normalize(std::move(out));
}

Intervals complement_intervals(const Intervals& a) {
  Intervals out;
  double cursor = -kInf;
  for (const auto& iv : a) {
    out.emplace_back(cursor, iv.first);
    cursor = iv.second;
  }
  out.emplace_back(cursor, kInf);
  return normalize(std::move(out));
}

Intervals real_trace(const PlanarRegion& region) {
  return std::visit(
      Overloaded{
          [](const csg::Whole&) { return Intervals{{-kInf, kInf}}; },
          [](const csg::Ball& b) {
            const double ci = b.center[0].imag();
            const double rem = b.radius * b.radius - ci * ci;
            if (rem <= 0.0) return Intervals{};
            const double s = std::sqrt(rem);
            return Intervals{{b.center[0].real() - s, b.center[0].real() + s}};
          },
          [](const csg::Disk& d) {
            const double ci = d.center.imag();
            const double rem = d.radius * d.radius - ci * ci;
            if (rem <= 0.0) return Intervals{};
            const double s = std::sqrt(rem);
            return Intervals{{d.center.real() - s, d.center.real() + s}};
          },
          [](const csg::HalfPlane& h) {
            const double ar = h.a.real();
            if (ar > 0.0) return Intervals{{-kInf, h.b / ar}};
            if (ar < 0.0) return Intervals{{h.b / ar, kInf}};
            return 0.0 < h.b ? Intervals{{-kInf, kInf}} : Intervals{};
          },
          [](const csg::Union& u) {
            Intervals all;
            for (const auto& p : u.parts) {
              const Intervals t = real_trace(p);
              all.insert(all.end(), t.begin(), t.end());
            }
            return normalize(std::move(all));
          },
          [](const csg::Intersection& u) {
            Intervals acc{{-kInf, kInf}};
            for (const auto& p : u.parts) acc = intersect_intervals(acc, real_trace(p));
            return acc;
          },
          [](const csg::Complement& c) { return complement_intervals(real_trace(c.operand)); },
      },
      region.node().value);
}

}  // namespace

PlanarRegion PlanarRegion::whole() {
  return PlanarRegion(std::make_shared<const RegionNode>(RegionNode{csg::Whole{}}));
}

PlanarRegion PlanarRegion::ball(Point center, double radius) {
  if (center.empty()) throw Error(ErrorCode::InvalidArgument, "ball center must have dimension >= 1");
  if (!(radius >= 0.0)) throw Error(ErrorCode::InvalidArgument, "ball radius must be >= 0");
  return PlanarRegion(std::make_shared<const RegionNode>(RegionNode{csg::Ball{std::move(center), radius}}));
}

PlanarRegion PlanarRegion::disk(std::size_t coord, std::complex<double> center, double radius) {
  if (!(radius >= 0.0)) throw Error(ErrorCode::InvalidArgument, "disk radius must be >= 0");
  return PlanarRegion(std::make_shared<const RegionNode>(RegionNode{csg::Disk{coord, center, radius}}));
}

PlanarRegion PlanarRegion::half_plane(std::size_t coord, std::complex<double> a, double b) {
  if (std::abs(a) == 0.0) throw Error(ErrorCode::InvalidArgument, "half-plane normal must be nonzero");
  return PlanarRegion(std::make_shared<const RegionNode>(RegionNode{csg::HalfPlane{coord, a, b}}));
}

PlanarRegion PlanarRegion::unite(std::vector<PlanarRegion> parts) {
  return PlanarRegion(std::make_shared<const RegionNode>(RegionNode{csg::Union{std::move(parts)}}));
}

PlanarRegion PlanarRegion::intersect(std::vector<PlanarRegion> parts) {
  return PlanarRegion(std::make_shared<const RegionNode>(RegionNode{csg::Intersection{std::move(parts)}}));
}

PlanarRegion PlanarRegion::complement(PlanarRegion operand) {
  return PlanarRegion(std::make_shared<const RegionNode>(RegionNode{csg::Complement{std::move(operand)}}));
}

double PlanarRegion::signed_distance(const Point& z) const {
  return std::visit(
      Overloaded{
          [](const csg::Whole&) { return -kInf; },
          [&](const csg::Ball& b) {
            if (b.center.size() != z.size()) throw Error(ErrorCode::InvalidArgument, "ball dimension mismatch");
            return distance(z, b.center) - b.radius;
          },
          [&](const csg::Disk& d) {
            if (d.coord >= z.size()) throw Error(ErrorCode::InvalidArgument, "disk coordinate out of range");
            return std::abs(z[d.coord] - d.center) - d.radius;
          },
          [&](const csg::HalfPlane& h) {
            if (h.coord >= z.size()) throw Error(ErrorCode::InvalidArgument, "half-plane coordinate out of range");
            return ((h.a * z[h.coord]).real() - h.b) / std::abs(h.a);
          },
          [&](const csg::Union& u) {
            double best = kInf;
            for (const auto& p : u.parts) best = std::min(best, p.signed_distance(z));
            return best;
          },
          [&](const csg::Intersection& u) {
            double best = -kInf;
            for (const auto& p : u.parts) best = std::max(best, p.signed_distance(z));
            return best;
          },
          [&](const csg::Complement& c) { return -c.operand.signed_distance(z); },
      },
      node_->value);
}

double PlanarRegion::boundary_distance(const Point& z) const {
  const double sd = signed_distance(z);
  return sd < 0.0 ? -sd : 0.0;
}

bool PlanarRegion::is_primitive() const {
  return std::holds_alternative<csg::Ball>(node_->value) || std::holds_alternative<csg::Disk>(node_->value) ||
         std::holds_alternative<csg::HalfPlane>(node_->value);
}

std::optional<double> PlanarRegion::bounding_radius(std::size_t n) const {
  return std::visit(
      Overloaded{
          [](const csg::Whole&) -> std::optional<double> { return std::nullopt; },
          [](const csg::Ball& b) -> std::optional<double> { return norm(b.center) + b.radius; },
          [&](const csg::Disk& d) -> std::optional<double> {
            if (n != 1) return std::nullopt;
            return std::abs(d.center) + d.radius;
          },
          [](const csg::HalfPlane&) -> std::optional<double> { return std::nullopt; },
          [&](const csg::Union& u) -> std::optional<double> {
            double r = 0.0;
            for (const auto& p : u.parts) {
              const auto pr = p.bounding_radius(n);
              if (!pr) return std::nullopt;
              r = std::max(r, *pr);
            }
            return r;
          },
          [&](const csg::Intersection& u) -> std::optional<double> {
            std::optional<double> r;
            for (const auto& p : u.parts) {
              const auto pr = p.bounding_radius(n);
              if (pr) r = r ? std::min(*r, *pr) : *pr;
            }
            return r;
          },
          [](const csg::Complement&) -> std::optional<double> { return std::nullopt; },
      },
      node_->value);
}

std::size_t PlanarRegion::required_dimension() const {
  return std::visit(
      Overloaded{
          [](const csg::Whole&) -> std::size_t { return 1; },
          [](const csg::Ball& b) -> std::size_t { return b.center.size(); },
          [](const csg::Disk& d) -> std::size_t { return d.coord + 1; },
          [](const csg::HalfPlane& h) -> std::size_t { return h.coord + 1; },
          [](const csg::Union& u) -> std::size_t {
            std::size_t n = 1;
            for (const auto& p : u.parts) n = std::max(n, p.required_dimension());
            return n;
          },
          [](const csg::Intersection& u) -> std::size_t {
            std::size_t n = 1;
            for (const auto& p : u.parts) n = std::max(n, p.required_dimension());
            return n;
          },
          [](const csg::Complement& c) -> std::size_t { return c.operand.required_dimension(); },
      },
      node_->value);
}

std::optional<bool> PlanarRegion::meets_real_line(std::size_t n) const {
  if (n != 1) return std::nullopt;
  return !real_trace(*this).empty();
}

}  // namespace sliceworks
