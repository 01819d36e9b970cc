// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/domain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "sliceworks/error.hpp"
#include "sliceworks/random.hpp"

namespace sliceworks {
namespace {

constexpr double kUnitMatch = 1e-9;
constexpr double kDefaultBox = 4.0;

bool same_unit(const ImaginaryUnit& a, const ImaginaryUnit& b) { return unit_distance(a, b) <= kUnitMatch; }

void push_unique(std::vector<ImaginaryUnit>& units, const ImaginaryUnit& u) {
  for (const auto& v : units) {
    if (same_unit(u, v)) return;
  }
  units.push_back(u);
}

std::vector<ImaginaryUnit> attachment_units(const SliceDomain& domain) {
  std::vector<ImaginaryUnit> out;
  for (const auto& a : domain.attachments()) {
    push_unique(out, a.unit);
    push_unique(out, -a.unit);
  }
  return out;
}

// An axial primitive that is symmetric under conjugation, so the axial
// distance is the exact distance to the slice boundary.
bool axial_distance_is_exact(const PlanarRegion& region) {
  const auto& v = region.node().value;
  if (const auto* b = std::get_if<csg::Ball>(&v)) {
    return std::all_of(b->center.begin(), b->center.end(), [](auto c) { return c.imag() == 0.0; });
  }
  if (const auto* d = std::get_if<csg::Disk>(&v)) return d->center.imag() == 0.0;
  if (const auto* h = std::get_if<csg::HalfPlane>(&v)) return h->a.imag() == 0.0;
  return false;
}

Point random_point_in_box(Rng& rng, std::size_t n, double radius) {
  Point z(n);
  for (auto& c : z) c = {rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
  return z;
}

// Candidate witness paths reaching q, in search order.
std::vector<PathCn> witness_paths(const SliceDomain& domain, const SlicePoint& q, std::uint64_t seed,
                                  std::size_t max_detours, std::size_t max_paths) {
  std::vector<PathCn> found;
  if (!domain.contains(q)) return found;
  if (q.is_real()) {
    found.push_back(PathCn::constant(real_part(q.coords)));
    return found;
  }
  const ImaginaryUnit& unit = *q.unit;
  const Point& z = q.coords;
  const auto accept = [&](PathCn path) {
    if (domain.contains_real(path.start()) && path_lifts_into(domain, path, unit)) found.push_back(std::move(path));
    return found.size() >= max_paths;
  };
  if (accept(ray_from_real(z))) return found;
  for (const Point& x : sample_real_points(domain, max_detours, seed)) {
    if (accept(PathCn({x, z}))) return found;
    Point corner(z.size());
    for (std::size_t l = 0; l < z.size(); ++l) corner[l] = {x[l].real(), z[l].imag()};
    if (accept(PathCn({x, corner, z}))) return found;
  }
  return found;
}

}  // namespace

SliceDomain::SliceDomain(std::size_t n, PlanarRegion axial, std::vector<Attachment> attachments)
    : n_(n), axial_(std::move(axial)), attachments_(std::move(attachments)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "domain dimension must be >= 1");
  if (axial_.required_dimension() > n_) throw Error(ErrorCode::InvalidArgument, "axial region needs more coordinates");
  for (const auto& a : attachments_) {
    if (a.region.required_dimension() > n_) {
      throw Error(ErrorCode::InvalidArgument, "attachment region needs more coordinates");
    }
  }
}

bool SliceDomain::axial_contains(const Point& z) const {
  return axial_.signed_distance(z) < 0.0 || axial_.signed_distance(conj(z)) < 0.0;
}

bool SliceDomain::contains_real(const Point& x) const { return axial_.contains(real_part(x)); }

bool SliceDomain::contains(const Point& z, const ImaginaryUnit& unit) const {
  if (z.size() != n_) throw Error(ErrorCode::InvalidArgument, "point dimension differs from the domain");
  if (is_real_point(z)) return contains_real(z);
  return signed_distance(z, unit) < 0.0;
}

bool SliceDomain::contains(const SlicePoint& q) const {
  if (q.is_real() || !q.unit) return contains_real(q.coords);
  return contains(q.coords, *q.unit);
}

double SliceDomain::signed_distance(const Point& z, const ImaginaryUnit& unit) const {
  double sd = std::min(axial_.signed_distance(z), axial_.signed_distance(conj(z)));
  for (const auto& a : attachments_) {
    Point local;
    if (same_unit(unit, a.unit)) {
      local = z;
    } else if (same_unit(unit, -a.unit)) {
      local = conj(z);
    } else {
      continue;
    }
    sd = std::min(sd, a.region.signed_distance(local));
    if (a.antipode) sd = std::min(sd, a.region.signed_distance(conj(local)));
  }
  return sd;
}

double SliceDomain::boundary_distance(const Point& z, const ImaginaryUnit& unit) const {
  if (!contains(z, unit)) return 0.0;
  return std::max(0.0, -signed_distance(z, unit));
}

bool SliceDomain::is_attachment_unit(const ImaginaryUnit& unit) const {
  return std::any_of(attachments_.begin(), attachments_.end(),
                     [&](const Attachment& a) { return same_unit(unit, a.unit) || same_unit(unit, -a.unit); });
}

bool path_lifts_into(const SliceDomain& domain, const PathCn& path, const ImaginaryUnit& unit,
                     std::size_t per_segment) {
  for (const Point& p : path.trace(per_segment)) {
    if (!domain.contains(p, unit)) return false;
  }
  return true;
}

bool path_inside_axial(const SliceDomain& domain, const PathCn& path, std::size_t per_segment) {
  for (const Point& p : path.trace(per_segment)) {
    const bool inside = is_real_point(p) ? domain.contains_real(p) : domain.axial_contains(p);
    if (!inside) return false;
  }
  return true;
}

SliceUnitSet slice_units(const SliceDomain& domain, const PathCn& path, std::uint64_t seed,
                         const SamplingOptions& options) {
  SliceUnitSet out;
  out.exact = true;
  if (path_inside_axial(domain, path, options.points_per_segment)) {
    out.all_of_sphere = true;
    out.units = sphere_sample(options.units, seed);
    for (const auto& u : attachment_units(domain)) push_unique(out.units, u);
    return out;
  }
  // Off the axial region only attachment slices can hold the lift, so the
  // finite list of attachment units is the whole answer.
  for (const auto& u : attachment_units(domain)) {
    if (path_lifts_into(domain, path, u, options.points_per_segment)) out.units.push_back(u);
  }
  return out;
}

SliceUnitSet intersect(const SliceUnitSet& a, const SliceUnitSet& b) {
  if (a.all_of_sphere && b.all_of_sphere) return a;
  if (a.all_of_sphere) return b;
  if (b.all_of_sphere) return a;
  SliceUnitSet out;
  out.exact = a.exact && b.exact;
  for (const auto& u : a.units) {
    if (std::any_of(b.units.begin(), b.units.end(), [&](const ImaginaryUnit& v) { return same_unit(u, v); })) {
      out.units.push_back(u);
    }
  }
  return out;
}

double radius_for_units(const SliceDomain& domain, const PathCn& path, std::span<const ImaginaryUnit> units) {
  if (units.empty()) throw Error(ErrorCode::EmptyUnitSet, "radius over an empty set of units");
  double r = std::numeric_limits<double>::infinity();
  for (const auto& u : units) r = std::min(r, domain.boundary_distance(path.endpoint(), u));
  return r;
}

double radius_path_ball(const SliceDomain& domain, const PathCn& path, std::uint64_t seed,
                        const SamplingOptions& options) {
  const SliceUnitSet su = slice_units(domain, path, seed, options);
  if (su.empty()) return 0.0;
  const Point& p = path.endpoint();
  const std::size_t n = p.size();

  if (su.all_of_sphere && domain.is_axially_symmetric() && axial_distance_is_exact(domain.axial())) {
    return domain.axial().boundary_distance(p);
  }

  bool generic = su.all_of_sphere;
  std::vector<ImaginaryUnit> special;
  for (const auto& u : su.units) {
    if (domain.is_attachment_unit(u)) {
      special.push_back(u);
    } else {
      generic = true;
    }
  }

  std::vector<Point> directions;
  for (std::size_t l = 0; l < n; ++l) {
    for (const std::complex<double> e : {std::complex<double>(1, 0), std::complex<double>(-1, 0),
                                         std::complex<double>(0, 1), std::complex<double>(0, -1)}) {
      Point d(n);
      d[l] = e;
      directions.push_back(std::move(d));
    }
  }
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  while (directions.size() < std::max<std::size_t>(64, 4 * n)) {
    Point d(n);
    for (auto& c : d) c = {rng.normal(), rng.normal()};
    const double len = norm(d);
    if (len < 1e-12) continue;
    for (auto& c : d) c /= len;
    directions.push_back(std::move(d));
  }

  const std::size_t per_segment = options.points_per_segment;
  const auto segment_ok = [&](const Point& z) {
    std::vector<Point> pts;
    for (std::size_t s = 0; s <= per_segment + 1; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(per_segment + 1);
      Point x(n);
      for (std::size_t l = 0; l < n; ++l) x[l] = p[l] + t * (z[l] - p[l]);
      pts.push_back(std::move(x));
    }
    if (generic) {
      const bool ok = std::all_of(pts.begin(), pts.end(), [&](const Point& x) {
        return is_real_point(x) ? domain.contains_real(x) : domain.axial_contains(x);
      });
      if (ok) return true;
    }
    for (const auto& u : special) {
      if (std::all_of(pts.begin(), pts.end(), [&](const Point& x) { return domain.contains(x, u); })) return true;
    }
    return false;
  };
  const auto ball_ok = [&](double r) {
    for (const Point& d : directions) {
      Point z(n);
      for (std::size_t l = 0; l < n; ++l) z[l] = p[l] + r * (1.0 - 1e-12) * d[l];
      if (!segment_ok(z)) return false;
    }
    return true;
  };

  double lo = 0.0;
  for (const auto& u : su.units) lo = std::max(lo, domain.boundary_distance(p, u));
  const double scale = std::max(1.0, norm(p));
  double hi = std::max(2.0 * lo, 1e-3 * scale);
  constexpr double kCap = 1e6;
  while (ball_ok(hi)) {
    lo = hi;
    if (hi >= kCap) return std::numeric_limits<double>::infinity();
    hi *= 2.0;
  }
  while (hi - lo > 1e-6 * scale) {
    const double mid = 0.5 * (lo + hi);
    if (ball_ok(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double radius_two_units(const SliceDomain& domain, const PathCn& path, std::uint64_t seed,
                        const SamplingOptions& options) {
  const SliceUnitSet su = slice_units(domain, path, seed, options);
  if (su.size() < 2) {
    throw Error(ErrorCode::InsufficientUnits,
                "path lifts into " + std::to_string(su.size()) + " sampled slice(s); two are needed");
  }
  std::vector<double> d;
  d.reserve(su.size());
  for (const auto& u : su.units) d.push_back(domain.boundary_distance(path.endpoint(), u));
  std::partial_sort(d.begin(), d.begin() + 2, d.end(), std::greater<>());
  return d[1];
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ProvenByWitness: return "ProvenByWitness";
    case Verdict::NoViolationFound: return "NoViolationFound";
    case Verdict::Violated: return "Violated";
  }
  return "Unknown";
}

std::vector<Point> sample_real_points(const SliceDomain& domain, std::size_t count, std::uint64_t seed) {
  const std::size_t n = domain.dimension();
  const double box = domain.axial().bounding_radius(n).value_or(kDefaultBox);
  Rng rng(seed ^ 0x5bd1e995ULL);
  std::vector<Point> out;
  for (std::size_t tries = 0; out.size() < count && tries < 64 * count + 64; ++tries) {
    Point x(n);
    for (auto& c : x) c = {rng.uniform(-box, box), 0.0};
    if (domain.contains_real(x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<SlicePoint> sample_points(const SliceDomain& domain, std::size_t count, std::uint64_t seed) {
  const std::size_t n = domain.dimension();
  const std::size_t sources = 1 + domain.attachments().size();
  const std::vector<ImaginaryUnit> pool = sphere_sample(64, seed);
  Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  std::vector<SlicePoint> out;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t src = s % sources;
    for (int tries = 0; tries < 200; ++tries) {
      double box = kDefaultBox;
      ImaginaryUnit unit = pool[rng.index(pool.size())];
      if (src == 0) {
        box = domain.axial().bounding_radius(n).value_or(kDefaultBox);
      } else {
        const Attachment& a = domain.attachments()[src - 1];
        box = a.region.bounding_radius(n).value_or(kDefaultBox);
        unit = (a.antipode && rng.uniform() < 0.5) ? -a.unit : a.unit;
      }
      Point z = random_point_in_box(rng, n, box);
      if (domain.contains(z, unit)) {
        out.push_back(SlicePoint::on_slice(std::move(z), unit));
        break;
      }
    }
  }
  return out;
}

std::optional<PathCn> find_witness_path(const SliceDomain& domain, const SlicePoint& q, std::uint64_t seed,
                                        std::size_t max_detours) {
  auto paths = witness_paths(domain, q, seed, max_detours, 1);
  if (paths.empty()) return std::nullopt;
  return std::move(paths.front());
}

DomainCheckReport check_real_path_connected(const SliceDomain& domain, std::size_t samples, std::uint64_t seed) {
  DomainCheckReport report;
  const std::vector<SlicePoint> points = sample_points(domain, samples, seed);
  report.samples_used = points.size();
  if (points.empty()) return report;
  if (domain.axial().meets_real_line(domain.dimension()) == false) {
    report.verdict = Verdict::Violated;
    report.witnesses.push_back(Witness{"no_real_points", {}, points.front()});
    return report;
  }
  // Every sample needs a path, but only the first few are kept as examples.
  constexpr std::size_t kKeptWitnesses = 4;
  std::size_t missing = 0;
  for (const SlicePoint& q : points) {
    if (auto path = find_witness_path(domain, q, seed)) {
      if (report.witnesses.size() < kKeptWitnesses) report.witnesses.push_back(Witness{"path", {std::move(*path)}, q});
    } else {
      ++missing;
    }
  }
  report.verdict = missing == 0 ? Verdict::ProvenByWitness : Verdict::NoViolationFound;
  return report;
}

DomainCheckReport check_stem_preserving(const SliceDomain& omega1, const SliceDomain& omega2, std::size_t samples,
                                        std::uint64_t seed) {
  if (omega1.dimension() != omega2.dimension()) {
    throw Error(ErrorCode::IncompatibleDomains, "domains live in different dimensions");
  }
  DomainCheckReport report;
  const std::vector<SlicePoint> points = sample_points(omega1, samples, seed);
  for (const SlicePoint& q : points) {
    const auto paths = witness_paths(omega1, q, seed, 16, 2);
    if (paths.empty()) continue;
    ++report.samples_used;
    const SliceUnitSet first = slice_units(omega2, paths[0], seed);
    if (!first.all_of_sphere && first.size() <= 1) {
      report.verdict = Verdict::Violated;
      report.witnesses = {Witness{"few_units", {paths[0]}, q}};
      return report;
    }
    if (paths.size() < 2) continue;
    ++report.samples_used;
    const SliceUnitSet second = slice_units(omega2, paths[1], seed);
    const SliceUnitSet common = intersect(first, second);
    if (!common.all_of_sphere && common.size() == 1) {
      report.verdict = Verdict::Violated;
      report.witnesses = {Witness{"single_common_unit", {paths[0], paths[1]}, q}};
      return report;
    }
  }
  return report;
}

DomainCheckReport check_self_stem_preserving(const SliceDomain& domain, std::size_t samples, std::uint64_t seed) {
  DomainCheckReport connected = check_real_path_connected(domain, samples, seed);
  if (connected.verdict == Verdict::Violated) return connected;
  DomainCheckReport preserving = check_stem_preserving(domain, domain, samples, seed);
  preserving.samples_used += connected.samples_used;
  if (preserving.verdict == Verdict::Violated) return preserving;
  preserving.witnesses = std::move(connected.witnesses);
  return preserving;
}

bool replay_violation(const SliceDomain& omega1, const SliceDomain& omega2, const Witness& witness,
                      std::uint64_t seed) {
  if (witness.kind == "no_real_points") {
    return witness.point && omega1.contains(*witness.point) &&
           omega1.axial().meets_real_line(omega1.dimension()) == false;
  }
  const auto in_path_space = [&](const PathCn& p) {
    return omega1.contains_real(p.start()) && !slice_units(omega1, p, seed).empty();
  };
  if (witness.kind == "few_units" && witness.paths.size() == 1) {
    const SliceUnitSet su = slice_units(omega2, witness.paths[0], seed);
    return in_path_space(witness.paths[0]) && !su.all_of_sphere && su.size() <= 1;
  }
  if (witness.kind == "single_common_unit" && witness.paths.size() == 2) {
    const PathCn& a = witness.paths[0];
    const PathCn& b = witness.paths[1];
    if (distance(a.endpoint(), b.endpoint()) > 1e-12 || !in_path_space(a) || !in_path_space(b)) return false;
    const SliceUnitSet common = intersect(slice_units(omega2, a, seed), slice_units(omega2, b, seed));
    return !common.all_of_sphere && common.size() == 1;
  }
  return false;
}

}  // namespace sliceworks
