// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sliceworks/path.hpp"
#include "sliceworks/quaternion.hpp"
#include "sliceworks/region.hpp"

namespace sliceworks {

/// Extra region glued into the single slice of `unit`, read in the
/// coordinates x + yi -> x + y unit. With `antipode` the mirrored region
/// (coordinates read against -unit) is glued as well.
struct Attachment {
  ImaginaryUnit unit;
  PlanarRegion region;
  bool antipode{false};
};

/// Slice-open domain: Omega_I = axial u attachments(I) on every slice.
///
/// The axial region is closed under conjugation before use, so a point
/// x + yI and its twin x + (-y)(-I) always agree. Real points are tested
/// against the axial region only; attachments contribute non-real points.
class SliceDomain {
 public:
  SliceDomain(std::size_t n, PlanarRegion axial, std::vector<Attachment> attachments = {});

  static SliceDomain whole_space(std::size_t n) { return SliceDomain(n, PlanarRegion::whole()); }

  std::size_t dimension() const { return n_; }
  const PlanarRegion& axial() const { return axial_; }
  const std::vector<Attachment>& attachments() const { return attachments_; }
  bool is_axially_symmetric() const { return attachments_.empty(); }

  bool contains(const SlicePoint& q) const;
  /// Membership of the lift of z to the slice of `unit`.
  bool contains(const Point& z, const ImaginaryUnit& unit) const;
  bool contains_real(const Point& x) const;
  bool axial_contains(const Point& z) const;

  /// Signed distance of the lift of z inside the slice of `unit`.
  double signed_distance(const Point& z, const ImaginaryUnit& unit) const;
  double boundary_distance(const Point& z, const ImaginaryUnit& unit) const;

  /// True when `unit` is +-(some attachment unit).
  bool is_attachment_unit(const ImaginaryUnit& unit) const;

 private:
  std::size_t n_;
  PlanarRegion axial_;
  std::vector<Attachment> attachments_;
};

struct SamplingOptions {
  std::size_t units{256};
  std::size_t paths{64};
  std::size_t pairs{64};
  std::size_t points_per_segment{32};
};

/// Whether the lift of the whole path to the slice of `unit` stays in the domain,
/// checked at vertices and `per_segment` interior points of each segment.
bool path_lifts_into(const SliceDomain& domain, const PathCn& path, const ImaginaryUnit& unit,
                     std::size_t per_segment = 32);

/// Same test for a slice that carries no attachment (the axial region alone).
bool path_inside_axial(const SliceDomain& domain, const PathCn& path, std::size_t per_segment = 32);

/// S(Omega, gamma). `all_of_sphere` marks the symbolic answer for paths inside
/// the axial region; `units` then holds the whole sample.
struct SliceUnitSet {
  bool all_of_sphere{false};
  bool exact{false};
  std::vector<ImaginaryUnit> units;

  bool empty() const { return units.empty(); }
  std::size_t size() const { return units.size(); }
};

SliceUnitSet slice_units(const SliceDomain& domain, const PathCn& path, std::uint64_t seed,
                         const SamplingOptions& options = {});

/// Intersection of two unit sets taken over the same sample.
SliceUnitSet intersect(const SliceUnitSet& a, const SliceUnitSet& b);

/// min over I in `units` of the boundary distance of gamma^I(1) in Omega_I.
/// Throws EmptyUnitSet.
double radius_for_units(const SliceDomain& domain, const PathCn& path, std::span<const ImaginaryUnit> units);

/// Largest r such that every sampled extension within r of gamma(1) lifts into
/// the domain for some sampled unit. Exact for axial single-primitive domains;
/// +infinity when no boundary is met within 1e6.
double radius_path_ball(const SliceDomain& domain, const PathCn& path, std::uint64_t seed,
                        const SamplingOptions& options = {});

/// Max over sampled unit pairs {I, J} of radius_for_units. Throws InsufficientUnits.
double radius_two_units(const SliceDomain& domain, const PathCn& path, std::uint64_t seed,
                        const SamplingOptions& options = {});

enum class Verdict { ProvenByWitness, NoViolationFound, Violated };
const char* to_string(Verdict v) noexcept;

struct Witness {
  /// "path": a real-anchored path reaching `point`;
  /// "no_real_points": the domain has no real point although it contains `point`;
  /// "few_units": |S(Omega2, paths[0])| <= 1;
  /// "single_common_unit": |S(Omega2, paths[0]) n S(Omega2, paths[1])| = 1.
  std::string kind;
  std::vector<PathCn> paths;
  std::optional<SlicePoint> point;
};

struct DomainCheckReport {
  Verdict verdict{Verdict::NoViolationFound};
  std::vector<Witness> witnesses;
  std::size_t samples_used{0};
};

/// Real points of the axial region, sampled deterministically.
std::vector<Point> sample_real_points(const SliceDomain& domain, std::size_t count, std::uint64_t seed);

/// Points of the domain, sampled deterministically from the axial region and
/// from each attachment in turn.
std::vector<SlicePoint> sample_points(const SliceDomain& domain, std::size_t count, std::uint64_t seed);

/// A path starting in R^n whose lift to the slice of q stays in the domain and
/// ends at q: the ray from Re(q) first, then up to `max_detours` detours
/// through sampled real points.
std::optional<PathCn> find_witness_path(const SliceDomain& domain, const SlicePoint& q, std::uint64_t seed,
                                        std::size_t max_detours = 16);

DomainCheckReport check_real_path_connected(const SliceDomain& domain, std::size_t samples, std::uint64_t seed);

DomainCheckReport check_stem_preserving(const SliceDomain& omega1, const SliceDomain& omega2, std::size_t samples,
                                        std::uint64_t seed);

DomainCheckReport check_self_stem_preserving(const SliceDomain& domain, std::size_t samples, std::uint64_t seed);

/// Re-runs the test encoded by a Violated witness; true when it still violates.
bool replay_violation(const SliceDomain& omega1, const SliceDomain& omega2, const Witness& witness,
                      std::uint64_t seed);

}  // namespace sliceworks
