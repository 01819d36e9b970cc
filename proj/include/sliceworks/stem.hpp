// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "sliceworks/domain.hpp"
#include "sliceworks/path.hpp"
#include "sliceworks/quaternion.hpp"

namespace sliceworks {

/// Column (F1, F2) in H^{2x1}; the value on the slice of I is F1 + I F2.
struct StemValue {
  Quaternion f1;
  Quaternion f2;

  friend bool operator==(const StemValue&, const StemValue&) = default;
};

/// max(|F1 - G1|, |F2 - G2|).
double stem_distance(const StemValue& a, const StemValue& b);
double stem_norm(const StemValue& f);

Quaternion eval_stem(const StemValue& f, const ImaginaryUnit& unit);

/// Pointwise product (F1 G1 - F2 G2, F1 G2 + F2 G1).
StemValue star(const StemValue& f, const StemValue& g);

/// Solves F1 + J F2 = vJ, F1 + K F2 = vK. Throws DegenerateSlicePair.
StemValue stem_from_two_slices(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                               const ImaginaryUnit& K);

/// (F1, -F2): the stem read along the conjugate path.
StemValue reflect_stem(const StemValue& f);
StemValue conj_stem(const StemValue& f);

/// conj(F) * F. Both components are real for genuine stems; throws
/// NonRealSymmetrization when an imaginary part exceeds 1e-9 (|F1|^2 + |F2|^2).
StemValue sym_stem(const StemValue& f);

inline StemValue real_endpoint_stem(const Quaternion& value) { return {value, Quaternion()}; }

/// A stem family indexed by paths. Every family built by this library depends
/// on the path only through its endpoint, and says so through the flag.
struct PathStem {
  std::function<StemValue(const PathCn&)> eval;
  std::optional<SliceDomain> domain;
  bool endpoint_determined{true};

  StemValue operator()(const PathCn& path) const { return eval(path); }
};

/// Stem at a point of omega1 reached along a witness path inside omega1.
/// Throws OutOfDomain when q is outside omega1 and NoWitnessPath when the
/// search gives up.
StemValue point_stem(const PathStem& f, const SliceDomain& omega1, const SlicePoint& q, std::uint64_t seed = 0);

struct HolomorphyReport {
  double max_residual{0.0};
  std::size_t evaluation_points{0};
};

/// Central-difference value of 1/2 (d/dx_l + sigma d/dy_l) F at gamma(1) and
/// at 8 offsets of size r/2. Requires 0 < h < r/4 (StepOutOfRange).
HolomorphyReport check_stem_holomorphic(const PathStem& f, const PathCn& path, double r, double h);

}  // namespace sliceworks
