// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sliceworks/quaternion.hpp"
#include "sliceworks/stem.hpp"

namespace sliceworks {

struct OracleConfig {
  std::uint64_t seed{0};
  std::size_t trials{1000};
  unsigned degree_cap{8};
  double coeff_norm_cap{4.0};
  std::size_t unit_samples{64};
  double fd_step{1e-5};
};

/// (F1 I + F2 sigma)(G1 I + G2 sigma) e1 evaluated as a literal 2x2 product.
StemValue oracle_star_pointwise(const StemValue& f, const StemValue& g);

/// sum_k q^k a_k with explicit Hamilton powers.
Quaternion oracle_evaluate(const std::vector<Quaternion>& coeffs, const Quaternion& q);

struct SphereScan {
  double min_value;
  ImaginaryUnit argmin;
};

/// Minimum of |f(x + yI)| over `samples` units of the sphere, followed by a
/// local pattern search around the best sample. Throws InvalidArgument for y <= 0.
SphereScan oracle_sphere_scan(const std::function<Quaternion(const Quaternion&)>& f, double x, double y,
                              std::size_t samples = 4096);

struct PropertyResult {
  std::string name;
  /// Acceptance criterion the row belongs to, 0 for supporting invariants.
  int criterion{0};
  std::size_t trials{0};
  double max_residual{0.0};
  double threshold{0.0};
  /// True when the residual has to stay below the threshold, false when it
  /// has to exceed it (detection of a known counterexample).
  bool below{true};
  bool pass{false};
};

struct PropertyReport {
  OracleConfig config;
  std::vector<PropertyResult> properties;
  std::vector<std::string> warnings;
  bool all_pass{false};

  std::string to_json() const;
};

/// Runs every randomized property once.
PropertyReport run_property_suite(const OracleConfig& config);

/// Runs the suite twice and appends a determinism row comparing the bytes of
/// the two reports.
PropertyReport run_acceptance_suite(const OracleConfig& config);

}  // namespace sliceworks
