// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sliceworks/quaternion.hpp"

namespace sliceworks {

/// mt19937_64 with a fixed bits-to-double mapping so seeded streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::uint64_t bits() { return engine_(); }

  // Box-Muller, one value per call.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  /// Uniform in the ball {|q| <= radius} of H.
  Quaternion quaternion_in_ball(double radius) {
    while (true) {
      Quaternion q(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
      if (norm2(q) <= 1.0) return q * radius;
    }
  }

  ImaginaryUnit unit() {
    while (true) {
      Quaternion q(0.0, normal(), normal(), normal());
      if (norm2(q) > 1e-12) return ImaginaryUnit::normalized(q);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sliceworks
