// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

// Aberth-Ehrlich simultaneous iteration for real polynomials, followed by
// clustering into multiple roots and Newton polishing on the derivative that
// has the cluster as a simple root. All arithmetic is done in long double so
// that double roots stay within the clustering radius.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sliceworks/error.hpp"
#include "sliceworks/zeros.hpp"

namespace sliceworks {
namespace {

using real = long double;
using cd = std::complex<real>;

constexpr int kMaxSweeps = 200;

cd horner(const std::vector<real>& c, cd z) {
  cd v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

std::vector<real> derivative(const std::vector<real>& c) {
  std::vector<real> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<real>(k) * c[k]);
  return d;
}

// sum |c_k| |z|^k: the size of the terms that cancel at a root.
real evaluation_scale(const std::vector<real>& c, real r) {
  real s = 0.0;
  real p = 1.0;
  for (real a : c) {
    s += std::abs(a) * p;
    p *= r;
  }
  return s;
}

std::vector<cd> aberth(const std::vector<real>& c) {
  const std::size_t d = c.size() - 1;
  const std::vector<real> dc = derivative(c);

  // Fujiwara-style bound for the initial circle.
  real bound = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    bound = std::max(bound, std::pow(std::abs(c[k] / c[d]), 1.0L / static_cast<real>(d - k)));
  }
  const real radius = std::max(bound, 1e-3L);

  std::vector<cd> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = std::polar(radius, 2.0L * std::numbers::pi_v<real> * static_cast<real>(k) / static_cast<real>(d) + 0.4L);
  }
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    real largest_step = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const cd p = horner(c, z[i]);
      if (p == cd(0.0L)) continue;
      const cd ratio = p / horner(dc, z[i]);
      cd repulsion = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0L / (z[i] - z[j]);
      }
      const cd step = ratio / (1.0L - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (largest_step < 1e-18L) break;
  }
  return z;
}

// Newton on the (m-1)-th derivative, where a root of multiplicity m is simple.
cd polish(const std::vector<real>& c, cd z, unsigned m, bool on_axis) {
  std::vector<real> q = c;
  for (unsigned k = 1; k < m; ++k) q = derivative(q);
  const std::vector<real> dq = derivative(q);
  for (int it = 0; it < 16; ++it) {
    const cd value = horner(q, z);
    const cd slope = horner(dq, z);
    if (slope == cd(0.0L)) break;
    cd step = value / slope;
    if (on_axis) step = step.real();
    const cd next = z - step;
    if (std::abs(horner(q, next)) > std::abs(value) && std::abs(step) > 1e-14L * (1.0L + std::abs(z))) break;
    z = next;
    if (std::abs(step) <= 1e-19L * (1.0L + std::abs(z))) break;
  }
  return z;
}

// True when the Taylor coefficients of orders 0 .. m-2 at z are at rounding
// level relative to sum_j C(j,k) |c_j| |z|^(j-k). Order m-1 vanishes by
// construction after polish(); a group of distinct roots spread over delta
// leaves about delta^2 in order m-2.
bool is_multiple_root(const std::vector<real>& c, cd z, unsigned m) {
  std::vector<real> q = c;
  std::vector<real> size(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) size[k] = std::abs(c[k]);
  real factorial = 1.0L;
  for (unsigned k = 0; k + 1 < m; ++k) {
    if (k > 0) {
      q = derivative(q);
      size = derivative(size);
      factorial *= static_cast<real>(k);
    }
    const real bound = evaluation_scale(size, std::abs(z)) / factorial;
    if (std::abs(horner(q, z)) / factorial > 1e-9L * bound) return false;
  }
  return true;
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const std::vector<double>& coeffs) {
  return complex_roots(std::vector<long double>(coeffs.begin(), coeffs.end()));
}

std::vector<ComplexRoot> complex_roots(const std::vector<long double>& coeffs) {
  std::vector<real> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) throw Error(ErrorCode::InvalidArgument, "root finding needs degree >= 1");
  for (real a : c) {
    if (!std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "polynomial has a non-finite coefficient");
  }

  std::vector<ComplexRoot> out;
  unsigned zero_mult = 0;
  while (c.front() == 0.0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.push_back({0.0, zero_mult});
  const auto narrow = [](cd z) { return std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag())); };
  if (c.size() < 2) return out;

  const std::vector<cd> raw = aberth(c);
  const std::size_t d = raw.size();
  real magnitude = 1.0;
  for (const cd& z : raw) magnitude = std::max(magnitude, std::abs(z));
  const real simple_radius = 1e-6L * magnitude;

  // A root of multiplicity m comes back from the iteration as m approximations
  // spread over about eps^(1/m). Grow groups greedily: from every unassigned
  // approximation take its m - 1 nearest unassigned neighbours and accept the
  // largest m whose members all lie within cluster_radius(m) of their mean and
  // whose polished mean passes is_multiple_root.
  const auto cluster_radius = [&](std::size_t m) {
    const real spread = 64.0L * std::pow(std::numeric_limits<real>::epsilon(), 1.0L / static_cast<real>(m));
    return magnitude * std::max(1e-6L, std::min(spread, 1e-2L));
  };
  struct Cluster {
    cd mean;
    unsigned count;
  };
  std::vector<Cluster> clusters;
  std::vector<bool> taken(d, false);
  std::size_t remaining = d;
  while (remaining > 0) {
    Cluster best{cd(0.0L), 0};
    real best_spread = 0.0L;
    std::vector<std::size_t> best_members;
    for (std::size_t i = 0; i < d; ++i) {
      if (taken[i]) continue;
      std::vector<std::size_t> near;
      for (std::size_t j = 0; j < d; ++j) {
        if (!taken[j]) near.push_back(j);
      }
      std::sort(near.begin(), near.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(raw[a] - raw[i]) < std::abs(raw[b] - raw[i]);
      });
      cd sum = 0.0L;
      for (std::size_t m = 1; m <= near.size(); ++m) {
        sum += raw[near[m - 1]];
        const cd mean = sum / static_cast<real>(m);
        real spread = 0.0L;
        for (std::size_t k = 0; k < m; ++k) spread = std::max(spread, std::abs(raw[near[k]] - mean));
        if (m > 1 && spread > cluster_radius(m)) continue;
        if (m > best.count && m > 2) {
          const bool on_axis = std::abs(mean.imag()) <= cluster_radius(m);
          if (!is_multiple_root(c, polish(c, on_axis ? cd(mean.real()) : mean, static_cast<unsigned>(m), on_axis),
                                static_cast<unsigned>(m))) {
            continue;
          }
        }
        if (m > best.count || (m == best.count && spread < best_spread)) {
          best = {mean, static_cast<unsigned>(m)};
          best_spread = spread;
          best_members.assign(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(m));
        }
      }
    }
    for (std::size_t k : best_members) taken[k] = true;
    remaining -= best_members.size();
    clusters.push_back(best);
  }

  struct Found {
    cd value;
    unsigned multiplicity;
  };
  std::vector<Found> found;
  std::vector<Found> upper;
  unsigned counted = 0;
  for (const Cluster& cl : clusters) {
    const cd mean = cl.mean;
    if (std::abs(mean.imag()) <= std::max(simple_radius, cl.count > 1 ? cluster_radius(cl.count) : 0.0L)) {
      found.push_back({polish(c, mean.real(), cl.count, true).real(), cl.count});
      counted += cl.count;
    } else if (mean.imag() > 0.0L) {
      cd z = polish(c, mean, cl.count, false);
      if (z.imag() <= 0.0L) z = mean;
      upper.push_back({z, cl.count});
      counted += 2 * cl.count;
    }
  }
  if (counted != d) {
    throw Error(ErrorCode::NoConvergence, "root clusters are not symmetric under conjugation");
  }
  for (const Found& r : upper) {
    found.push_back(r);
    found.push_back({std::conj(r.value), r.multiplicity});
  }

  const real lead = std::abs(c.back());
  for (const Found& r : found) {
    const real scale = evaluation_scale(c, std::abs(r.value));
    // A root of multiplicity m is only determined to about eps^(1/m); its
    // residual is still tiny because all of the first m - 1 derivatives vanish.
    if (std::abs(horner(c, r.value)) > 1e-10L * std::max(scale, lead)) {
      throw Error(ErrorCode::NoConvergence, "root iteration did not reach the residual bound");
    }
    out.push_back({narrow(r.value), r.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace sliceworks
