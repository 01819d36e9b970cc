// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sliceworks/domain.hpp"
#include "sliceworks/slice_function.hpp"

namespace sliceworks {

struct ComplexRoot {
  std::complex<double> value;
  unsigned multiplicity{1};
};

/// Roots of sum_k coeffs[k] z^k (real coefficients, ascending order), each
/// listed once with its multiplicity. Non-real roots come in exact conjugate
/// pairs. Throws InvalidArgument for degree < 1 and NoConvergence when the
/// iteration cannot reach the residual bound.
std::vector<ComplexRoot> complex_roots(const std::vector<double>& coeffs);
std::vector<ComplexRoot> complex_roots(const std::vector<long double>& coeffs);

struct RealRoot {
  double value;
  unsigned multiplicity;
};

struct IsolatedZero {
  Quaternion point;
  double x;
  double y;
  unsigned multiplicity;
};

enum class SphereKind { SphericalZero, SymmetrizationOnly };
const char* to_string(SphereKind kind) noexcept;

struct SphereZero {
  double x;
  double y;
  unsigned multiplicity;
  SphereKind kind;
};

/// Zeros of a one-variable polynomial. Multiplicities are measured so that
/// real roots + isolated zeros + 2 x spherical zeros + symmetrization-only
/// spheres add up to the degree of f.
struct ZeroSet {
  std::vector<RealRoot> real_roots;
  std::vector<IsolatedZero> isolated;
  std::vector<SphereZero> spheres;
  std::vector<std::string> warnings;

  unsigned total_multiplicity() const;
  bool empty() const { return real_roots.empty() && isolated.empty() && spheres.empty(); }
};

struct ZeroOptions {
  std::uint64_t seed{0};
  bool check_domain{false};
  std::size_t domain_samples{48};
};

/// Real-coefficient polynomial f^c * f; throws NonRealSymmetrization.
SlicePolynomial symmetrized_polynomial(const SlicePolynomial& f);

/// Zeros of f inside the domain, read off from the roots of f^s and the stem
/// of f on each root sphere. Throws InvalidArgument for several variables or
/// a constant f, and NoConvergence from the root backend.
ZeroSet find_zeros(const SlicePolynomial& f, const SliceDomain& domain, const ZeroOptions& options = {});

struct ResidualReport {
  double max_residual{0.0};
  double threshold{0.0};
  std::size_t checked{0};
  bool pass() const { return max_residual < threshold; }
};

/// |f^s| at every reported zero against 1e-6 scale(f^s).
ResidualReport zero_inclusion_check(const SlicePolynomial& f, const ZeroSet& zeros);

/// |f^s(x + yJ)| for every supplied J against 1e-6 scale(f^s).
ResidualReport sphere_propagation_check(const SlicePolynomial& f, double x, double y,
                                        const std::vector<ImaginaryUnit>& units);

struct AnalyticWitness {
  /// Set when f^s vanishes identically; the zero set is the whole domain.
  bool whole_domain{false};
  PathCn path{PathCn::constant(Point(1))};
  double r{0.0};
  std::vector<std::pair<ImaginaryUnit, double>> r_per_unit;
  /// f^s with real coefficients, read as a polynomial in z.
  SlicePolynomial e{1};
  std::size_t containment_samples{0};
  double max_containment_residual{0.0};
  bool verified{false};
};

/// Builds and checks the local analytic description of the zero set of f^s
/// near the endpoint of `path`. Throws InsufficientUnits from the radius.
AnalyticWitness analytic_witness(const SlicePolynomial& f, const SliceDomain& domain, const PathCn& path,
                                 std::uint64_t seed = 0);

/// One row per zero object: kind,x,y,w,qx,qy,qz,multiplicity.
std::string zeros_to_csv(const ZeroSet& zeros);

/// x,y,unit_w,unit_x,unit_y,unit_z,kind with every sphere traced at `units`,
/// rows sorted by (kind, x, y).
std::string emit_plot_data(const ZeroSet& zeros, const std::vector<ImaginaryUnit>& units);

}  // namespace sliceworks
