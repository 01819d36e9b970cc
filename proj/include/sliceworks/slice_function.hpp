// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sliceworks/domain.hpp"
#include "sliceworks/stem.hpp"

namespace sliceworks {

using Exponent = std::vector<unsigned>;

/// f(q) = sum over k of q^k a_k in n variables, coefficients on the right.
class SlicePolynomial {
 public:
  explicit SlicePolynomial(std::size_t n, std::map<Exponent, Quaternion> terms = {});

  /// sum_k q^k coeffs[k] in one variable.
  static SlicePolynomial univariate(const std::vector<Quaternion>& coeffs);
  static SlicePolynomial constant(std::size_t n, const Quaternion& c);
  /// q_l (zero-based l).
  static SlicePolynomial variable(std::size_t n, std::size_t l);

  std::size_t dimension() const { return n_; }
  const std::map<Exponent, Quaternion>& terms() const { return terms_; }
  Quaternion coefficient(const Exponent& k) const;
  /// Highest total degree; 0 for constants and for the zero polynomial.
  unsigned degree() const;
  bool is_zero() const { return terms_.empty(); }
  /// Dense coefficient list of a one-variable polynomial.
  std::vector<Quaternion> coefficients() const;
  /// sum |a_k|.
  double scale() const;

  StemValue stem_at(const Point& z) const;
  Quaternion evaluate(const SlicePoint& q) const;
  Quaternion evaluate(std::span<const Quaternion> q) const;

  friend bool operator==(const SlicePolynomial&, const SlicePolynomial&) = default;

 private:
  std::size_t n_;
  std::map<Exponent, Quaternion> terms_;
};

SlicePolynomial operator+(const SlicePolynomial& a, const SlicePolynomial& b);
SlicePolynomial operator-(const SlicePolynomial& a, const SlicePolynomial& b);

/// Coefficient convolution in factor order. Throws IncompatibleDomains for
/// different variable counts.
SlicePolynomial star_product(const SlicePolynomial& f, const SlicePolynomial& g);
SlicePolynomial conjugate_coefficients(const SlicePolynomial& f);

/// |a_k| <= bound * rho^-k for every k past the truncation order.
struct TailBound {
  double bound;
  double rho;
};

/// sum_{k <= N} (q - c)^k a_k about a real center, N < 64.
class SlicePowerSeries {
 public:
  static constexpr std::size_t kMaxTerms = 64;

  SlicePowerSeries(double center, double radius, std::vector<Quaternion> coeffs,
                   std::optional<TailBound> tail = std::nullopt);

  double center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<Quaternion>& coefficients() const { return coeffs_; }
  const std::optional<TailBound>& tail() const { return tail_; }
  double scale() const;

  /// Throws OutOfDomain when |z - center| >= 0.95 radius.
  StemValue stem_at(const Point& z) const;
  Quaternion evaluate(const SlicePoint& q) const;
  /// Bound on the dropped tail at distance |z - center|, when a tail bound is known.
  std::optional<double> truncation_bound(const Point& z) const;

 private:
  double center_;
  double radius_;
  std::vector<Quaternion> coeffs_;
  std::optional<TailBound> tail_;
};

/// A function known on two slices: h_J(x + yJ) = sum (x + yJ)^m hJ[m] and the
/// same for K, extended to every slice through the pair of values.
class TwoSliceGlued {
 public:
  /// Throws DegenerateSlicePair, and InvalidArgument when the two evaluators
  /// disagree at sampled real points of the domain.
  TwoSliceGlued(ImaginaryUnit J, ImaginaryUnit K, std::vector<Quaternion> hJ, std::vector<Quaternion> hK,
                SliceDomain domain);

  const ImaginaryUnit& unit_j() const { return J_; }
  const ImaginaryUnit& unit_k() const { return K_; }
  const std::vector<Quaternion>& h_j() const { return hJ_; }
  const std::vector<Quaternion>& h_k() const { return hK_; }
  const SliceDomain& domain() const { return domain_; }
  double scale() const;

  /// Stem coefficients A_m with F(z) = sum (Re z^m I + Im z^m sigma) A_m.
  std::vector<StemValue> stem_coefficients() const;
  static TwoSliceGlued from_stem_coefficients(const ImaginaryUnit& J, const ImaginaryUnit& K,
                                              const std::vector<StemValue>& coeffs, SliceDomain domain);

  /// Requires x + yJ and x + yK in the domain (OutOfDomain otherwise).
  StemValue stem_at(const Point& z) const;
  Quaternion evaluate(const SlicePoint& q) const;

 private:
  ImaginaryUnit J_;
  ImaginaryUnit K_;
  std::vector<Quaternion> hJ_;
  std::vector<Quaternion> hK_;
  SliceDomain domain_;
};

/// Any of the supported function classes behind one interface.
class SliceFunction {
 public:
  using Variant = std::variant<SlicePolynomial, SlicePowerSeries, TwoSliceGlued>;

  SliceFunction(SlicePolynomial f) : value_(std::move(f)) {}   // NOLINT(google-explicit-constructor)
  SliceFunction(SlicePowerSeries f) : value_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  SliceFunction(TwoSliceGlued f) : value_(std::move(f)) {}     // NOLINT(google-explicit-constructor)

  const Variant& value() const { return value_; }
  const char* kind() const;
  std::size_t dimension() const;
  double scale() const;
  /// Natural domain: the whole space for polynomials, the convergence disk for
  /// series and the stored domain for glued functions.
  SliceDomain domain() const;

  StemValue stem_at(const Point& z) const;
  Quaternion evaluate(const SlicePoint& q) const;
  PathStem path_stem() const;

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&value_);
  }

 private:
  Variant value_;
};

/// Stem-level product f * g with the stem of the result equal to F_f * F_g.
/// Throws IncompatibleDomains for unsupported or mismatched pairs.
SliceFunction star_product(const SliceFunction& f, const SliceFunction& g);

template <class T>
struct Checked {
  T value;
  std::vector<std::string> warnings;
};

struct PreconditionOptions {
  std::size_t samples{48};
  std::uint64_t seed{0};
};

/// Slice conjugation on omega1. Without a domain the precondition is not
/// checked and a "PreconditionUnverified" warning is attached; a domain whose
/// self-stem-preserving check is Violated raises DomainCheckFailed.
Checked<SliceFunction> conjugation(const SliceFunction& f, const std::optional<SliceDomain>& omega1,
                                   const PreconditionOptions& options = {});

/// f^c * f, realified. Throws NonRealSymmetrization when a coefficient is not
/// real within 1e-9 scale.
Checked<SliceFunction> symmetrization(const SliceFunction& f, const std::optional<SliceDomain>& omega1,
                                      const PreconditionOptions& options = {});

/// (1, I) [[1, J], [1, K]]^-1 (vJ, vK).
Quaternion representation_extend(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                                 const ImaginaryUnit& K, const ImaginaryUnit& I);

using Evaluator = std::function<Quaternion(const SlicePoint&)>;

struct RegularityReport {
  double max_residual{0.0};
  std::size_t probes_used{0};
};

/// Max of |1/2 (d/dx_l + I d/dy_l) f| by central differences over the probes
/// and the units.
RegularityReport check_slice_regular(const Evaluator& f, const std::vector<Point>& probes, double h,
                                     const std::vector<ImaginaryUnit>& units);
RegularityReport check_slice_regular(const SliceFunction& f, const std::vector<Point>& probes, double h,
                                     std::size_t unit_count = 16, std::uint64_t seed = 0);

struct PreservingReport {
  bool preserving{true};
  double max_deviation{0.0};
  std::optional<SlicePoint> worst;
};

/// Distance of f(q) from the plane C_I, relative to 1 + |f(q)|, against 1e-9.
PreservingReport check_slice_preserving(const Evaluator& f, const std::vector<Point>& probes,
                                        const std::vector<ImaginaryUnit>& units);
PreservingReport check_slice_preserving(const SliceFunction& f, const std::vector<Point>& probes,
                                        std::size_t unit_count = 16, std::uint64_t seed = 0);

}  // namespace sliceworks
