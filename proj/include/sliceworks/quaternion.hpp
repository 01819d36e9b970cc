// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sliceworks {

/// q = w + x i + y j + z k, stored in that order.
struct Quaternion {
  double w{0.0};
  double x{0.0};
  double y{0.0};
  double z{0.0};

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
double abs(const Quaternion& q);

/// Throws ZeroDivision when |q| <= 1e-300.
Quaternion inverse(const Quaternion& q);

/// Hamilton product; kept as a named entry point for the C layer.
inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }
inline Quaternion qinv(const Quaternion& q) { return inverse(q); }

/// Text form `w+xi+yj+zk`; terms may be omitted or reordered on input ("i", "2-3k").
std::string to_text(const Quaternion& q);
Quaternion parse_quaternion(const std::string& text);

/// An element of the imaginary sphere: Re(u) = 0 and |u| = 1, so u^2 = -1.
class ImaginaryUnit {
 public:
  /// Validates u^2 = -1 to 1e-12.
  explicit ImaginaryUnit(const Quaternion& u);

  /// Normalizes the imaginary part of q; throws InvalidArgument when it vanishes.
  static ImaginaryUnit normalized(const Quaternion& q);

  static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::i()); }
  static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j()); }
  static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k()); }

  const Quaternion& value() const { return u_; }
  operator const Quaternion&() const { return u_; }  // NOLINT(google-explicit-constructor)
  ImaginaryUnit operator-() const { return ImaginaryUnit(-u_); }

  friend bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  Quaternion u_;
};

/// |a - b| for two units.
double unit_distance(const ImaginaryUnit& a, const ImaginaryUnit& b);
/// Angle on the unit 2-sphere between two units.
double unit_angle(const ImaginaryUnit& a, const ImaginaryUnit& b);

/// x + y I for a complex number z = x + y i.
inline Quaternion embed(std::complex<double> z, const ImaginaryUnit& unit) {
  return Quaternion(z.real()) + z.imag() * unit.value();
}

/// A point of the slice C_I^n. An empty unit is the real marker.
struct SlicePoint {
  std::vector<std::complex<double>> coords;
  std::optional<ImaginaryUnit> unit;

  static SlicePoint real(const std::vector<double>& values);
  static SlicePoint on_slice(std::vector<std::complex<double>> coords, const ImaginaryUnit& unit);

  std::size_t dimension() const { return coords.size(); }
  bool is_real() const;
  std::vector<Quaternion> to_quaternions() const;
};

/// Component threshold: q is real when |Im q| <= 1e-10 (1 + |q|).
bool is_real_component(const Quaternion& q);

/// The unit of the slice holding q, or nullopt when q lies in R^n. Throws
/// NotInSliceCone when the components do not share one slice plane.
std::optional<ImaginaryUnit> slice_unit_of(std::span<const Quaternion> q);

/// Coordinates of q with respect to slice_unit_of(q).
SlicePoint to_slice_point(std::span<const Quaternion> q);

/// 2x2 quaternionic matrix [[a, b], [c, d]].
struct QMatrix2 {
  Quaternion a, b, c, d;

  static QMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// [[0, -1], [1, 0]].
  static QMatrix2 sigma() { return {0.0, -1.0, 1.0, 0.0}; }
  static QMatrix2 scalar(const Quaternion& q) { return {q, 0.0, 0.0, q}; }

  QMatrix2 operator*(const QMatrix2& o) const;
  QMatrix2 operator+(const QMatrix2& o) const;
  /// Left scalar multiple q M (entrywise q * entry).
  friend QMatrix2 operator*(const Quaternion& q, const QMatrix2& m);
  /// Right scalar multiple M q (entrywise entry * q).
  QMatrix2 times(const Quaternion& q) const;
  std::pair<Quaternion, Quaternion> apply(const Quaternion& top, const Quaternion& bottom) const;
  QMatrix2 conjugated() const { return {conj(a), conj(b), conj(c), conj(d)}; }
  double max_abs_diff(const QMatrix2& o) const;
};

/// Row vector (r0, r1) times M.
std::pair<Quaternion, Quaternion> row_times(const Quaternion& r0, const Quaternion& r1, const QMatrix2& m);

/// [[1, J], [1, K]]^{-1}. Throws DegenerateSlicePair when |J - K| <= 1e-10.
QMatrix2 vandermonde2_inverse(const ImaginaryUnit& J, const ImaginaryUnit& K);

/// Deterministic sample of the imaginary sphere: i, -i, j, -j, k, -k first,
/// then a seeded Fibonacci spiral.
std::vector<ImaginaryUnit> sphere_sample(std::size_t count, std::uint64_t seed);

}  // namespace sliceworks
