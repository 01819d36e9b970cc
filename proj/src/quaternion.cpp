// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "format.hpp"
#include "sliceworks/error.hpp"

namespace sliceworks {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::NotInSliceCone: return "NotInSliceCone";
    case ErrorCode::DegenerateSlicePair: return "DegenerateSlicePair";
    case ErrorCode::EmptyUnitSet: return "EmptyUnitSet";
    case ErrorCode::InsufficientUnits: return "InsufficientUnits";
    case ErrorCode::NonRealSymmetrization: return "NonRealSymmetrization";
    case ErrorCode::NoWitnessPath: return "NoWitnessPath";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::IncompatibleDomains: return "IncompatibleDomains";
    case ErrorCode::DomainCheckFailed: return "DomainCheckFailed";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }

Quaternion inverse(const Quaternion& q) {
  const double n = abs(q);
  if (!(n > 1e-300)) throw Error(ErrorCode::ZeroDivision, "quaternion has norm " + detail::format_double(n));
  return conj(q) * (1.0 / (n * n));
}

std::string to_text(const Quaternion& q) {
  std::string out = detail::format_double(q.w);
  const double parts[3] = {q.x, q.y, q.z};
  const char names[3] = {'i', 'j', 'k'};
  for (int t = 0; t < 3; ++t) {
    const std::string s = detail::format_double(parts[t]);
    if (s.front() != '-') out += '+';
    out += s;
    out += names[t];
  }
  return out;
}

Quaternion parse_quaternion(const std::string& text) {
  Quaternion q;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "quaternion '" + text + "' at column " + std::to_string(pos + 1) + ": " + why);
  };
  skip_ws();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  bool seen[4] = {false, false, false, false};
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    double coef = 1.0;
    bool have_number = false;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
      const char* begin = text.c_str() + pos;
      char* end = nullptr;
      coef = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos += static_cast<std::size_t>(end - begin);
      have_number = true;
      skip_ws();
    }
    int slot = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      slot = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (!have_number) {
      fail("expected a number or one of i, j, k");
    }
    if (seen[slot]) fail("repeated component");
    seen[slot] = true;
    const double v = sign * coef;
    switch (slot) {
      case 0: q.w = v; break;
      case 1: q.x = v; break;
      case 2: q.y = v; break;
      default: q.z = v; break;
    }
  }
  return q;
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& u) : u_(u) {
  const Quaternion sq = u * u;
  if (abs(sq + Quaternion(1.0)) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "not an imaginary unit: " + to_text(u));
  }
}

ImaginaryUnit ImaginaryUnit::normalized(const Quaternion& q) {
  const Quaternion v = q.imag();
  const double n = abs(v);
  if (!(n > 1e-300)) throw Error(ErrorCode::InvalidArgument, "cannot normalize a real quaternion to a unit");
  return ImaginaryUnit(v * (1.0 / n));
}

double unit_distance(const ImaginaryUnit& a, const ImaginaryUnit& b) { return abs(a.value() - b.value()); }

double unit_angle(const ImaginaryUnit& a, const ImaginaryUnit& b) {
  const Quaternion& u = a.value();
  const Quaternion& v = b.value();
  const double dot = u.x * v.x + u.y * v.y + u.z * v.z;
  const double cross = abs(Quaternion(0.0, u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x));
  return std::atan2(cross, dot);
}

SlicePoint SlicePoint::real(const std::vector<double>& values) {
  SlicePoint p;
  p.coords.reserve(values.size());
  for (double v : values) p.coords.emplace_back(v, 0.0);
  return p;
}

SlicePoint SlicePoint::on_slice(std::vector<std::complex<double>> coords, const ImaginaryUnit& unit) {
  SlicePoint p;
  p.coords = std::move(coords);
  p.unit = unit;
  return p;
}

bool SlicePoint::is_real() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](std::complex<double> c) { return std::abs(c.imag()) <= 1e-10 * (1.0 + std::abs(c)); });
}

std::vector<Quaternion> SlicePoint::to_quaternions() const {
  std::vector<Quaternion> out;
  out.reserve(coords.size());
  for (auto c : coords) {
    if (unit) {
      out.push_back(embed(c, *unit));
    } else {
      out.emplace_back(c.real());
    }
  }
  return out;
}

bool is_real_component(const Quaternion& q) { return abs(q.imag()) <= 1e-10 * (1.0 + abs(q)); }

namespace {

// Component of c along u; throws when c leaves the plane spanned by 1 and u.
double slice_coordinate(const Quaternion& c, const Quaternion& u) {
  const Quaternion v = c.imag();
  const double y = v.x * u.x + v.y * u.y + v.z * u.z;
  if (abs(v - y * u) > 1e-10 * (1.0 + abs(c))) {
    throw Error(ErrorCode::NotInSliceCone, "component " + to_text(c) + " leaves the slice of " + to_text(u));
  }
  return y;
}

}  // namespace

std::optional<ImaginaryUnit> slice_unit_of(std::span<const Quaternion> q) {
  std::optional<ImaginaryUnit> unit;
  for (const Quaternion& c : q) {
    if (is_real_component(c)) continue;
    if (!unit) {
      unit = ImaginaryUnit::normalized(c);
    } else {
      (void)slice_coordinate(c, unit->value());
    }
  }
  return unit;
}

SlicePoint to_slice_point(std::span<const Quaternion> q) {
  const auto unit = slice_unit_of(q);
  SlicePoint p;
  p.unit = unit;
  p.coords.reserve(q.size());
  for (const Quaternion& c : q) {
    if (!unit) {
      p.coords.emplace_back(c.w, 0.0);
      continue;
    }
    p.coords.emplace_back(c.w, slice_coordinate(c, unit->value()));
  }
  return p;
}

QMatrix2 QMatrix2::operator*(const QMatrix2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

QMatrix2 QMatrix2::operator+(const QMatrix2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }

QMatrix2 operator*(const Quaternion& q, const QMatrix2& m) { return {q * m.a, q * m.b, q * m.c, q * m.d}; }

QMatrix2 QMatrix2::times(const Quaternion& q) const { return {a * q, b * q, c * q, d * q}; }

std::pair<Quaternion, Quaternion> QMatrix2::apply(const Quaternion& top, const Quaternion& bottom) const {
  return {a * top + b * bottom, c * top + d * bottom};
}

double QMatrix2::max_abs_diff(const QMatrix2& o) const {
  return std::max({abs(a - o.a), abs(b - o.b), abs(c - o.c), abs(d - o.d)});
}

std::pair<Quaternion, Quaternion> row_times(const Quaternion& r0, const Quaternion& r1, const QMatrix2& m) {
  return {r0 * m.a + r1 * m.c, r0 * m.b + r1 * m.d};
}

QMatrix2 vandermonde2_inverse(const ImaginaryUnit& J, const ImaginaryUnit& K) {
  const Quaternion diff = J.value() - K.value();
  if (abs(diff) <= 1e-10) {
    throw Error(ErrorCode::DegenerateSlicePair, "slice units " + to_text(J) + " and " + to_text(K) + " coincide");
  }
  const Quaternion jk = inverse(diff);    // (J - K)^{-1}
  const Quaternion kj = inverse(-diff);   // (K - J)^{-1}
  return {-(K.value() * jk), -(J.value() * kj), jk, kj};
}

std::vector<ImaginaryUnit> sphere_sample(std::size_t count, std::uint64_t seed) {
  std::vector<ImaginaryUnit> out;
  if (count == 0) return out;
  out.reserve(count);
  const ImaginaryUnit axes[6] = {ImaginaryUnit::i(), -ImaginaryUnit::i(), ImaginaryUnit::j(),
                                 -ImaginaryUnit::j(), ImaginaryUnit::k(), -ImaginaryUnit::k()};
  for (std::size_t a = 0; a < 6 && out.size() < count; ++a) out.push_back(axes[a]);
  if (out.size() == count) return out;

  constexpr double kGoldenFrac = 0.6180339887498949;
  constexpr double kTwoPi = 6.283185307179586;
  // Seed only rotates the spiral; reduce it first so the product stays exact.
  const double offset = std::fmod(static_cast<double>(seed % 1000003u) * 0.7548776662466927, 1.0);
  const std::size_t m = count - out.size();
  for (std::size_t idx = 0; idx < m; ++idx) {
    const double zc = 1.0 - (2.0 * static_cast<double>(idx) + 1.0) / static_cast<double>(m);
    const double rho = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double phi = kTwoPi * std::fmod(static_cast<double>(idx) * kGoldenFrac + offset, 1.0);
    out.push_back(ImaginaryUnit::normalized(Quaternion(0.0, rho * std::cos(phi), rho * std::sin(phi), zc)));
  }
  return out;
}

}  // namespace sliceworks
