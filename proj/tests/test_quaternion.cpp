// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sliceworks/error.hpp"
#include "sliceworks/quaternion.hpp"

using namespace sliceworks;

namespace {

oracle::Q to_oracle(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
Quaternion from_oracle(const oracle::Q& q) { return {q[0], q[1], q[2], q[3]}; }

double dist(const Quaternion& a, const Quaternion& b) { return abs(a - b); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("hamilton relations") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(i * i == Quaternion(-1.0));
  const Quaternion q(1.5, -2.0, 0.25, 3.0);
  CHECK(q * Quaternion(1.0) == q);
  CHECK(Quaternion(1, 1, 0, 0) * Quaternion(1, -1, 0, 0) == Quaternion(2.0));
}

TEST_CASE("inverse") {
  CHECK(dist(inverse(Quaternion(1, 1, 0, 0)), Quaternion(0.5, -0.5, 0, 0)) < 1e-15);
  CHECK(dist(inverse(Quaternion::i()), -Quaternion::i()) < 1e-15);
  CHECK(dist(inverse(Quaternion(2.0)), Quaternion(0.5)) < 1e-15);
  CHECK(code_of([] { (void)inverse(Quaternion()); }) == ErrorCode::ZeroDivision);
}

TEST_CASE("product matches the left-multiplication matrix") {
  oracle::Random rng(11);
  for (int t = 0; t < 1000; ++t) {
    const oracle::Q a = rng.quaternion(3.0), b = rng.quaternion(3.0);
    CHECK(dist(from_oracle(a) * from_oracle(b), from_oracle(oracle::mul(a, b))) < 1e-13);
  }
}

TEST_CASE("algebra laws on random triples") {
  oracle::Random rng(12);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Quaternion a = from_oracle(rng.quaternion(4.0));
    const Quaternion b = from_oracle(rng.quaternion(4.0));
    const Quaternion c = from_oracle(rng.quaternion(4.0));
    const double size = abs(a) * abs(b) * abs(c) + 1e-300;
    worst = std::max(worst, dist((a * b) * c, a * (b * c)) / size);
    worst = std::max(worst, dist(conj(a * b), conj(b) * conj(a)) / (abs(a) * abs(b) + 1e-300));
    worst = std::max(worst, std::abs(abs(a * b) - abs(a) * abs(b)) / (abs(a) * abs(b) + 1e-300));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("conj(q) q is |q|^2") {
  oracle::Random rng(13);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion q = from_oracle(rng.quaternion(5.0));
    const Quaternion p = conj(q) * q;
    CHECK(std::abs(p.w - norm2(q)) < 1e-12 * (1 + norm2(q)));
    CHECK(abs(p.imag()) < 1e-12 * (1 + norm2(q)));
  }
}

TEST_CASE("real matrices commute with conjugation") {
  oracle::Random rng(14);
  for (int t = 0; t < 1000; ++t) {
    const QMatrix2 m{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const Quaternion v1 = from_oracle(rng.quaternion(2.0)), v2 = from_oracle(rng.quaternion(2.0));
    const auto [a1, a2] = m.apply(conj(v1), conj(v2));
    const auto [b1, b2] = m.apply(v1, v2);
    CHECK(dist(a1, conj(b1)) < 1e-14);
    CHECK(dist(a2, conj(b2)) < 1e-14);
  }
}

TEST_CASE("the row (1, I) times sigma is I (1, I)") {
  for (const auto& u : sphere_sample(200, 3)) {
    const auto [r0, r1] = row_times(Quaternion(1.0), u, QMatrix2::sigma());
    CHECK(dist(r0, u.value()) < 1e-12);
    CHECK(dist(r1, u.value() * u.value()) < 1e-12);
  }
  const QMatrix2 s2 = QMatrix2::sigma() * QMatrix2::sigma();
  CHECK(s2.max_abs_diff(QMatrix2::scalar(-1.0)) == 0.0);
}

TEST_CASE("slice unit of a tuple") {
  const std::vector<Quaternion> real{3.0, 5.0};
  CHECK_FALSE(slice_unit_of(real).has_value());

  const std::vector<Quaternion> minus_k{5.0, Quaternion(3, 0, 0, -2)};
  CHECK(dist(slice_unit_of(minus_k)->value(), -Quaternion::k()) < 1e-15);

  const std::vector<Quaternion> plus_j{Quaternion(1, 0, 2, 0), 7.0};
  CHECK(dist(slice_unit_of(plus_j)->value(), Quaternion::j()) < 1e-15);

  const std::vector<Quaternion> mixed{Quaternion::i(), Quaternion::j()};
  CHECK(code_of([&] { (void)slice_unit_of(mixed); }) == ErrorCode::NotInSliceCone);

  const SlicePoint p = to_slice_point(minus_k);
  REQUIRE(p.unit.has_value());
  CHECK(p.coords[0] == std::complex<double>(5.0, 0.0));
  CHECK(std::abs(p.coords[1] - std::complex<double>(3.0, 2.0)) < 1e-15);
  const auto back = p.to_quaternions();
  CHECK(dist(back[1], minus_k[1]) < 1e-15);
}

TEST_CASE("imaginary units are validated") {
  CHECK(code_of([] { (void)ImaginaryUnit(Quaternion(0, 2, 0, 0)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { (void)ImaginaryUnit(Quaternion(0.1, 1, 0, 0)); }) == ErrorCode::InvalidArgument);
  CHECK(dist(ImaginaryUnit::normalized(Quaternion(7, 0, 3, 4)).value(), Quaternion(0, 0, 0.6, 0.8)) < 1e-15);
}

TEST_CASE("vandermonde inverse") {
  const QMatrix2 m = vandermonde2_inverse(ImaginaryUnit::i(), -ImaginaryUnit::i());
  const QMatrix2 expected{0.5, 0.5, Quaternion(0, -0.5, 0, 0), Quaternion(0, 0.5, 0, 0)};
  CHECK(m.max_abs_diff(expected) < 1e-15);

  const QMatrix2 v{1.0, Quaternion::i(), 1.0, Quaternion::j()};
  CHECK((v * vandermonde2_inverse(ImaginaryUnit::i(), ImaginaryUnit::j())).max_abs_diff(QMatrix2::identity()) < 1e-12);

  CHECK(code_of([] { (void)vandermonde2_inverse(ImaginaryUnit::i(), ImaginaryUnit::i()); }) ==
        ErrorCode::DegenerateSlicePair);
}

TEST_CASE("vandermonde multiply-back on random pairs") {
  oracle::Random rng(15);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const ImaginaryUnit J(from_oracle(rng.unit()));
    const ImaginaryUnit K(from_oracle(rng.unit()));
    if (unit_distance(J, K) < 1e-3) continue;
    const QMatrix2 v{1.0, J.value(), 1.0, K.value()};
    worst = std::max(worst, (v * vandermonde2_inverse(J, K)).max_abs_diff(QMatrix2::identity()));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("sphere sample") {
  const auto six = sphere_sample(6, 99);
  CHECK(std::find(six.begin(), six.end(), ImaginaryUnit::i()) != six.end());
  CHECK(std::find(six.begin(), six.end(), -ImaginaryUnit::i()) != six.end());

  const auto one = sphere_sample(1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == ImaginaryUnit::i());

  const auto a = sphere_sample(256, 7), b = sphere_sample(256, 7);
  CHECK(a == b);
  for (const auto& u : a) CHECK(std::abs(norm2(u.value()) - 1.0) < 1e-12);
}

TEST_CASE("text form") {
  CHECK(parse_quaternion("i") == Quaternion::i());
  CHECK(parse_quaternion("2-3k") == Quaternion(2, 0, 0, -3));
  CHECK(parse_quaternion("-k+0.5j+1") == Quaternion(1, 0, 0.5, -1));
  CHECK(parse_quaternion("1e-3i") == Quaternion(0, 1e-3, 0, 0));
  const Quaternion q(0.1, -1.0 / 3.0, 2.5e10, -7.0);
  CHECK(parse_quaternion(to_text(q)) == q);
  CHECK(code_of([] { (void)parse_quaternion("1+q"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)parse_quaternion(""); }) == ErrorCode::ParseError);
}
