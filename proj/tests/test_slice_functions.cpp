// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sliceworks/error.hpp"
#include "sliceworks/slice_function.hpp"

using namespace sliceworks;
using cd = std::complex<double>;

namespace {

const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();

Quaternion from_oracle(const oracle::Q& q) { return {q[0], q[1], q[2], q[3]}; }
oracle::Q to_oracle(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

std::vector<Quaternion> from_oracle(const std::vector<oracle::Q>& c) {
  std::vector<Quaternion> out;
  for (const auto& a : c) out.push_back(from_oracle(a));
  return out;
}

Quaternion at(const SliceFunction& f, const Quaternion& q) {
  return f.evaluate(to_slice_point(std::span<const Quaternion>(&q, 1)));
}
Quaternion at(const SlicePolynomial& f, const Quaternion& q) { return f.evaluate(std::span<const Quaternion>(&q, 1)); }

double coefficient_distance(const SlicePolynomial& a, const SlicePolynomial& b) {
  const auto x = a.coefficients(), y = b.coefficients();
  double worst = 0.0;
  for (std::size_t m = 0; m < std::max(x.size(), y.size()); ++m) {
    const Quaternion p = m < x.size() ? x[m] : Quaternion();
    const Quaternion q = m < y.size() ? y[m] : Quaternion();
    worst = std::max(worst, abs(p - q));
  }
  return worst;
}

SlicePolynomial linear(const Quaternion& root) { return SlicePolynomial::univariate({-root, 1.0}); }

const SlicePolynomial kProduct = SlicePolynomial::univariate({k, -(i + j), 1.0});

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

TEST_CASE("evaluation") {
  CHECK(abs(at(SlicePolynomial::univariate({1.0, 0.0, 1.0}), i)) < 1e-15);
  CHECK(abs(at(kProduct, i)) < 1e-15);
  CHECK(abs(at(kProduct, j) - 2.0 * k) < 1e-15);
}

TEST_CASE("evaluation agrees with repeated multiplication") {
  oracle::Random rng(51);
  for (int t = 0; t < 300; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const oracle::Q q = rng.quaternion(1.5);
    const SlicePolynomial f = SlicePolynomial::univariate(from_oracle(c));
    CHECK(abs(at(f, from_oracle(q)) - from_oracle(oracle::eval(c, q))) < 1e-10 * (1 + oracle::coeff_scale(c) * 40));
  }
}

TEST_CASE("several variables") {
  // f(q1, q2) = q1 q2 a with a = 1 + j, evaluated on a common slice.
  const SlicePolynomial f(2, {{{1, 1}, Quaternion(1, 0, 1, 0)}});
  const ImaginaryUnit I = ImaginaryUnit::normalized(Quaternion(0, 1, 2, -1));
  const std::vector<Quaternion> q{embed({0.5, 1.0}, I), embed({-1.0, 0.25}, I)};
  CHECK(abs(f.evaluate(q) - q[0] * q[1] * Quaternion(1, 0, 1, 0)) < 1e-14);
  CHECK(f.degree() == 2);
  CHECK_THROWS_AS((void)f.coefficients(), Error);
  CHECK(code_of([&] { (void)star_product(f, kProduct); }) == ErrorCode::IncompatibleDomains);
}

TEST_CASE("star products") {
  CHECK(coefficient_distance(star_product(linear(i), linear(j)), kProduct) < 1e-15);
  CHECK(star_product(kProduct, SlicePolynomial::constant(1, 1.0)) == kProduct);
  CHECK(star_product(SlicePolynomial::constant(1, 1.0), kProduct) == kProduct);
  const Quaternion a(1, 2, 0, 0);
  CHECK(coefficient_distance(star_product(linear(a), linear(conj(a))), SlicePolynomial::univariate({5.0, -2.0, 1.0})) <
        1e-15);
}

TEST_CASE("star product against the convolution oracle") {
  oracle::Random rng(52);
  for (int t = 0; t < 200; ++t) {
    const auto a = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const auto b = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const SlicePolynomial expected = SlicePolynomial::univariate(from_oracle(oracle::convolve(a, b)));
    const SlicePolynomial got =
        star_product(SlicePolynomial::univariate(from_oracle(a)), SlicePolynomial::univariate(from_oracle(b)));
    CHECK(coefficient_distance(got, expected) < 1e-12);
  }
}

TEST_CASE("associativity and unit on random triples") {
  oracle::Random rng(53);
  const SlicePolynomial one = SlicePolynomial::constant(1, 1.0);
  for (int t = 0; t < 200; ++t) {
    const auto f = SlicePolynomial::univariate(from_oracle(rng.poly(static_cast<std::size_t>(rng.uniform(0, 5.99)), 1.0)));
    const auto g = SlicePolynomial::univariate(from_oracle(rng.poly(static_cast<std::size_t>(rng.uniform(0, 5.99)), 1.0)));
    const auto h = SlicePolynomial::univariate(from_oracle(rng.poly(static_cast<std::size_t>(rng.uniform(0, 5.99)), 1.0)));
    CHECK(coefficient_distance(star_product(star_product(f, g), h), star_product(f, star_product(g, h))) < 1e-10);
    CHECK(coefficient_distance(star_product(one, f), f) == 0.0);
    CHECK(coefficient_distance(star_product(f, one), f) == 0.0);
  }
}

TEST_CASE("product evaluated pointwise") {
  oracle::Random rng(54);
  for (int t = 0; t < 100; ++t) {
    const auto a = rng.poly(static_cast<std::size_t>(rng.uniform(0, 6.99)), 2.0);
    const auto b = rng.poly(static_cast<std::size_t>(rng.uniform(0, 6.99)), 2.0);
    const SlicePolynomial f = SlicePolynomial::univariate(from_oracle(a));
    const SlicePolynomial g = SlicePolynomial::univariate(from_oracle(b));
    const oracle::Q u = rng.unit();
    const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
    const Quaternion q = from_oracle(oracle::slice(x, y, u));
    const StemValue G = g.stem_at({cd(x, y)});
    const Quaternion fq = at(f, q);
    const Quaternion expected = fq * G.f1 + from_oracle(u) * fq * G.f2;
    CHECK(abs(at(star_product(f, g), q) - expected) < 1e-10 * (1 + abs(expected)));

    // The stem of the product is the product of the stems.
    const StemValue lhs = star_product(f, g).stem_at({cd(x, y)});
    const StemValue rhs = star(f.stem_at({cd(x, y)}), G);
    CHECK(stem_distance(lhs, rhs) < 1e-10 * (1 + stem_norm(rhs)));
  }
}

TEST_CASE("conjugation") {
  const SliceFunction f = SlicePolynomial::univariate({0.0, Quaternion(1, 1, 0, 0)});
  const Checked<SliceFunction> fc = conjugation(f, std::nullopt);
  CHECK(*fc.value.get_if<SlicePolynomial>() == SlicePolynomial::univariate({0.0, Quaternion(1, -1, 0, 0)}));
  REQUIRE(fc.warnings.size() == 1);
  CHECK(fc.warnings[0].rfind("PreconditionUnverified", 0) == 0);

  const SlicePolynomial realp = SlicePolynomial::univariate({1.0, -2.0, 0.5});
  CHECK(*conjugation(realp, std::nullopt).value.get_if<SlicePolynomial>() == realp);

  const SliceFunction g = linear(i);
  CHECK(abs(conjugation(g, std::nullopt).value.evaluate(SlicePoint::real({2.0})) - Quaternion(2, 1, 0, 0)) < 1e-15);

  const SliceDomain ball(1, PlanarRegion::disk(0, 0.0, 2.0));
  CHECK(conjugation(g, ball).warnings.empty());
}

TEST_CASE("conjugation is an involution") {
  oracle::Random rng(55);
  for (int t = 0; t < 100; ++t) {
    const SliceFunction f = SlicePolynomial::univariate(from_oracle(rng.poly(5, 3.0)));
    const SliceFunction ff = conjugation(conjugation(f, std::nullopt).value, std::nullopt).value;
    CHECK(*ff.get_if<SlicePolynomial>() == *f.get_if<SlicePolynomial>());
  }
}

TEST_CASE("symmetrization") {
  const auto sym = [](const SlicePolynomial& f) { return *symmetrization(f, std::nullopt).value.get_if<SlicePolynomial>(); };
  CHECK(coefficient_distance(sym(linear(Quaternion(1, 2, 0, 0))), SlicePolynomial::univariate({5.0, -2.0, 1.0})) < 1e-15);
  CHECK(coefficient_distance(sym(kProduct), SlicePolynomial::univariate({1.0, 0.0, 2.0, 0.0, 1.0})) < 1e-15);
  CHECK(std::abs(sym(linear(i)).evaluate(SlicePoint::real({3.0})).w - 10.0) < 1e-14);
}

TEST_CASE("symmetrization is real and slice preserving") {
  oracle::Random rng(56);
  for (int t = 0; t < 100; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(1, 8.99)), 4.0);
    const SliceFunction f = SlicePolynomial::univariate(from_oracle(c));
    // Realness before realification, checked with the oracle convolution.
    std::vector<oracle::Q> cc;
    for (const auto& a : c) cc.push_back(oracle::conj(a));
    for (const auto& a : oracle::convolve(cc, c)) {
      CHECK(std::hypot(a[1], a[2], a[3]) < 1e-9 * std::pow(oracle::coeff_scale(c), 2));
    }
    const SliceFunction fs = symmetrization(f, std::nullopt).value;
    CHECK(check_slice_preserving(fs, {{cd(rng.uniform(-1, 1), rng.uniform(-1, 1))}}, 16, t).preserving);
  }
}

TEST_CASE("identities at real points") {
  oracle::Random rng(57);
  for (int t = 0; t < 50; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const SliceFunction f = SlicePolynomial::univariate(from_oracle(c));
    const SliceFunction fc = conjugation(f, std::nullopt).value;
    const SliceFunction fs = symmetrization(f, std::nullopt).value;
    for (int p = 0; p < 100; ++p) {
      const double x = rng.uniform(-1.2, 1.2);
      const Quaternion v = from_oracle(oracle::eval(c, {x, 0, 0, 0}));
      double size = 0.0;
      for (std::size_t m = 0; m < c.size(); ++m) size += oracle::norm(c[m]) * std::pow(std::abs(x), m);
      CHECK(abs(fc.evaluate(SlicePoint::real({x})) - conj(v)) < 1e-10 * (1 + size));
      CHECK(abs(fs.evaluate(SlicePoint::real({x})) - Quaternion(norm2(v))) < 1e-9 * (1 + size * size));
    }
  }
}

TEST_CASE("representation formula") {
  const ImaginaryUnit I = ImaginaryUnit::i(), J = ImaginaryUnit::j(), K = ImaginaryUnit::k();
  CHECK(abs(representation_extend(i, j, I, J, K) - k) < 1e-15);
  const Quaternion a(1, 2, 3, 4), b(-1, 0, 2, 0);
  CHECK(abs(representation_extend(a, b, I, J, I) - a) < 1e-14);
  const auto sq = [](const Quaternion& q) { return q * q; };
  CHECK(abs(representation_extend(sq(Quaternion(1, 1, 0, 0)), sq(Quaternion(1, 0, 1, 0)), I, J, K) - 2.0 * k) < 1e-12);
}

TEST_CASE("representation formula on random polynomials") {
  oracle::Random rng(58);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto c = rng.poly(static_cast<std::size_t>(rng.uniform(0, 8.99)), 4.0);
    const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
    const oracle::Q I = rng.unit(), J = rng.unit(), K = rng.unit();
    if (oracle::dist(J, K) < 1e-2 || oracle::dist(I, J) < 1e-6 || oracle::dist(I, K) < 1e-6) continue;
    const auto val = [&](const oracle::Q& u) { return oracle::eval(c, oracle::slice(x, y, u)); };
    const Quaternion got = representation_extend(from_oracle(val(J)), from_oracle(val(K)),
                                                 ImaginaryUnit::normalized(from_oracle(J)),
                                                 ImaginaryUnit::normalized(from_oracle(K)),
                                                 ImaginaryUnit::normalized(from_oracle(I)));
    // The same extension computed by elimination.
    const auto [f1, f2] = oracle::two_slice_solve(val(J), val(K), J, K);
    CHECK(oracle::dist(to_oracle(got), oracle::add(f1, oracle::mul(I, f2))) < 1e-9 * (1 + oracle::norm(f1) + oracle::norm(f2)));
    double size = 0.0;
    for (std::size_t m = 0; m < c.size(); ++m) size += oracle::norm(c[m]) * std::pow(std::hypot(x, y), m);
    worst = std::max(worst, oracle::dist(to_oracle(got), val(I)) / size);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("slice regularity") {
  const std::vector<Point> probes{{cd(0.2, 0.3)}, {cd(-0.7, 0.1)}, {cd(0.0, -1.2)}};
  oracle::Random rng(59);
  for (int t = 0; t < 20; ++t) {
    const SliceFunction f = SlicePolynomial::univariate(from_oracle(rng.poly(6, 1.0)));
    CHECK(check_slice_regular(f, probes, 1e-5).max_residual < 1e-6);
  }
  const Evaluator anti = [](const SlicePoint& q) {
    const cd z = q.coords[0];
    const Quaternion u = q.unit ? q.unit->value() : Quaternion();
    return Quaternion(z.real()) - z.imag() * u;
  };
  const auto units = sphere_sample(8, 0);
  CHECK(std::abs(check_slice_regular(anti, probes, 1e-5, units).max_residual - 1.0) < 1e-6);
  CHECK(check_slice_regular(SlicePolynomial::constant(1, Quaternion(1, 2, 3, 4)), probes, 1e-5).max_residual == 0.0);
}

TEST_CASE("slice preservation") {
  const std::vector<Point> probes{{cd(0.2, 0.3)}, {cd(-0.7, 1.1)}};
  CHECK(check_slice_preserving(SlicePolynomial::univariate({1.0, 0.0, 1.0}), probes).preserving);
  const PreservingReport r = check_slice_preserving(linear(i), probes);
  CHECK_FALSE(r.preserving);
  CHECK(r.max_deviation > 0.1);
}

TEST_CASE("power series") {
  // Geometric series sum (q - 1)^m a with a = 1 + k, radius 1.
  const Quaternion a(1, 0, 0, 1);
  const SlicePowerSeries s(1.0, 1.0, std::vector<Quaternion>(40, a), TailBound{abs(a), 1.0});
  const cd z(1.3, 0.4);
  const ImaginaryUnit I = ImaginaryUnit::normalized(Quaternion(0, 1, 1, 0));
  const Quaternion q = embed(z, I);
  Quaternion expected;
  Quaternion power(1.0);
  for (int m = 0; m < 40; ++m) {
    expected += power * a;
    power = power * (q - Quaternion(1.0));
  }
  CHECK(abs(s.evaluate(SlicePoint::on_slice({z}, I)) - expected) < 1e-12);
  CHECK(code_of([&] { (void)s.stem_at({cd(1.0, 0.96)}); }) == ErrorCode::OutOfDomain);
  REQUIRE(s.truncation_bound({z}).has_value());
  CHECK(*s.truncation_bound({z}) > 0.0);

  // A polynomial multiplied into a series is recentred; values agree pointwise.
  const SlicePolynomial p = SlicePolynomial::univariate({i, 2.0});
  const SliceFunction prod = star_product(SliceFunction(p), SliceFunction(s));
  const StemValue expected_stem = star(p.stem_at({z}), s.stem_at({z}));
  CHECK(stem_distance(prod.stem_at({z}), expected_stem) < 1e-12 * stem_norm(expected_stem));

  CHECK_THROWS_AS(SlicePowerSeries(0.0, 1.0, std::vector<Quaternion>(65, a)), Error);
}

TEST_CASE("functions glued from two slices") {
  // A domain without real points, where the two slices carry unrelated data.
  const SliceDomain d(1, PlanarRegion::disk(0, cd(0.0, 2.0), 0.5));
  const ImaginaryUnit J = ImaginaryUnit::i(), K = ImaginaryUnit::j();
  const std::vector<Quaternion> hJ{1.0, Quaternion(0, 0, 0, 1)};
  const std::vector<Quaternion> hK{Quaternion(0, 2, 0, 0), 3.0};
  const TwoSliceGlued g(J, K, hJ, hK, d);
  const cd z(0.1, 2.2);
  const Quaternion qJ = embed(z, J), qK = embed(z, K);
  CHECK(abs(g.evaluate(SlicePoint::on_slice({z}, J)) - (hJ[0] + qJ * hJ[1])) < 1e-14);
  CHECK(abs(g.evaluate(SlicePoint::on_slice({z}, K)) - (hK[0] + qK * hK[1])) < 1e-14);

  // The stem is recovered from the two slices by elimination.
  const auto [f1, f2] = oracle::two_slice_solve(to_oracle(hJ[0] + qJ * hJ[1]), to_oracle(hK[0] + qK * hK[1]),
                                                to_oracle(J.value()), to_oracle(K.value()));
  CHECK(stem_distance(g.stem_at({z}), {from_oracle(f1), from_oracle(f2)}) < 1e-14);

  const TwoSliceGlued back = TwoSliceGlued::from_stem_coefficients(J, K, g.stem_coefficients(), d);
  for (std::size_t m = 0; m < hJ.size(); ++m) {
    CHECK(abs(back.h_j()[m] - hJ[m]) < 1e-14);
    CHECK(abs(back.h_k()[m] - hK[m]) < 1e-14);
  }

  // Conjugation conjugates the stem.
  const SliceFunction gc = conjugation(SliceFunction(g), std::nullopt).value;
  CHECK(stem_distance(gc.stem_at({z}), conj_stem(g.stem_at({z}))) < 1e-14);

  // The product of two glued functions has the product stem.
  const TwoSliceGlued h(J, K, {Quaternion(0, 0, 1, 0)}, {Quaternion(1, 1, 0, 0)}, d);
  const SliceFunction gh = star_product(SliceFunction(g), SliceFunction(h));
  CHECK(stem_distance(gh.stem_at({z}), star(g.stem_at({z}), h.stem_at({z}))) < 1e-13);

  const SlicePowerSeries s(0.0, 1.0, {1.0});
  CHECK(code_of([&] { (void)star_product(SliceFunction(s), SliceFunction(g)); }) == ErrorCode::IncompatibleDomains);
}

TEST_CASE("glued data must agree on real points") {
  const SliceDomain ball(1, PlanarRegion::disk(0, 0.0, 1.0));
  CHECK(code_of([&] {
          (void)TwoSliceGlued(ImaginaryUnit::i(), ImaginaryUnit::j(), {0.0, 1.0}, {0.0, -1.0}, ball);
        }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] {
          (void)TwoSliceGlued(ImaginaryUnit::i(), ImaginaryUnit::i(), {0.0}, {0.0}, ball);
        }) == ErrorCode::DegenerateSlicePair);
}

TEST_CASE("domain checks gate conjugation") {
  const SliceDomain reaching(1, PlanarRegion::disk(0, 0.0, 1.0),
                             {Attachment{ImaginaryUnit::i(), PlanarRegion::disk(0, cd(0.0, 1.25), 0.9)}});
  CHECK(code_of([&] { (void)conjugation(linear(i), reaching); }) == ErrorCode::DomainCheckFailed);
  CHECK(code_of([&] { (void)symmetrization(linear(i), reaching); }) == ErrorCode::DomainCheckFailed);
}
