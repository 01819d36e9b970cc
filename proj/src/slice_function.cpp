// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/slice_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sliceworks/error.hpp"

namespace sliceworks {
namespace {

bool is_exact_zero(const Quaternion& q) { return q.w == 0.0 && q.x == 0.0 && q.y == 0.0 && q.z == 0.0; }

double coefficient_scale(const std::vector<Quaternion>& c) {
  double s = 0.0;
  for (const auto& q : c) s += abs(q);
  return s;
}

// sum_m (Re w^m + I Im w^m) c_m, i.e. the left-holomorphic polynomial on one slice.
StemValue univariate_stem(const std::vector<Quaternion>& c, std::complex<double> w) {
  StemValue f;
  std::complex<double> p(1.0, 0.0);
  for (const auto& a : c) {
    f.f1 += p.real() * a;
    f.f2 += p.imag() * a;
    p *= w;
  }
  return f;
}

Quaternion on_slice(const std::vector<Quaternion>& c, std::complex<double> w, const ImaginaryUnit& unit) {
  return eval_stem(univariate_stem(c, w), unit);
}

double binomial(unsigned n, unsigned k) {
  double b = 1.0;
  for (unsigned i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

std::vector<Quaternion> convolve(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b,
                                 std::size_t limit) {
  if (a.empty() || b.empty()) return {};
  std::vector<Quaternion> c(std::min(limit, a.size() + b.size() - 1));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size() && j + k < c.size(); ++k) c[j + k] += a[j] * b[k];
  }
  return c;
}

std::vector<StemValue> convolve(const std::vector<StemValue>& a, const std::vector<StemValue>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<StemValue> c(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const StemValue p = star(a[j], b[k]);
      c[j + k].f1 += p.f1;
      c[j + k].f2 += p.f2;
    }
  }
  return c;
}

// Coefficients of a one-variable polynomial re-expanded about a real center.
std::vector<Quaternion> recenter(const std::vector<Quaternion>& a, double center) {
  std::vector<Quaternion> b(a.size());
  for (unsigned k = 0; k < a.size(); ++k) {
    for (unsigned j = 0; j <= k; ++j) b[j] += (binomial(k, j) * std::pow(center, static_cast<int>(k - j))) * a[k];
  }
  return b;
}

const SlicePolynomial& require_univariate(const SlicePolynomial& p) {
  if (p.dimension() != 1) {
    throw Error(ErrorCode::IncompatibleDomains, "one-variable function combined with a polynomial in " +
                                                    std::to_string(p.dimension()) + " variables");
  }
  return p;
}

void check_real(const Quaternion& q, double bound, const char* what) {
  if (abs(q.imag()) > bound) {
    throw Error(ErrorCode::NonRealSymmetrization,
                std::string(what) + " has imaginary norm " + std::to_string(abs(q.imag())));
  }
}

}  // namespace

// ---------------------------------------------------------------- polynomials

SlicePolynomial::SlicePolynomial(std::size_t n, std::map<Exponent, Quaternion> terms) : n_(n) {
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "polynomial needs at least one variable");
  for (auto& [k, a] : terms) {
    if (k.size() != n_) throw Error(ErrorCode::InvalidArgument, "exponent length differs from variable count");
    if (!is_exact_zero(a)) terms_.emplace(k, a);
  }
}

SlicePolynomial SlicePolynomial::univariate(const std::vector<Quaternion>& coeffs) {
  std::map<Exponent, Quaternion> t;
  for (unsigned k = 0; k < coeffs.size(); ++k) t[{k}] = coeffs[k];
  return SlicePolynomial(1, std::move(t));
}

SlicePolynomial SlicePolynomial::constant(std::size_t n, const Quaternion& c) {
  return SlicePolynomial(n, {{Exponent(n, 0), c}});
}

SlicePolynomial SlicePolynomial::variable(std::size_t n, std::size_t l) {
  if (l >= n) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponent k(n, 0);
  k[l] = 1;
  return SlicePolynomial(n, {{k, Quaternion(1.0)}});
}

Quaternion SlicePolynomial::coefficient(const Exponent& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Quaternion() : it->second;
}

unsigned SlicePolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [k, a] : terms_) {
    unsigned s = 0;
    for (unsigned e : k) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<Quaternion> SlicePolynomial::coefficients() const {
  if (n_ != 1) throw Error(ErrorCode::InvalidArgument, "dense coefficients exist for one variable only");
  std::vector<Quaternion> c(is_zero() ? 0 : degree() + 1);
  for (const auto& [k, a] : terms_) c[k[0]] = a;
  return c;
}

double SlicePolynomial::scale() const {
  double s = 0.0;
  for (const auto& [k, a] : terms_) s += abs(a);
  return s;
}

StemValue SlicePolynomial::stem_at(const Point& z) const {
  if (z.size() != n_) throw Error(ErrorCode::InvalidArgument, "point dimension differs from variable count");
  std::vector<std::vector<std::complex<double>>> powers(n_);
  for (const auto& [k, a] : terms_) {
    for (std::size_t l = 0; l < n_; ++l) {
      auto& p = powers[l];
      if (p.empty()) p.push_back(1.0);
      while (p.size() <= k[l]) p.push_back(p.back() * z[l]);
    }
  }
  StemValue f;
  for (const auto& [k, a] : terms_) {
    std::complex<double> m(1.0, 0.0);
    for (std::size_t l = 0; l < n_; ++l) m *= powers[l][k[l]];
    f.f1 += m.real() * a;
    f.f2 += m.imag() * a;
  }
  return f;
}

Quaternion SlicePolynomial::evaluate(const SlicePoint& q) const {
  const StemValue f = stem_at(q.coords);
  if (q.is_real() || !q.unit) return f.f1;
  return eval_stem(f, *q.unit);
}

Quaternion SlicePolynomial::evaluate(std::span<const Quaternion> q) const { return evaluate(to_slice_point(q)); }

SlicePolynomial operator+(const SlicePolynomial& a, const SlicePolynomial& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::IncompatibleDomains, "variable counts differ");
  auto t = a.terms();
  for (const auto& [k, c] : b.terms()) t[k] += c;
  return SlicePolynomial(a.dimension(), std::move(t));
}

SlicePolynomial operator-(const SlicePolynomial& a, const SlicePolynomial& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::IncompatibleDomains, "variable counts differ");
  auto t = a.terms();
  for (const auto& [k, c] : b.terms()) t[k] -= c;
  return SlicePolynomial(a.dimension(), std::move(t));
}

SlicePolynomial star_product(const SlicePolynomial& f, const SlicePolynomial& g) {
  if (f.dimension() != g.dimension()) {
    throw Error(ErrorCode::IncompatibleDomains, "cannot multiply polynomials in " + std::to_string(f.dimension()) +
                                                    " and " + std::to_string(g.dimension()) + " variables");
  }
  std::map<Exponent, Quaternion> t;
  for (const auto& [ka, a] : f.terms()) {
    for (const auto& [kb, b] : g.terms()) {
      Exponent k(ka.size());
      for (std::size_t l = 0; l < k.size(); ++l) k[l] = ka[l] + kb[l];
      t[k] += a * b;
    }
  }
  return SlicePolynomial(f.dimension(), std::move(t));
}

SlicePolynomial conjugate_coefficients(const SlicePolynomial& f) {
  auto t = f.terms();
  for (auto& [k, a] : t) a = conj(a);
  return SlicePolynomial(f.dimension(), std::move(t));
}

// --------------------------------------------------------------- power series

SlicePowerSeries::SlicePowerSeries(double center, double radius, std::vector<Quaternion> coeffs,
                                   std::optional<TailBound> tail)
    : center_(center), radius_(radius), coeffs_(std::move(coeffs)), tail_(tail) {
  if (!std::isfinite(center_)) throw Error(ErrorCode::InvalidArgument, "series center must be finite");
  if (!(radius_ > 0.0)) throw Error(ErrorCode::InvalidArgument, "series radius must be positive");
  if (coeffs_.empty() || coeffs_.size() > kMaxTerms) {
    throw Error(ErrorCode::InvalidArgument, "series needs between 1 and 64 coefficients");
  }
  if (tail_ && !(tail_->rho > 0.0 && tail_->bound >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tail bound needs rho > 0 and bound >= 0");
  }
}

double SlicePowerSeries::scale() const { return coefficient_scale(coeffs_); }

StemValue SlicePowerSeries::stem_at(const Point& z) const {
  if (z.size() != 1) throw Error(ErrorCode::InvalidArgument, "power series take one variable");
  const std::complex<double> w = z[0] - center_;
  if (!(std::abs(w) < 0.95 * radius_)) {
    throw Error(ErrorCode::OutOfDomain, "point is outside 0.95 of the radius of convergence");
  }
  return univariate_stem(coeffs_, w);
}

Quaternion SlicePowerSeries::evaluate(const SlicePoint& q) const {
  const StemValue f = stem_at(q.coords);
  if (q.is_real() || !q.unit) return f.f1;
  return eval_stem(f, *q.unit);
}

std::optional<double> SlicePowerSeries::truncation_bound(const Point& z) const {
  if (!tail_ || z.size() != 1) return std::nullopt;
  const double ratio = std::abs(z[0] - center_) / tail_->rho;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return tail_->bound * std::pow(ratio, static_cast<double>(coeffs_.size())) / (1.0 - ratio);
}

// ------------------------------------------------------------ glued functions

TwoSliceGlued::TwoSliceGlued(ImaginaryUnit J, ImaginaryUnit K, std::vector<Quaternion> hJ,
                             std::vector<Quaternion> hK, SliceDomain domain)
    : J_(J), K_(K), hJ_(std::move(hJ)), hK_(std::move(hK)), domain_(std::move(domain)) {
  (void)vandermonde2_inverse(J_, K_);
  if (domain_.dimension() != 1) throw Error(ErrorCode::InvalidArgument, "glued functions take one variable");
  for (const Point& x : sample_real_points(domain_, 16, 0)) {
    const Quaternion a = on_slice(hJ_, x[0], J_);
    const Quaternion b = on_slice(hK_, x[0], K_);
    const double tol = 1e-10 * (1.0 + std::max(abs(a), abs(b)));
    if (abs(a - b) > tol) {
      throw Error(ErrorCode::InvalidArgument, "slice evaluators disagree at the real point " +
                                                  std::to_string(x[0].real()));
    }
  }
}

double TwoSliceGlued::scale() const { return std::max(coefficient_scale(hJ_), coefficient_scale(hK_)); }

std::vector<StemValue> TwoSliceGlued::stem_coefficients() const {
  const QMatrix2 m = vandermonde2_inverse(J_, K_);
  std::vector<StemValue> out(std::max(hJ_.size(), hK_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Quaternion a = i < hJ_.size() ? hJ_[i] : Quaternion();
    const Quaternion b = i < hK_.size() ? hK_[i] : Quaternion();
    const auto [f1, f2] = m.apply(a, b);
    out[i] = {f1, f2};
  }
  return out;
}

TwoSliceGlued TwoSliceGlued::from_stem_coefficients(const ImaginaryUnit& J, const ImaginaryUnit& K,
                                                    const std::vector<StemValue>& coeffs, SliceDomain domain) {
  std::vector<Quaternion> hJ;
  std::vector<Quaternion> hK;
  for (const StemValue& a : coeffs) {
    hJ.push_back(eval_stem(a, J));
    hK.push_back(eval_stem(a, K));
  }
  return TwoSliceGlued(J, K, std::move(hJ), std::move(hK), std::move(domain));
}

StemValue TwoSliceGlued::stem_at(const Point& z) const {
  if (z.size() != 1) throw Error(ErrorCode::InvalidArgument, "glued functions take one variable");
  if (!domain_.contains(z, J_) || !domain_.contains(z, K_)) {
    throw Error(ErrorCode::OutOfDomain, "a reference point on the stored slices lies outside the domain");
  }
  return stem_from_two_slices(on_slice(hJ_, z[0], J_), on_slice(hK_, z[0], K_), J_, K_);
}

Quaternion TwoSliceGlued::evaluate(const SlicePoint& q) const {
  if (!domain_.contains(q)) throw Error(ErrorCode::OutOfDomain, "point lies outside the domain");
  const StemValue f = stem_at(q.coords);
  if (q.is_real() || !q.unit) return f.f1;
  return eval_stem(f, *q.unit);
}

// ------------------------------------------------------------------- handles

const char* SliceFunction::kind() const {
  switch (value_.index()) {
    case 0: return "poly";
    case 1: return "series";
    default: return "glued";
  }
}

std::size_t SliceFunction::dimension() const {
  if (const auto* p = get_if<SlicePolynomial>()) return p->dimension();
  return 1;
}

double SliceFunction::scale() const {
  return std::visit([](const auto& f) { return f.scale(); }, value_);
}

SliceDomain SliceFunction::domain() const {
  if (const auto* p = get_if<SlicePolynomial>()) return SliceDomain::whole_space(p->dimension());
  if (const auto* s = get_if<SlicePowerSeries>()) {
    return SliceDomain(1, PlanarRegion::disk(0, s->center(), 0.95 * s->radius()));
  }
  return std::get<TwoSliceGlued>(value_).domain();
}

StemValue SliceFunction::stem_at(const Point& z) const {
  return std::visit([&](const auto& f) { return f.stem_at(z); }, value_);
}

Quaternion SliceFunction::evaluate(const SlicePoint& q) const {
  return std::visit([&](const auto& f) { return f.evaluate(q); }, value_);
}

PathStem SliceFunction::path_stem() const {
  return PathStem{[self = *this](const PathCn& path) { return self.stem_at(path.endpoint()); }, domain(), true};
}

namespace {

struct SeriesView {
  double center;
  double radius;
  std::vector<Quaternion> coeffs;
  bool exact;  // finite polynomial, so every omitted coefficient is zero
};

SeriesView as_series(const SliceFunction& f, double center) {
  if (const auto* s = f.get_if<SlicePowerSeries>()) return {s->center(), s->radius(), s->coefficients(), false};
  const auto& p = require_univariate(*f.get_if<SlicePolynomial>());
  return {center, std::numeric_limits<double>::infinity(), recenter(p.coefficients(), center), true};
}

SliceFunction series_product(const SeriesView& a, const SeriesView& b) {
  if (a.center != b.center) throw Error(ErrorCode::IncompatibleDomains, "series have different centers");
  std::size_t limit = SlicePowerSeries::kMaxTerms;
  if (!a.exact) limit = std::min(limit, a.coeffs.size());
  if (!b.exact) limit = std::min(limit, b.coeffs.size());
  std::vector<Quaternion> c = convolve(a.coeffs, b.coeffs, limit);
  if (c.empty()) c.push_back(Quaternion());
  return SlicePowerSeries(a.center, std::min(a.radius, b.radius), std::move(c));
}

std::vector<StemValue> stem_coefficients_of(const SliceFunction& f) {
  if (const auto* g = f.get_if<TwoSliceGlued>()) return g->stem_coefficients();
  std::vector<StemValue> out;
  for (const auto& a : require_univariate(*f.get_if<SlicePolynomial>()).coefficients()) out.push_back({a, {}});
  return out;
}

}  // namespace

SliceFunction star_product(const SliceFunction& f, const SliceFunction& g) {
  const auto* pf = f.get_if<SlicePolynomial>();
  const auto* pg = g.get_if<SlicePolynomial>();
  if (pf && pg) return star_product(*pf, *pg);

  const auto* sf = f.get_if<SlicePowerSeries>();
  const auto* sg = g.get_if<SlicePowerSeries>();
  const auto* gf = f.get_if<TwoSliceGlued>();
  const auto* gg = g.get_if<TwoSliceGlued>();
  if ((sf || sg) && (gf || gg)) {
    throw Error(ErrorCode::IncompatibleDomains, "power series and glued functions cannot be multiplied");
  }
  if (sf || sg) {
    const double center = sf ? sf->center() : sg->center();
    return series_product(as_series(f, center), as_series(g, center));
  }

  const TwoSliceGlued& base = gf ? *gf : *gg;
  if (gf && gg) {
    const DomainCheckReport r = check_stem_preserving(gf->domain(), gg->domain(), 32, 0);
    if (r.verdict == Verdict::Violated) {
      throw Error(ErrorCode::IncompatibleDomains, "the second factor's domain is not stem-preserving for the first");
    }
  }
  return TwoSliceGlued::from_stem_coefficients(base.unit_j(), base.unit_k(),
                                               convolve(stem_coefficients_of(f), stem_coefficients_of(g)),
                                               base.domain());
}

namespace {

std::vector<std::string> verify_preconditions(const SliceFunction& f, const std::optional<SliceDomain>& omega1,
                                              const PreconditionOptions& options) {
  std::vector<std::string> warnings;
  if (!omega1) {
    warnings.emplace_back(
        "PreconditionUnverified: no domain was supplied, so real-path-connectedness and stem preservation were "
        "not checked");
    return warnings;
  }
  if (omega1->dimension() != f.dimension()) {
    throw Error(ErrorCode::IncompatibleDomains, "domain and function have different variable counts");
  }
  const DomainCheckReport self = check_self_stem_preserving(*omega1, options.samples, options.seed);
  if (self.verdict == Verdict::Violated) {
    throw Error(ErrorCode::DomainCheckFailed,
                "domain is not self-stem-preserving (witness: " + self.witnesses.front().kind + ")");
  }
  if (const auto* g = f.get_if<TwoSliceGlued>()) {
    const DomainCheckReport r = check_stem_preserving(*omega1, g->domain(), options.samples, options.seed);
    if (r.verdict == Verdict::Violated) {
      throw Error(ErrorCode::DomainCheckFailed,
                  "function domain is not stem-preserving (witness: " + r.witnesses.front().kind + ")");
    }
  }
  return warnings;
}

}  // namespace

Checked<SliceFunction> conjugation(const SliceFunction& f, const std::optional<SliceDomain>& omega1,
                                   const PreconditionOptions& options) {
  std::vector<std::string> warnings = verify_preconditions(f, omega1, options);
  if (const auto* p = f.get_if<SlicePolynomial>()) return {conjugate_coefficients(*p), std::move(warnings)};
  if (const auto* s = f.get_if<SlicePowerSeries>()) {
    std::vector<Quaternion> c = s->coefficients();
    for (auto& a : c) a = conj(a);
    return {SlicePowerSeries(s->center(), s->radius(), std::move(c), s->tail()), std::move(warnings)};
  }
  // The stem is conjugated, not the per-slice coefficients: J hJ_m does not
  // stay on the J slice once conjugated.
  const auto& g = std::get<TwoSliceGlued>(f.value());
  std::vector<StemValue> a = g.stem_coefficients();
  for (auto& s : a) s = conj_stem(s);
  return {TwoSliceGlued::from_stem_coefficients(g.unit_j(), g.unit_k(), a, g.domain()), std::move(warnings)};
}

Checked<SliceFunction> symmetrization(const SliceFunction& f, const std::optional<SliceDomain>& omega1,
                                      const PreconditionOptions& options) {
  Checked<SliceFunction> c = conjugation(f, omega1, options);
  const SliceFunction s = star_product(c.value, f);
  const double bound = 1e-9 * s.scale();
  if (const auto* p = s.get_if<SlicePolynomial>()) {
    auto t = p->terms();
    for (auto& [k, a] : t) {
      check_real(a, bound, "symmetrized coefficient");
      a = Quaternion(a.w);
    }
    return {SlicePolynomial(p->dimension(), std::move(t)), std::move(c.warnings)};
  }
  if (const auto* ps = s.get_if<SlicePowerSeries>()) {
    std::vector<Quaternion> t = ps->coefficients();
    for (auto& a : t) {
      check_real(a, bound, "symmetrized coefficient");
      a = Quaternion(a.w);
    }
    return {SlicePowerSeries(ps->center(), ps->radius(), std::move(t)), std::move(c.warnings)};
  }
  const auto& g = std::get<TwoSliceGlued>(s.value());
  std::vector<StemValue> a = g.stem_coefficients();
  for (auto& st : a) {
    check_real(st.f1, bound, "symmetrized stem coefficient");
    check_real(st.f2, bound, "symmetrized stem coefficient");
    st = {Quaternion(st.f1.w), Quaternion(st.f2.w)};
  }
  return {TwoSliceGlued::from_stem_coefficients(g.unit_j(), g.unit_k(), a, g.domain()), std::move(c.warnings)};
}

Quaternion representation_extend(const Quaternion& vJ, const Quaternion& vK, const ImaginaryUnit& J,
                                 const ImaginaryUnit& K, const ImaginaryUnit& I) {
  return eval_stem(stem_from_two_slices(vJ, vK, J, K), I);
}

RegularityReport check_slice_regular(const Evaluator& f, const std::vector<Point>& probes, double h,
                                     const std::vector<ImaginaryUnit>& units) {
  if (!(h > 0.0)) throw Error(ErrorCode::StepOutOfRange, "finite-difference step must be positive");
  RegularityReport report;
  for (const Point& z : probes) {
    for (const ImaginaryUnit& unit : units) {
      const auto at = [&](std::size_t l, std::complex<double> step) {
        Point w = z;
        w[l] += step;
        return f(SlicePoint::on_slice(std::move(w), unit));
      };
      for (std::size_t l = 0; l < z.size(); ++l) {
        const Quaternion dx = (at(l, {h, 0.0}) - at(l, {-h, 0.0})) * (1.0 / (2.0 * h));
        const Quaternion dy = (at(l, {0.0, h}) - at(l, {0.0, -h})) * (1.0 / (2.0 * h));
        report.max_residual = std::max(report.max_residual, abs((dx + unit.value() * dy) * 0.5));
      }
    }
    ++report.probes_used;
  }
  return report;
}

RegularityReport check_slice_regular(const SliceFunction& f, const std::vector<Point>& probes, double h,
                                     std::size_t unit_count, std::uint64_t seed) {
  return check_slice_regular([&f](const SlicePoint& q) { return f.evaluate(q); }, probes, h,
                             sphere_sample(unit_count, seed));
}

PreservingReport check_slice_preserving(const Evaluator& f, const std::vector<Point>& probes,
                                        const std::vector<ImaginaryUnit>& units) {
  PreservingReport report;
  for (const Point& z : probes) {
    for (const ImaginaryUnit& unit : units) {
      const SlicePoint q = SlicePoint::on_slice(z, unit);
      const Quaternion v = f(q);
      Quaternion orth = v.imag();
      if (!q.is_real()) {
        const Quaternion& u = unit.value();
        const double along = orth.x * u.x + orth.y * u.y + orth.z * u.z;
        orth -= along * u;
      }
      const double deviation = abs(orth) / (1.0 + abs(v));
      if (deviation > report.max_deviation) {
        report.max_deviation = deviation;
        report.worst = q;
      }
    }
  }
  report.preserving = report.max_deviation < 1e-9;
  return report;
}

PreservingReport check_slice_preserving(const SliceFunction& f, const std::vector<Point>& probes,
                                        std::size_t unit_count, std::uint64_t seed) {
  return check_slice_preserving([&f](const SlicePoint& q) { return f.evaluate(q); }, probes,
                                sphere_sample(unit_count, seed));
}

}  // namespace sliceworks
