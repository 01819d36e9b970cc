// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#include "sliceworks/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "sliceworks/error.hpp"

namespace sliceworks::io {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, (where.empty() ? std::string("/") : where) + ": " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    const auto colon = message.rfind(": ");
    if (colon != std::string::npos) message = message.substr(colon + 2);
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
  }
}

void expect_object(const json& j, const std::string& where, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  }
  for (const auto& item : j.items()) {
    const auto matches = [&](const char* k) { return item.key() == k; };
    if (std::none_of(required.begin(), required.end(), matches) &&
        std::none_of(optional.begin(), optional.end(), matches)) {
      fail(where, "unknown key \"" + item.key() + "\"");
    }
  }
  if (j.contains("schema") && j.at("schema") != kSchema) fail(where + "/schema", "unsupported schema");
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

// A number, the string "inf", or null.
std::optional<double> extended_number(const json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string() && j == "inf") return std::numeric_limits<double>::infinity();
  return number(j, where);
}

std::uint64_t unsigned_integer(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(where, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected true or false");
  return j.get<bool>();
}

std::string string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Quaternion quaternion(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) fail(where, "expected [w, x, y, z]");
  return {number(j[0], at(where, 0)), number(j[1], at(where, 1)), number(j[2], at(where, 2)),
          number(j[3], at(where, 3))};
}

ImaginaryUnit unit(const json& j, const std::string& where) {
  const Quaternion q = quaternion(j, where);
  try {
    return ImaginaryUnit(q);
  } catch (const Error&) {
    fail(where, "not an imaginary unit (u^2 = -1)");
  }
}

std::complex<double> complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [re, im]");
  return {number(j[0], at(where, 0)), number(j[1], at(where, 1))};
}

Point point(const json& j, const std::string& where) {
  array(j, where);
  if (j.empty()) fail(where, "a point needs at least one coordinate");
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(complex(j[i], at(where, i)));
  return p;
}

std::vector<Quaternion> quaternions(const json& j, const std::string& where) {
  array(j, where);
  std::vector<Quaternion> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(quaternion(j[i], at(where, i)));
  return out;
}

// Adding 0.0 turns -0.0 into 0.0 so that outputs do not depend on the sign of zero.
ojson to_json(const Quaternion& q) { return ojson::array({q.w + 0.0, q.x + 0.0, q.y + 0.0, q.z + 0.0}); }
ojson to_json(std::complex<double> c) { return ojson::array({c.real() + 0.0, c.imag() + 0.0}); }
ojson to_json(const Point& p) {
  ojson a = ojson::array();
  for (auto c : p) a.push_back(to_json(c));
  return a;
}
ojson to_json(const std::vector<Quaternion>& v) {
  ojson a = ojson::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}
ojson extended(std::optional<double> v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return "inf";
  return *v;
}

// Errors raised by constructors while building parsed values keep their own
// code but gain the location.
template <class F>
auto build(const std::string& where, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), (where.empty() ? std::string("/") : where) + ": " + e.what());
  }
}

// ------------------------------------------------------------------ regions

PlanarRegion region(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type")) fail(where, "expected a region object with \"type\"");
  const std::string type = string(j.at("type"), at(where, "type"));
  const auto parts = [&](const char* key) {
    std::vector<PlanarRegion> out;
    const json& a = array(j.at(key), at(where, key));
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(region(a[i], at(at(where, key), i)));
    return out;
  };
  const auto coord = [&] {
    return j.contains("coord") ? static_cast<std::size_t>(unsigned_integer(j.at("coord"), at(where, "coord"))) : 0;
  };
  if (type == "whole") {
    expect_object(j, where, {"type"});
    return PlanarRegion::whole();
  }
  if (type == "disk") {
    expect_object(j, where, {"type", "center", "radius"}, {"coord"});
    return build(where, [&] {
      return PlanarRegion::disk(coord(), complex(j.at("center"), at(where, "center")),
                                number(j.at("radius"), at(where, "radius")));
    });
  }
  if (type == "ball") {
    expect_object(j, where, {"type", "center", "radius"});
    return build(where, [&] {
      return PlanarRegion::ball(point(j.at("center"), at(where, "center")), number(j.at("radius"), at(where, "radius")));
    });
  }
  if (type == "halfplane") {
    expect_object(j, where, {"type", "a", "b"}, {"coord"});
    return build(where, [&] {
      return PlanarRegion::half_plane(coord(), complex(j.at("a"), at(where, "a")), number(j.at("b"), at(where, "b")));
    });
  }
  if (type == "union" || type == "intersection") {
    expect_object(j, where, {"type", "parts"});
    auto p = parts("parts");
    return build(where, [&] { return type == "union" ? PlanarRegion::unite(p) : PlanarRegion::intersect(p); });
  }
  if (type == "complement") {
    expect_object(j, where, {"type", "operand"});
    return PlanarRegion::complement(region(j.at("operand"), at(where, "operand")));
  }
  fail(at(where, "type"), "unknown region type \"" + type + "\"");
}

ojson region_json(const PlanarRegion& r) {
  return std::visit(
      [](const auto& node) -> ojson {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, csg::Whole>) {
          return {{"type", "whole"}};
        } else if constexpr (std::is_same_v<T, csg::Ball>) {
          return {{"type", "ball"}, {"center", to_json(node.center)}, {"radius", node.radius}};
        } else if constexpr (std::is_same_v<T, csg::Disk>) {
          return {{"type", "disk"}, {"coord", node.coord}, {"center", to_json(node.center)}, {"radius", node.radius}};
        } else if constexpr (std::is_same_v<T, csg::HalfPlane>) {
          return {{"type", "halfplane"}, {"coord", node.coord}, {"a", to_json(node.a)}, {"b", node.b}};
        } else if constexpr (std::is_same_v<T, csg::Complement>) {
          return {{"type", "complement"}, {"operand", region_json(node.operand)}};
        } else {
          ojson parts = ojson::array();
          for (const auto& p : node.parts) parts.push_back(region_json(p));
          return {{"type", std::is_same_v<T, csg::Union> ? "union" : "intersection"}, {"parts", parts}};
        }
      },
      r.node().value);
}

// ------------------------------------------------------------------ domains

SliceDomain domain(const json& j, const std::string& where) {
  expect_object(j, where, {"axial"}, {"n", "attachments", "schema"});
  const PlanarRegion axial = region(j.at("axial"), at(where, "axial"));
  std::vector<Attachment> attachments;
  std::size_t needed = std::max<std::size_t>(1, axial.required_dimension());
  if (j.contains("attachments")) {
    const std::string aw = at(where, "attachments");
    const json& a = array(j.at("attachments"), aw);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string w = at(aw, i);
      expect_object(a[i], w, {"unit", "region"}, {"antipode"});
      Attachment att{unit(a[i].at("unit"), at(w, "unit")), region(a[i].at("region"), at(w, "region")),
                     a[i].contains("antipode") ? boolean(a[i].at("antipode"), at(w, "antipode")) : false};
      needed = std::max(needed, att.region.required_dimension());
      attachments.push_back(std::move(att));
    }
  }
  const std::size_t n = j.contains("n") ? static_cast<std::size_t>(unsigned_integer(j.at("n"), at(where, "n"))) : needed;
  return build(where, [&] { return SliceDomain(n, axial, attachments); });
}

ojson domain_json(const SliceDomain& d) {
  ojson atts = ojson::array();
  for (const auto& a : d.attachments()) {
    atts.push_back({{"unit", to_json(a.unit.value())}, {"region", region_json(a.region)}, {"antipode", a.antipode}});
  }
  return {{"n", d.dimension()}, {"axial", region_json(d.axial())}, {"attachments", atts}};
}

// -------------------------------------------------------------------- paths

PathCn path(const json& j, const std::string& where) {
  expect_object(j, where, {"vertices"}, {"schema"});
  const std::string vw = at(where, "vertices");
  const json& v = array(j.at("vertices"), vw);
  if (v.empty()) fail(vw, "a path needs at least one vertex");
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < v.size(); ++i) vertices.push_back(point(v[i], at(vw, i)));
  return build(where, [&] { return PathCn(vertices); });
}

ojson path_json(const PathCn& p) {
  ojson v = ojson::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return {{"vertices", v}};
}

SlicePoint slice_point(const json& j, const std::string& where) {
  expect_object(j, where, {"coords"}, {"unit"});
  SlicePoint q;
  q.coords = point(j.at("coords"), at(where, "coords"));
  if (j.contains("unit") && !j.at("unit").is_null()) q.unit = unit(j.at("unit"), at(where, "unit"));
  return q;
}

ojson slice_point_json(const SlicePoint& q) {
  return {{"coords", to_json(q.coords)}, {"unit", q.unit ? to_json(q.unit->value()) : ojson(nullptr)}};
}

// ---------------------------------------------------------------- functions

SliceFunction function(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type")) fail(where, "expected a function object with \"type\"");
  const std::string type = string(j.at("type"), at(where, "type"));
  if (type == "poly") {
    expect_object(j, where, {"type", "terms"}, {"n", "schema", "warnings"});
    const std::string tw = at(where, "terms");
    const json& terms = array(j.at("terms"), tw);
    std::optional<std::size_t> n;
    if (j.contains("n")) n = static_cast<std::size_t>(unsigned_integer(j.at("n"), at(where, "n")));
    std::map<Exponent, Quaternion> map;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string w = at(tw, i);
      expect_object(terms[i], w, {"exp", "coef"});
      const json& e = array(terms[i].at("exp"), at(w, "exp"));
      Exponent k;
      for (std::size_t l = 0; l < e.size(); ++l) {
        const auto v = unsigned_integer(e[l], at(at(w, "exp"), l));
        if (v > 4096) fail(at(at(w, "exp"), l), "exponent too large");
        k.push_back(static_cast<unsigned>(v));
      }
      if (!n) n = k.size();
      if (k.size() != *n) fail(at(w, "exp"), "exponent length differs from the variable count");
      if (map.count(k)) fail(w, "repeated exponent");
      map[k] = quaternion(terms[i].at("coef"), at(w, "coef"));
    }
    return build(where, [&] { return SlicePolynomial(n.value_or(1), map); });
  }
  if (type == "series") {
    expect_object(j, where, {"type", "center", "radius", "coeffs"}, {"tail", "schema", "warnings"});
    std::optional<TailBound> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) {
      const std::string w = at(where, "tail");
      expect_object(j.at("tail"), w, {"bound", "rho"});
      tail = TailBound{number(j.at("tail").at("bound"), at(w, "bound")), number(j.at("tail").at("rho"), at(w, "rho"))};
    }
    const double radius = j.at("radius") == "inf" ? std::numeric_limits<double>::infinity()
                                                  : number(j.at("radius"), at(where, "radius"));
    return build(where, [&] {
      return SlicePowerSeries(number(j.at("center"), at(where, "center")), radius,
                              quaternions(j.at("coeffs"), at(where, "coeffs")), tail);
    });
  }
  if (type == "glued") {
    expect_object(j, where, {"type", "J", "K", "hJ", "hK", "domain"}, {"schema", "warnings"});
    const ImaginaryUnit J = unit(j.at("J"), at(where, "J"));
    const ImaginaryUnit K = unit(j.at("K"), at(where, "K"));
    const auto hJ = quaternions(j.at("hJ"), at(where, "hJ"));
    const auto hK = quaternions(j.at("hK"), at(where, "hK"));
    SliceDomain d = domain(j.at("domain"), at(where, "domain"));
    return build(where, [&] { return TwoSliceGlued(J, K, hJ, hK, d); });
  }
  fail(at(where, "type"), "unknown function type \"" + type + "\"");
}

ojson function_json(const SliceFunction& f) {
  if (const auto* p = f.get_if<SlicePolynomial>()) {
    ojson terms = ojson::array();
    for (const auto& [k, a] : p->terms()) terms.push_back({{"exp", k}, {"coef", to_json(a)}});
    return {{"type", "poly"}, {"n", p->dimension()}, {"terms", terms}};
  }
  if (const auto* s = f.get_if<SlicePowerSeries>()) {
    ojson out = {{"type", "series"},
                 {"center", s->center()},
                 {"radius", extended(s->radius())},
                 {"coeffs", to_json(s->coefficients())}};
    if (s->tail()) out["tail"] = {{"bound", s->tail()->bound}, {"rho", s->tail()->rho}};
    return out;
  }
  const auto& g = std::get<TwoSliceGlued>(f.value());
  return {{"type", "glued"},
          {"J", to_json(g.unit_j().value())},
          {"K", to_json(g.unit_k().value())},
          {"hJ", to_json(g.h_j())},
          {"hK", to_json(g.h_k())},
          {"domain", domain_json(g.domain())}};
}

ojson with_schema(ojson body) {
  ojson out;
  out["schema"] = kSchema;
  for (auto& item : body.items()) out[item.key()] = item.value();
  return out;
}

ojson report_json(const DomainCheckReport& r) {
  ojson witnesses = ojson::array();
  for (const auto& w : r.witnesses) {
    ojson paths = ojson::array();
    for (const auto& p : w.paths) paths.push_back(path_json(p));
    witnesses.push_back({{"kind", w.kind},
                         {"paths", paths},
                         {"point", w.point ? slice_point_json(*w.point) : ojson(nullptr)}});
  }
  return {{"verdict", to_string(r.verdict)}, {"samples_used", r.samples_used}, {"witnesses", witnesses}};
}

DomainCheckReport check_report(const json& j, const std::string& where) {
  expect_object(j, where, {"verdict", "samples_used", "witnesses"});
  DomainCheckReport r;
  const std::string v = string(j.at("verdict"), at(where, "verdict"));
  if (v == "ProvenByWitness") {
    r.verdict = Verdict::ProvenByWitness;
  } else if (v == "NoViolationFound") {
    r.verdict = Verdict::NoViolationFound;
  } else if (v == "Violated") {
    r.verdict = Verdict::Violated;
  } else {
    fail(at(where, "verdict"), "unknown verdict");
  }
  r.samples_used = unsigned_integer(j.at("samples_used"), at(where, "samples_used"));
  const std::string ww = at(where, "witnesses");
  const json& ws = array(j.at("witnesses"), ww);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const std::string w = at(ww, i);
    expect_object(ws[i], w, {"kind", "paths"}, {"point"});
    Witness wit;
    wit.kind = string(ws[i].at("kind"), at(w, "kind"));
    const json& ps = array(ws[i].at("paths"), at(w, "paths"));
    for (std::size_t k = 0; k < ps.size(); ++k) wit.paths.push_back(path(ps[k], at(at(w, "paths"), k)));
    if (ws[i].contains("point") && !ws[i].at("point").is_null()) wit.point = slice_point(ws[i].at("point"), at(w, "point"));
    r.witnesses.push_back(std::move(wit));
  }
  return r;
}

}  // namespace

SliceFunction parse_function(const std::string& text) { return function(parse_text(text), ""); }

std::string function_to_json(const SliceFunction& f, const std::vector<std::string>& warnings) {
  ojson out = with_schema(function_json(f));
  if (!warnings.empty()) out["warnings"] = warnings;
  return out.dump(2);
}

SliceDomain parse_domain(const std::string& text) { return domain(parse_text(text), ""); }
std::string domain_to_json(const SliceDomain& d) { return with_schema(domain_json(d)).dump(2); }

PlanarRegion parse_region(const std::string& text) { return region(parse_text(text), ""); }
std::string region_to_json(const PlanarRegion& r) { return region_json(r).dump(2); }

PathCn parse_path(const std::string& text) { return path(parse_text(text), ""); }
std::string path_to_json(const PathCn& p) { return with_schema(path_json(p)).dump(2); }

StemValue parse_stem(const std::string& text) {
  const json j = parse_text(text);
  expect_object(j, "", {"F1", "F2"}, {"schema"});
  return {quaternion(j.at("F1"), "/F1"), quaternion(j.at("F2"), "/F2")};
}

std::string stem_to_json(const StemValue& s) {
  return with_schema({{"F1", to_json(s.f1)}, {"F2", to_json(s.f2)}}).dump(2);
}

std::string zeroset_to_json(const ZeroSet& z) {
  ojson real = ojson::array();
  for (const auto& r : z.real_roots) real.push_back({{"value", r.value}, {"multiplicity", r.multiplicity}});
  ojson isolated = ojson::array();
  for (const auto& q : z.isolated) {
    isolated.push_back({{"q", to_json(q.point)}, {"sphere", {q.x, q.y}}, {"multiplicity", q.multiplicity}});
  }
  ojson spheres = ojson::array();
  for (const auto& s : z.spheres) {
    spheres.push_back({{"x", s.x}, {"y", s.y}, {"multiplicity", s.multiplicity}, {"kind", to_string(s.kind)}});
  }
  ojson out;
  out["schema"] = kSchema;
  out["real_roots"] = real;
  out["isolated"] = isolated;
  out["spheres"] = spheres;
  out["total_multiplicity"] = z.total_multiplicity();
  out["warnings"] = z.warnings;
  return out.dump(2);
}

ZeroSet parse_zeroset(const std::string& text) {
  const json j = parse_text(text);
  expect_object(j, "", {"real_roots", "isolated", "spheres"}, {"schema", "total_multiplicity", "warnings"});
  ZeroSet z;
  const json& real = array(j.at("real_roots"), "/real_roots");
  for (std::size_t i = 0; i < real.size(); ++i) {
    const std::string w = at("/real_roots", i);
    expect_object(real[i], w, {"value", "multiplicity"});
    z.real_roots.push_back({number(real[i].at("value"), at(w, "value")),
                            static_cast<unsigned>(unsigned_integer(real[i].at("multiplicity"), at(w, "multiplicity")))});
  }
  const json& iso = array(j.at("isolated"), "/isolated");
  for (std::size_t i = 0; i < iso.size(); ++i) {
    const std::string w = at("/isolated", i);
    expect_object(iso[i], w, {"q", "sphere", "multiplicity"});
    const auto xy = complex(iso[i].at("sphere"), at(w, "sphere"));
    z.isolated.push_back({quaternion(iso[i].at("q"), at(w, "q")), xy.real(), xy.imag(),
                          static_cast<unsigned>(unsigned_integer(iso[i].at("multiplicity"), at(w, "multiplicity")))});
  }
  const json& sph = array(j.at("spheres"), "/spheres");
  for (std::size_t i = 0; i < sph.size(); ++i) {
    const std::string w = at("/spheres", i);
    expect_object(sph[i], w, {"x", "y", "multiplicity", "kind"});
    const std::string kind = string(sph[i].at("kind"), at(w, "kind"));
    SphereKind k;
    if (kind == "spherical_zero_of_f") {
      k = SphereKind::SphericalZero;
    } else if (kind == "symmetrization_only") {
      k = SphereKind::SymmetrizationOnly;
    } else {
      fail(at(w, "kind"), "unknown sphere kind");
    }
    z.spheres.push_back({number(sph[i].at("x"), at(w, "x")), number(sph[i].at("y"), at(w, "y")),
                         static_cast<unsigned>(unsigned_integer(sph[i].at("multiplicity"), at(w, "multiplicity"))), k});
  }
  if (j.contains("warnings")) {
    const json& ws = array(j.at("warnings"), "/warnings");
    for (std::size_t i = 0; i < ws.size(); ++i) z.warnings.push_back(string(ws[i], at("/warnings", i)));
  }
  return z;
}

OracleConfig parse_oracle_config(const std::string& text) {
  const json j = parse_text(text);
  expect_object(j, "", {}, {"seed", "trials", "degree_cap", "coeff_norm_cap", "unit_samples", "fd_step", "schema"});
  OracleConfig c;
  if (j.contains("seed")) c.seed = unsigned_integer(j.at("seed"), "/seed");
  if (j.contains("trials")) c.trials = unsigned_integer(j.at("trials"), "/trials");
  if (j.contains("degree_cap")) c.degree_cap = static_cast<unsigned>(unsigned_integer(j.at("degree_cap"), "/degree_cap"));
  if (j.contains("coeff_norm_cap")) c.coeff_norm_cap = number(j.at("coeff_norm_cap"), "/coeff_norm_cap");
  if (j.contains("unit_samples")) c.unit_samples = unsigned_integer(j.at("unit_samples"), "/unit_samples");
  if (j.contains("fd_step")) c.fd_step = number(j.at("fd_step"), "/fd_step");
  return c;
}

PropertyReport parse_property_report(const std::string& text) {
  const json j = parse_text(text);
  expect_object(j, "", {"config", "properties", "warnings", "all_pass"}, {"schema"});
  PropertyReport r;
  r.config = parse_oracle_config(j.at("config").dump());
  const json& props = array(j.at("properties"), "/properties");
  for (std::size_t i = 0; i < props.size(); ++i) {
    const std::string w = at("/properties", i);
    expect_object(props[i], w, {"property", "criterion", "trials", "max_residual", "threshold", "bound", "pass"});
    PropertyResult p;
    p.name = string(props[i].at("property"), at(w, "property"));
    p.criterion = static_cast<int>(unsigned_integer(props[i].at("criterion"), at(w, "criterion")));
    p.trials = unsigned_integer(props[i].at("trials"), at(w, "trials"));
    p.max_residual = number(props[i].at("max_residual"), at(w, "max_residual"));
    p.threshold = number(props[i].at("threshold"), at(w, "threshold"));
    const std::string bound = string(props[i].at("bound"), at(w, "bound"));
    if (bound != "below" && bound != "above") fail(at(w, "bound"), "expected \"below\" or \"above\"");
    p.below = bound == "below";
    p.pass = boolean(props[i].at("pass"), at(w, "pass"));
    r.properties.push_back(std::move(p));
  }
  const json& ws = array(j.at("warnings"), "/warnings");
  for (std::size_t i = 0; i < ws.size(); ++i) r.warnings.push_back(string(ws[i], at("/warnings", i)));
  r.all_pass = boolean(j.at("all_pass"), "/all_pass");
  return r;
}

std::string quaternion_result_to_json(const Quaternion& value) {
  ojson out;
  out["schema"] = kSchema;
  out["value"] = to_json(value);
  out["text"] = to_text(value);
  return out.dump(2);
}

Quaternion parse_quaternion_result(const std::string& text) {
  const json j = parse_text(text);
  expect_object(j, "", {"value"}, {"schema", "text"});
  return quaternion(j.at("value"), "/value");
}

DomainInfo compute_domain_info(const SliceDomain& d, const std::optional<PathCn>& p, std::uint64_t seed,
                               std::size_t samples) {
  DomainInfo info;
  info.dimension = d.dimension();
  info.axially_symmetric = d.is_axially_symmetric();
  info.path = p;
  if (!info.path) {
    const auto reals = sample_real_points(d, 1, seed);
    if (!reals.empty()) {
      info.path = PathCn::constant(reals.front());
      info.notes.emplace_back("no path given; using a constant path at a sampled real point");
    } else {
      info.notes.emplace_back("no path given and no real point found; radii skipped");
    }
  }
  if (info.path) {
    if (info.path->dimension() != d.dimension()) {
      throw Error(ErrorCode::IncompatibleDomains, "path and domain dimensions differ");
    }
    info.units = slice_units(d, *info.path, seed);
    const auto attempt = [&](const char* name, auto&& compute) -> std::optional<double> {
      try {
        return compute();
      } catch (const Error& e) {
        info.notes.push_back(std::string(name) + ": " + e.what());
        return std::nullopt;
      }
    };
    info.radius_for_units =
        attempt("radius_for_units", [&] { return radius_for_units(d, *info.path, info.units.units); });
    info.radius_path_ball = attempt("radius_path_ball", [&] { return radius_path_ball(d, *info.path, seed); });
    info.radius_two_units = attempt("radius_two_units", [&] { return radius_two_units(d, *info.path, seed); });
  }
  info.real_path_connected = check_real_path_connected(d, samples, seed);
  info.self_stem_preserving = check_self_stem_preserving(d, samples, seed);
  return info;
}

std::string domain_info_to_json(const DomainInfo& info) {
  ojson out;
  out["schema"] = kSchema;
  out["dimension"] = info.dimension;
  out["axially_symmetric"] = info.axially_symmetric;
  out["path"] = info.path ? path_json(*info.path) : ojson(nullptr);
  // The whole sphere is reported as such; only finite sets list their units.
  ojson units = ojson::array();
  if (!info.units.all_of_sphere) {
    for (const auto& u : info.units.units) units.push_back(to_json(u.value()));
  }
  out["slice_units"] = {{"all_of_sphere", info.units.all_of_sphere},
                        {"exact", info.units.exact},
                        {"count", info.units.all_of_sphere ? ojson(nullptr) : ojson(info.units.size())},
                        {"units", units}};
  out["radii"] = {{"for_units", extended(info.radius_for_units)},
                  {"path_ball", extended(info.radius_path_ball)},
                  {"two_units", extended(info.radius_two_units)}};
  out["checks"] = {{"real_path_connected", report_json(info.real_path_connected)},
                   {"self_stem_preserving", report_json(info.self_stem_preserving)}};
  out["notes"] = info.notes;
  return out.dump(2);
}

DomainInfo parse_domain_info(const std::string& text) {
  const json j = parse_text(text);
  expect_object(j, "", {"dimension", "axially_symmetric", "path", "slice_units", "radii", "checks", "notes"},
                {"schema"});
  DomainInfo info;
  info.dimension = unsigned_integer(j.at("dimension"), "/dimension");
  info.axially_symmetric = boolean(j.at("axially_symmetric"), "/axially_symmetric");
  if (!j.at("path").is_null()) info.path = path(j.at("path"), "/path");
  const json& su = j.at("slice_units");
  expect_object(su, "/slice_units", {"all_of_sphere", "exact", "count", "units"});
  info.units.all_of_sphere = boolean(su.at("all_of_sphere"), "/slice_units/all_of_sphere");
  info.units.exact = boolean(su.at("exact"), "/slice_units/exact");
  const json& us = array(su.at("units"), "/slice_units/units");
  for (std::size_t i = 0; i < us.size(); ++i) info.units.units.push_back(unit(us[i], at("/slice_units/units", i)));
  if (info.units.all_of_sphere) {
    if (!su.at("count").is_null()) fail("/slice_units/count", "expected null when all_of_sphere is true");
    if (!us.empty()) fail("/slice_units/units", "expected [] when all_of_sphere is true");
  } else if (unsigned_integer(su.at("count"), "/slice_units/count") != info.units.size()) {
    fail("/slice_units/count", "count differs from the number of units");
  }
  const json& radii = j.at("radii");
  expect_object(radii, "/radii", {"for_units", "path_ball", "two_units"});
  info.radius_for_units = extended_number(radii.at("for_units"), "/radii/for_units");
  info.radius_path_ball = extended_number(radii.at("path_ball"), "/radii/path_ball");
  info.radius_two_units = extended_number(radii.at("two_units"), "/radii/two_units");
  const json& checks = j.at("checks");
  expect_object(checks, "/checks", {"real_path_connected", "self_stem_preserving"});
  info.real_path_connected = check_report(checks.at("real_path_connected"), "/checks/real_path_connected");
  info.self_stem_preserving = check_report(checks.at("self_stem_preserving"), "/checks/self_stem_preserving");
  const json& notes = array(j.at("notes"), "/notes");
  for (std::size_t i = 0; i < notes.size(); ++i) info.notes.push_back(string(notes[i], at("/notes", i)));
  return info;
}

}  // namespace sliceworks::io
