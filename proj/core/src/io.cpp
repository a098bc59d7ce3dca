#include "apec/io.hpp"

#include <utility>

namespace apec {

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
  fail(errc::parse_error, path + ": " + why);
}

const json& require_field(const json& obj, const std::string& key,
                          const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad_field(path, "missing required field '" + key + "'");
  return *it;
}

std::uint32_t parse_u32_field(const json& j, const std::string& path) {
  if (!j.is_number_unsigned())
    bad_field(path, "expected a nonnegative integer");
  auto v = j.get<std::uint64_t>();
  if (v > 0xffffffffULL) bad_field(path, "value out of range");
  return static_cast<std::uint32_t>(v);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) { ok = true; break; }
    if (!ok) bad_field(path + "." + it.key(), "unknown field");
  }
}

}  // namespace

Rational parse_rational_field(const json& j, const std::string& path) {
  if (!j.is_string())
    bad_field(path, "expected an exact rational string \"p/q\"");
  std::string err;
  auto r = Rational::parse(j.get<std::string>(), &err);
  if (!r) bad_field(path, "'" + j.get<std::string>() + "' " + err);
  return *r;
}

json rational_json(const Rational& r) { return r.str(); }

json point_json(const ECPoint& p) {
  if (p.is_infinity()) return "infinity";
  return json::array({rational_json(p.x()), rational_json(p.y())});
}

ECPoint parse_point_field(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "infinity") return ECPoint::infinity();
    bad_field(path, "expected [\"x\", \"y\"] or \"infinity\"");
  }
  if (!j.is_array() || j.size() != 2)
    bad_field(path, "expected a two-element [\"x\", \"y\"] array");
  Rational x = parse_rational_field(j[0], path + "[0]");
  Rational y = parse_rational_field(j[1], path + "[1]");
  return ECPoint::affine(std::move(x), std::move(y));
}

bool CurveSpec::operator==(const CurveSpec& o) const {
  return f == o.f && generators == o.generators && torsion == o.torsion &&
         enum_config == o.enum_config && constants == o.constants &&
         provenance == o.provenance;
}

CurveSpec parse_curve_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::parse_error, "top level must be an object");
  reject_unknown_keys(doc, {"f", "generators", "torsion", "enum", "constants", "provenance"},
                      "$");

  CurveSpec spec;

  const json& f = require_field(doc, "f", "$");
  if (!f.is_object()) bad_field("$.f", "expected an object");
  for (const char* longform : {"a1", "a2", "a3", "a4", "a6"}) {
    if (f.contains(longform))
      bad_field(std::string("$.f.") + longform,
                "long Weierstrass coefficients are not accepted; complete the "
                "square externally and supply monic y^2 = x^3 + p*x^2 + q*x + r");
  }
  reject_unknown_keys(f, {"p", "q", "r"}, "$.f");
  spec.f.p = parse_rational_field(require_field(f, "p", "$.f"), "$.f.p");
  spec.f.q = parse_rational_field(require_field(f, "q", "$.f"), "$.f.q");
  spec.f.r = parse_rational_field(require_field(f, "r", "$.f"), "$.f.r");
  if (Poly::discriminant(spec.f.poly()).is_zero())
    bad_field("$.f", "discriminant is zero: y^2 = f(x) is a singular curve");

  auto on_curve = [&](const ECPoint& p) {
    return p.is_infinity() || p.y() * p.y() == spec.f.eval(p.x());
  };
  const json& gens = require_field(doc, "generators", "$");
  if (!gens.is_array()) bad_field("$.generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string path = "$.generators[" + std::to_string(i) + "]";
    spec.generators.push_back(parse_point_field(gens[i], path));
    if (!on_curve(spec.generators.back()))
      bad_field(path, "point is not on the curve");
  }

  const json& tors = require_field(doc, "torsion", "$");
  if (!tors.is_array()) bad_field("$.torsion", "expected an array");
  bool has_infinity = false;
  for (std::size_t i = 0; i < tors.size(); ++i) {
    std::string path = "$.torsion[" + std::to_string(i) + "]";
    spec.torsion.push_back(parse_point_field(tors[i], path));
    if (!on_curve(spec.torsion.back()))
      bad_field(path, "point is not on the curve");
    has_infinity = has_infinity || spec.torsion.back().is_infinity();
  }
  if (!has_infinity)
    bad_field("$.torsion", "must include \"infinity\"");

  if (doc.contains("enum")) {
    const json& en = doc["enum"];
    if (!en.is_object()) bad_field("$.enum", "expected an object");
    reject_unknown_keys(en, {"coeff_bound", "size_cap", "max_points"}, "$.enum");
    if (en.contains("coeff_bound"))
      spec.enum_config.coeff_bound = parse_u32_field(en["coeff_bound"], "$.enum.coeff_bound");
    if (en.contains("size_cap")) {
      spec.enum_config.size_cap = parse_u32_field(en["size_cap"], "$.enum.size_cap");
      if (spec.enum_config.size_cap < 1) bad_field("$.enum.size_cap", "must be >= 1");
    }
    if (en.contains("max_points")) {
      spec.enum_config.max_points = parse_u32_field(en["max_points"], "$.enum.max_points");
      if (spec.enum_config.max_points < 1) bad_field("$.enum.max_points", "must be >= 1");
    }
  }

  if (doc.contains("constants")) {
    const json& cs = doc["constants"];
    if (!cs.is_object()) bad_field("$.constants", "expected an object");
    reject_unknown_keys(cs, {"c", "C", "R", "rho"}, "$.constants");
    SpecConstants constants;
    constants.count_c = parse_rational_field(require_field(cs, "c", "$.constants"),
                                           "$.constants.c");
    constants.length_c = parse_rational_field(require_field(cs, "C", "$.constants"),
                                            "$.constants.C");
    constants.rank_cap = parse_u32_field(require_field(cs, "R", "$.constants"),
                                         "$.constants.R");
    if (cs.contains("rho"))
      constants.rho_override = parse_u32_field(cs["rho"], "$.constants.rho");
    if (!(constants.count_c > Rational(1))) bad_field("$.constants.c", "must exceed 1");
    if (!(constants.length_c > Rational(1))) bad_field("$.constants.C", "must exceed 1");
    spec.constants = std::move(constants);
  }

  if (doc.contains("provenance")) spec.provenance = doc["provenance"];

  return spec;
}

json curve_spec_to_json(const CurveSpec& spec) {
  json doc;
  doc["f"] = {{"p", rational_json(spec.f.p)},
              {"q", rational_json(spec.f.q)},
              {"r", rational_json(spec.f.r)}};
  json gens = json::array();
  for (const ECPoint& g : spec.generators) gens.push_back(point_json(g));
  doc["generators"] = std::move(gens);
  json tors = json::array();
  for (const ECPoint& t : spec.torsion) tors.push_back(point_json(t));
  doc["torsion"] = std::move(tors);
  doc["enum"] = {{"coeff_bound", spec.enum_config.coeff_bound},
                 {"size_cap", spec.enum_config.size_cap},
                 {"max_points", spec.enum_config.max_points}};
  if (spec.constants) {
    json cs = {{"c", rational_json(spec.constants->count_c)},
               {"C", rational_json(spec.constants->length_c)},
               {"R", spec.constants->rank_cap}};
    if (spec.constants->rho_override) cs["rho"] = *spec.constants->rho_override;
    doc["constants"] = std::move(cs);
  }
  if (!spec.provenance.is_null()) doc["provenance"] = spec.provenance;
  return doc;
}

std::string render_curve_spec(const CurveSpec& spec) {
  return dump_document(curve_spec_to_json(spec));
}

std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

}  // namespace apec
