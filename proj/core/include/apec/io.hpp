#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apec/bounds.hpp"
#include "apec/curve.hpp"
#include "apec/enumerate.hpp"

namespace apec {

using json = nlohmann::json;

struct SpecConstants {
  Rational count_c;   // > 1
  Rational length_c;  // > 1
  std::uint32_t rank_cap = 0;
  std::optional<std::uint32_t> rho_override;

  bool operator==(const SpecConstants& o) const {
    return count_c == o.count_c && length_c == o.length_c && rank_cap == o.rank_cap &&
           rho_override == o.rho_override;
  }
};

// Parsed input document: curve, claimed generators/torsion, enumeration
// budget, optional bound constants. Free-form provenance is preserved
// verbatim through a render round trip.
struct CurveSpec {
  CubicPoly f;
  std::vector<ECPoint> generators;
  std::vector<ECPoint> torsion;
  EnumConfig enum_config;
  std::optional<SpecConstants> constants;
  json provenance;  // null when absent

  bool operator==(const CurveSpec& o) const;
};

// Rationals travel as exact "p/q" strings (just "p" when q = 1); native
// floats are never used. Diagnostics carry the offending field path.
Rational parse_rational_field(const json& j, const std::string& path);
json rational_json(const Rational& r);

json point_json(const ECPoint& p);
ECPoint parse_point_field(const json& j, const std::string& path);

CurveSpec parse_curve_spec(const std::string& text);
json curve_spec_to_json(const CurveSpec& spec);
std::string render_curve_spec(const CurveSpec& spec);

// Canonical document serialization: two-space indent, sorted keys (the
// default object order), trailing newline. Reports must be byte-stable.
std::string dump_document(const json& j);

}  // namespace apec
