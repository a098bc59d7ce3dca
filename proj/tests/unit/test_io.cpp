#include <doctest.h>

#include "apec/io.hpp"

using namespace apec;

namespace {

const char* kSpecText = R"({
  "f": {"p": "0", "q": "-7", "r": "10"},
  "generators": [["-3", "2"], ["-1", "4"]],
  "torsion": ["infinity"],
  "enum": {"coeff_bound": 1, "size_cap": 512, "max_points": 4096},
  "constants": {"c": "2", "C": "2", "R": 1}
})";

errc code_of(const std::string& text) {
  try {
    parse_curve_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  return errc::usage_error;  // placeholder for "did not throw"
}

std::string msg_of(const std::string& text) {
  try {
    parse_curve_spec(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("a valid spec parses into exact values") {
  CurveSpec spec = parse_curve_spec(kSpecText);
  CHECK(spec.f.q == Rational(-7));
  CHECK(spec.f.r == Rational(10));
  REQUIRE(spec.generators.size() == 2);
  CHECK(spec.generators[0].x() == Rational(-3));
  CHECK(spec.generators[0].y() == Rational(2));
  REQUIRE(spec.torsion.size() == 1);
  CHECK(spec.torsion[0].is_infinity());
  CHECK(spec.enum_config.coeff_bound == 1);
  CHECK(spec.enum_config.size_cap == 512);
  REQUIRE(spec.constants.has_value());
  CHECK(spec.constants->count_c == Rational(2));
  CHECK(spec.constants->rank_cap == 1);
  CHECK(spec.provenance.is_null());
}

TEST_CASE("render then parse is the identity on specs") {
  CurveSpec spec = parse_curve_spec(kSpecText);
  spec.provenance = json{{"note", "round trip"}};
  std::string text = render_curve_spec(spec);
  CurveSpec again = parse_curve_spec(text);
  CHECK(again == spec);
  CHECK(render_curve_spec(again) == text);
}

TEST_CASE("diagnostics carry the field path") {
  std::string bad_rat = R"({"f": {"p": "0", "q": "1/0", "r": "10"},
    "generators": [], "torsion": ["infinity"]})";
  CHECK(code_of(bad_rat) == errc::parse_error);
  CHECK(msg_of(bad_rat).find("$.f.q") != std::string::npos);
  CHECK(msg_of(bad_rat).find("denominator is zero") != std::string::npos);

  std::string bad_point = R"({"f": {"p": "0", "q": "0", "r": "1"},
    "generators": [["2", "3"], ["2"]], "torsion": ["infinity"]})";
  CHECK(msg_of(bad_point).find("$.generators[1]") != std::string::npos);

  std::string bad_float = R"({"f": {"p": "0.5", "q": "0", "r": "1"},
    "generators": [], "torsion": ["infinity"]})";
  CHECK(code_of(bad_float) == errc::parse_error);
}

TEST_CASE("long Weierstrass input is rejected with guidance") {
  std::string longform = R"({"f": {"a1": "1", "a2": "0", "a3": "0", "a4": "1", "a6": "1"},
    "generators": [], "torsion": ["infinity"]})";
  CHECK(code_of(longform) == errc::parse_error);
  CHECK(msg_of(longform).find("complete the square") != std::string::npos);
}

TEST_CASE("unknown fields and structural mistakes are named") {
  CHECK(msg_of(R"({"f": {"p": "0", "q": "0", "r": "1"}, "generators": [],
    "torsion": ["infinity"], "surprise": 1})")
            .find("surprise") != std::string::npos);
  CHECK(code_of(R"({"generators": [], "torsion": ["infinity"]})") == errc::parse_error);
  CHECK(code_of("{") == errc::parse_error);
  CHECK(code_of("[]") == errc::parse_error);
  CHECK(msg_of(R"({"f": {"p": "0", "q": "0", "r": "1"}, "generators": [],
    "torsion": ["nowhere"]})")
            .find("$.torsion[0]") != std::string::npos);
}

TEST_CASE("parse validates the curve and the point set, with field paths") {
  std::string singular = R"({"f": {"p": "0", "q": "0", "r": "0"},
    "generators": [], "torsion": ["infinity"]})";
  CHECK(code_of(singular) == errc::parse_error);
  CHECK(msg_of(singular).find("$.f") != std::string::npos);
  CHECK(msg_of(singular).find("singular") != std::string::npos);

  std::string off_curve = R"({"f": {"p": "0", "q": "0", "r": "1"},
    "generators": [["1", "1"]], "torsion": ["infinity"]})";
  CHECK(code_of(off_curve) == errc::parse_error);
  CHECK(msg_of(off_curve).find("$.generators[0]") != std::string::npos);

  std::string no_infinity = R"({"f": {"p": "0", "q": "0", "r": "1"},
    "generators": [], "torsion": [["-1", "0"]]})";
  CHECK(code_of(no_infinity) == errc::parse_error);
  CHECK(msg_of(no_infinity).find("$.torsion") != std::string::npos);
}

TEST_CASE("constants must exceed 1 and parse as exact rationals") {
  std::string small_c = R"({"f": {"p": "0", "q": "0", "r": "1"}, "generators": [],
    "torsion": ["infinity"], "constants": {"c": "1", "C": "2", "R": 0}})";
  CHECK(code_of(small_c) == errc::parse_error);
  std::string rho = R"({"f": {"p": "0", "q": "0", "r": "1"}, "generators": [],
    "torsion": ["infinity"], "constants": {"c": "3/2", "C": "2", "R": 1, "rho": 1}})";
  CurveSpec spec = parse_curve_spec(rho);
  CHECK(spec.constants->count_c == Rational(3, 2));
  CHECK(spec.constants->rho_override == 1u);
}

TEST_CASE("documents serialize deterministically") {
  CurveSpec spec = parse_curve_spec(kSpecText);
  CHECK(render_curve_spec(spec) == render_curve_spec(spec));
  json j = curve_spec_to_json(spec);
  CHECK(dump_document(j).back() == '\n');
}
