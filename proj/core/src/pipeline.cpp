#include "apec/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "apec/ap_search.hpp"
#include "apec/construct.hpp"

namespace apec {

namespace {

json triple_json(const ApTriple& t) {
  return {{"first", rational_json(t.first)},
          {"step", rational_json(t.step)},
          {"length", t.length}};
}

json curve_json(const WeierstrassCurve& curve) {
  return {{"p", rational_json(curve.f().p)},
          {"q", rational_json(curve.f().q)},
          {"r", rational_json(curve.f().r)},
          {"disc", rational_json(curve.disc())}};
}

json poly_json(const Poly& p) {
  json arr = json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

EnumConfig effective_config(const CurveSpec& spec, const PipelineOptions& opt) {
  EnumConfig cfg = spec.enum_config;
  if (opt.coeff_bound) cfg.coeff_bound = *opt.coeff_bound;
  if (opt.size_cap) cfg.size_cap = *opt.size_cap;
  if (opt.max_points) cfg.max_points = *opt.max_points;
  return cfg;
}

struct EnumStage {
  WeierstrassCurve curve;
  EnumResult result;
  std::vector<Rational> xs;  // distinct, ascending
};

EnumStage run_enum_stage(const CurveSpec& spec, const PipelineOptions& opt) {
  WeierstrassCurve curve = WeierstrassCurve::make(spec.f.p, spec.f.q, spec.f.r);
  GeneratorSet gs = GeneratorSet::make(curve, spec.generators, spec.torsion);
  EnumResult result = enumerate_points(gs, effective_config(spec, opt));
  std::vector<Rational> xs;
  for (const ECPoint& p : result.points)  // already (x, y)-sorted
    if (xs.empty() || xs.back() != p.x()) xs.push_back(p.x());
  return EnumStage{std::move(curve), std::move(result), std::move(xs)};
}

json enum_json(const EnumResult& r) {
  return {{"count", r.points.size()},
          {"combinations", r.combinations},
          {"skipped_oversize", r.skipped_oversize},
          {"truncated", r.truncated}};
}

struct ConstructStage {
  APRecord trimmed;
  std::size_t offset;
  HyperellipticModel model;
  std::vector<LiftedPoint> lifts;
  std::vector<ECPoint> images;
  std::size_t distinct_images;
  bool images_on_curve;
};

ConstructStage run_construct_stage(const WeierstrassCurve& curve, const Rational& first,
                                   const Rational& step, std::uint32_t length) {
  APRecord designated = ap_points(curve, first, step, length);
  APRecord trimmed = trim_ap(curve, designated);
  std::size_t offset = designated.length() - trimmed.length();
  HyperellipticModel model = construct_X(curve, trimmed);
  std::vector<LiftedPoint> lifts = lift_points(model, trimmed);

  std::vector<ECPoint> images;
  bool on_curve = true;
  auto less = [](const ECPoint& a, const ECPoint& b) { return xy_less(a, b); };
  std::set<ECPoint, decltype(less)> distinct(less);
  for (const LiftedPoint& lp : lifts) {
    ECPoint img = map_pi(model, lp);
    on_curve = on_curve && curve.contains(img);
    distinct.insert(img);
    images.push_back(std::move(img));
  }
  return ConstructStage{std::move(trimmed), offset,        std::move(model),
                        std::move(lifts),  std::move(images), distinct.size(),
                        on_curve};
}

json construct_json(const ConstructStage& st) {
  const APRecord& ap = st.trimmed;
  json hexic = json::array();
  for (const Rational& c : st.model.g.coefficients()) hexic.push_back(rational_json(c));

  json lifts = json::array();
  for (std::size_t i = 0; i < st.lifts.size(); ++i) {
    const LiftedPoint& lp = st.lifts[i];
    const ECPoint& img = st.images[i];
    Integer idx = lp.t * lp.t;
    lifts.push_back({{"t", lp.t.get_str()},
                     {"s", rational_json(lp.s)},
                     {"x", rational_json(img.x())},
                     {"y", rational_json(img.y())},
                     {"ap_index", idx.get_str()}});
  }

  std::size_t count = st.lifts.size();
  std::size_t expected_min = (count + 1) / 2;  // ceil((2n+1)/2) = n+1
  return {{"a", rational_json(ap.step())},
          {"b", rational_json(ap.first())},
          {"trimmed",
           {{"first", rational_json(ap.first())},
            {"step", rational_json(ap.step())},
            {"length", ap.length()},
            {"offset", st.offset}}},
          {"hexic", std::move(hexic)},
          {"certificate", {{"u", poly_json(st.model.certificate.u)},
                           {"v", poly_json(st.model.certificate.v)}}},
          {"resultant", rational_json(st.model.resultant)},
          {"squarefree", true},
          {"lifts", std::move(lifts)},
          {"pi",
           {{"distinct_images", st.distinct_images},
            {"expected_min", expected_min},
            {"images_on_curve", st.images_on_curve},
            {"nonconstant", st.distinct_images >= expected_min && st.distinct_images > 0}}}};
}

json uniformity_json(const Integer& M, std::uint32_t rank_cap, const UniformityReport& u,
                     const Rational& c) {
  return {{"M", M.get_str()},
          {"R", rank_cap},
          {"c", rational_json(c)},
          {"rho", u.rho},
          {"lhs", u.lhs.get_str()},
          {"rhs", rational_json(u.rhs)},
          {"consistent", u.consistent},
          {"m_max", u.m_max.get_str()}};
}

void append_construct_summary(std::ostringstream& os, const ConstructStage& st) {
  os << "trimmed progression: first " << st.trimmed.first().str() << ", step "
     << st.trimmed.step().str() << ", length " << st.trimmed.length()
     << " (dropped " << st.offset << ")\n";
  os << "hexic g(t) = " << st.model.g.poly().str("t") << "\n";
  os << "squarefree: certified (resultant " << st.model.resultant.str() << ")\n";
  os << "lifted points: " << st.lifts.size() << "; distinct images on E: "
     << st.distinct_images << "\n";
}

}  // namespace

RunResult run_ap_find(const CurveSpec& spec, const PipelineOptions& opt) {
  if (opt.min_len < 3)
    fail(errc::usage_error,
         "ap-find needs min_len >= 3, got " + std::to_string(opt.min_len));
  EnumStage en = run_enum_stage(spec, opt);

  std::vector<ApTriple> maximal;
  if (!en.xs.empty()) maximal = all_maximal_aps(en.xs, opt.min_len);

  RunResult out;
  json aps = json::array();
  for (const ApTriple& t : maximal) aps.push_back(triple_json(t));
  out.report = {{"format", 1},
                {"curve", curve_json(en.curve)},
                {"enumeration", enum_json(en.result)},
                {"ap", {{"min_length", opt.min_len}, {"maximal", std::move(aps)}}}};
  std::ostringstream os;
  os << "enumerated " << en.result.points.size() << " points ("
     << en.result.skipped_oversize << " skipped oversize, truncated "
     << (en.result.truncated ? "yes" : "no") << ")\n";
  if (maximal.empty()) {
    out.report["status"] = "no-ap";
    out.report["ap"]["best"] = nullptr;
    out.exit_code = kExitNoAp;
    os << "no progression of length >= " << opt.min_len << "\n";
  } else {
    out.report["status"] = "ok";
    out.report["ap"]["best"] = triple_json(maximal.front());
    out.exit_code = kExitOk;
    os << "best progression: first " << maximal.front().first.str() << ", step "
       << maximal.front().step.str() << ", length " << maximal.front().length << "\n";
  }
  out.summary = os.str();
  return out;
}

RunResult run_construct(const CurveSpec& spec, const Rational& first,
                        const Rational& step, std::uint32_t length) {
  WeierstrassCurve curve = WeierstrassCurve::make(spec.f.p, spec.f.q, spec.f.r);
  ConstructStage st = run_construct_stage(curve, first, step, length);
  RunResult out;
  out.report = {{"format", 1},
                {"curve", curve_json(curve)},
                {"designated", {{"first", rational_json(first)},
                                {"step", rational_json(step)},
                                {"length", length}}},
                {"construction", construct_json(st)},
                {"status", "ok"}};
  std::ostringstream os;
  append_construct_summary(os, st);
  out.summary = os.str();
  return out;
}

json run_bound(const Integer& M, std::uint32_t rank_cap, const Rational& c,
               std::optional<std::uint32_t> rank_e, std::optional<Rational> length_c,
               std::optional<std::uint32_t> rho_override) {
  UniformityReport u = uniformity_check(M, rank_cap, c, rho_override);
  json out = {{"jacobian_rank_bound", jacobian_rank_cap(rank_cap)},
              {"uniformity", uniformity_json(M, rank_cap, u, c)}};
  if (rank_e && length_c) {
    Rational bound = rank_length_bound(*length_c, *rank_e);
    out["rank_length"] = {{"C", rational_json(*length_c)},
                   {"rank", *rank_e},
                   {"ap_length", M.get_str()},
                   {"bound", rational_json(bound)},
                   {"consistent", Rational(M) <= bound}};
  }
  return out;
}

RunResult run_pipeline(const CurveSpec& spec, const PipelineOptions& opt) {
  if (opt.min_len < 4)
    fail(errc::usage_error, "pipeline needs min_len >= 4, got " +
                                std::to_string(opt.min_len));

  // constants must be resolvable before any work happens
  std::optional<Rational> count_c = opt.count_c;
  std::optional<Rational> length_c = opt.length_c;
  std::optional<std::uint32_t> rank_cap = opt.rank_cap;
  std::optional<std::uint32_t> rho_override;
  if (spec.constants) {
    if (!count_c) count_c = spec.constants->count_c;
    if (!length_c) length_c = spec.constants->length_c;
    if (!rank_cap) rank_cap = spec.constants->rank_cap;
    rho_override = spec.constants->rho_override;
  }
  if (!count_c || !length_c || !rank_cap)
    fail(errc::usage_error,
         "bound constants required: supply a 'constants' object in the spec "
         "or pass --c, --C and --R");
  RankLedger ledger = RankLedger::make(
      static_cast<std::uint32_t>(spec.generators.size()), *rank_cap, *count_c,
      *length_c, rho_override);

  RunResult out = run_ap_find(spec, opt);
  if (out.exit_code == kExitNoAp) return out;

  const json& best = out.report["ap"]["best"];
  Rational first = *Rational::parse(best["first"].get<std::string>());
  Rational step = *Rational::parse(best["step"].get<std::string>());
  std::uint32_t length = best["length"].get<std::uint32_t>();

  WeierstrassCurve curve = WeierstrassCurve::make(spec.f.p, spec.f.q, spec.f.r);
  ConstructStage st = run_construct_stage(curve, first, step, length);
  out.report["construction"] = construct_json(st);

  BoundVerdict v = verdict(Integer(static_cast<long>(length)), ledger);
  out.report["bounds"] = {
      {"jacobian_rank_bound", v.jacobian_rank_bound},
      {"rank_length", {{"C", rational_json(ledger.length_c)},
                {"rank", ledger.rank_e},
                {"ap_length", v.ap_length.get_str()},
                {"bound", rational_json(v.length_bound_value)},
                {"consistent", v.length_consistent}}},
      {"uniformity", uniformity_json(v.ap_length, ledger.rank_cap, v.uniformity,
                                     ledger.count_c)}};

  std::ostringstream os;
  os << out.summary;
  append_construct_summary(os, st);
  os << "rank-length: " << v.ap_length.get_str() << " <= " << v.length_bound_value.str() << " : "
     << (v.length_consistent ? "consistent" : "constants falsified at these values")
     << "\n";
  os << "uniformity: lhs " << v.uniformity.lhs.get_str() << " <= rhs "
     << v.uniformity.rhs.str() << " : "
     << (v.uniformity.consistent ? "consistent" : "constants falsified at these values")
     << "; m_max " << v.uniformity.m_max.get_str() << "\n";
  out.summary = os.str();
  return out;
}

// ---------------------------------------------------------------------------
// report verification

namespace {

struct Checker {
  std::vector<CheckResult> checks;

  void record(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back(CheckResult{name, ok, detail});
  }

  template <typename F>
  void check(const std::string& name, F&& body) {
    try {
      std::string detail;
      bool ok = body(detail);
      record(name, ok, detail);
    } catch (const std::exception& e) {
      record(name, false, e.what());
    }
  }
};

Rational rat_field(const json& j) {
  return parse_rational_field(j, "report");
}

Poly poly_field(const json& arr) {
  std::vector<Rational> cs;
  for (const json& c : arr) cs.push_back(rat_field(c));
  return Poly(std::move(cs));
}

// closed-form cubic discriminant; deliberately not the library's
// resultant-based route
Rational cubic_disc_direct(const Rational& p, const Rational& q, const Rational& r) {
  return Rational(18) * p * q * r - Rational(4) * p * p * p * r + p * p * q * q -
         Rational(4) * q * q * q - Rational(27) * r * r;
}

}  // namespace

VerifyOutcome verify_report(const json& report) {
  Checker ck;

  bool shaped = report.is_object() && report.contains("curve") &&
                report.contains("construction");
  ck.record("report/shape", shaped,
            shaped ? "" : "expected 'curve' and 'construction' objects");
  if (!shaped) return VerifyOutcome{false, std::move(ck.checks)};

  const json& jc = report["curve"];
  const json& jx = report["construction"];

  CubicPoly f;
  Rational a, b;
  std::uint64_t n_len = 0;

  ck.check("curve/smooth", [&](std::string& detail) {
    f.p = rat_field(jc.at("p"));
    f.q = rat_field(jc.at("q"));
    f.r = rat_field(jc.at("r"));
    Rational disc = cubic_disc_direct(f.p, f.q, f.r);
    if (disc.is_zero()) {
      detail = "discriminant vanishes";
      return false;
    }
    if (disc != rat_field(jc.at("disc"))) {
      detail = "recomputed discriminant " + disc.str() + " != reported";
      return false;
    }
    return true;
  });

  ck.check("trimmed/progression", [&](std::string& detail) {
    const json& tr = jx.at("trimmed");
    a = rat_field(jx.at("a"));
    b = rat_field(jx.at("b"));
    n_len = tr.at("length").get<std::uint64_t>();
    std::uint64_t offset = tr.at("offset").get<std::uint64_t>();
    if (a.is_zero() || n_len < 1 || offset > 3) {
      detail = "trivial step, empty progression or offset > 3";
      return false;
    }
    if (rat_field(tr.at("first")) != b || rat_field(tr.at("step")) != a) {
      detail = "trimmed first/step disagree with a/b";
      return false;
    }
    if (f.eval(b).is_zero()) {
      detail = "f(first) = 0: trimming invariant violated";
      return false;
    }
    // leading terms dropped by the trim must all be roots of f
    const json* origin = nullptr;
    if (report.contains("ap") && report["ap"].contains("best") &&
        !report["ap"]["best"].is_null())
      origin = &report["ap"]["best"];
    else if (report.contains("designated"))
      origin = &report["designated"];
    if (origin != nullptr) {
      Rational f0 = rat_field(origin->at("first"));
      Rational s0 = rat_field(origin->at("step"));
      std::uint64_t m = origin->at("length").get<std::uint64_t>();
      if (s0 != a || f0 + Rational(static_cast<long>(offset)) * s0 != b ||
          m != n_len + offset) {
        detail = "trimmed progression is not the declared suffix";
        return false;
      }
      Rational x = f0;
      for (std::uint64_t i = 0; i < offset; ++i) {
        if (!f.eval(x).is_zero()) {
          detail = "dropped term " + x.str() + " is not a root of f";
          return false;
        }
        x += s0;
      }
    }
    return true;
  });

  std::vector<Rational> g(7);
  ck.check("hexic/identity", [&](std::string& detail) {
    const json& hex = jx.at("hexic");
    if (!hex.is_array() || hex.size() != 7) {
      detail = "expected 7 coefficients";
      return false;
    }
    for (std::size_t k = 0; k < 7; ++k) g[k] = rat_field(hex[k]);
    if (g[6] != a * a * a) {
      detail = "leading coefficient != a^3";
      return false;
    }
    if (!g[1].is_zero() || !g[3].is_zero() || !g[5].is_zero()) {
      detail = "odd coefficients present";
      return false;
    }
    // degree-6 identity checked at 7 points
    for (long t = 0; t <= 6; ++t) {
      Rational tv(t);
      Rational direct = f.eval(a * tv * tv + b);
      Rational horner = g[6];
      for (std::size_t k = 6; k-- > 0;) horner = horner * tv + g[k];
      if (direct != horner) {
        detail = "g(" + std::to_string(t) + ") != f(a*t^2 + b)";
        return false;
      }
    }
    return true;
  });

  Poly gp(std::vector<Rational>(g.begin(), g.end()));
  Poly dgp = gp.derivative();

  ck.check("hexic/certificate", [&](std::string& detail) {
    const json& cert = jx.at("certificate");
    Poly u = poly_field(cert.at("u"));
    Poly v = poly_field(cert.at("v"));
    if (u * gp + v * dgp != Poly::constant(Rational(1))) {
      detail = "u*g + v*g' != 1";
      return false;
    }
    for (long t = 0; t <= 11; ++t) {  // max degree of u*g + v*g' is 11
      Rational tv(t);
      if (u.eval(tv) * gp.eval(tv) + v.eval(tv) * dgp.eval(tv) != Rational(1)) {
        detail = "certificate identity fails at t = " + std::to_string(t);
        return false;
      }
    }
    return true;
  });

  ck.check("hexic/resultant", [&](std::string& detail) {
    Rational res = rat_field(jx.at("resultant"));
    if (res.is_zero()) {
      detail = "reported resultant is zero";
      return false;
    }
    if (Poly::resultant(gp, dgp) != res) {
      detail = "recomputed resultant disagrees";
      return false;
    }
    if (jx.at("squarefree").get<bool>() != true) {
      detail = "squarefree flag must be true in an accepted report";
      return false;
    }
    return true;
  });

  ck.check("lifts/count", [&](std::string& detail) {
    const json& lifts = jx.at("lifts");
    Integer n = isqrt(Integer(static_cast<unsigned long>(n_len - 1)));
    Integer expect = 2 * n + 1;
    if (Integer(static_cast<long>(lifts.size())) != expect) {
      detail = "expected " + expect.get_str() + " lifts, found " +
               std::to_string(lifts.size());
      return false;
    }
    Integer t = -n;
    for (const json& lp : lifts) {
      if (Integer(lp.at("t").get<std::string>()) != t) {
        detail = "t values are not -n..n in order";
        return false;
      }
      ++t;
    }
    return true;
  });

  ck.check("lifts/on-model", [&](std::string& detail) {
    for (const json& lp : jx.at("lifts")) {
      Rational t(Integer(lp.at("t").get<std::string>()));
      Rational s = rat_field(lp.at("s"));
      Rational gt = g[6];
      for (std::size_t k = 6; k-- > 0;) gt = gt * t + g[k];
      if (s * s != gt) {
        detail = "s^2 != g(t) at t = " + t.str();
        return false;
      }
    }
    return true;
  });

  ck.check("lifts/covering", [&](std::string& detail) {
    for (const json& lp : jx.at("lifts")) {
      Rational t(Integer(lp.at("t").get<std::string>()));
      Rational s = rat_field(lp.at("s"));
      Rational x = rat_field(lp.at("x"));
      Rational y = rat_field(lp.at("y"));
      Integer idx(lp.at("ap_index").get<std::string>());
      if (x != a * t * t + b || y != s) {
        detail = "pi image disagrees with (a*t^2 + b, s)";
        return false;
      }
      if (y * y != f.eval(x)) {
        detail = "image is not on the curve";
        return false;
      }
      if (Rational(idx) != t * t || idx >= Integer(static_cast<unsigned long>(n_len))) {
        detail = "ap_index != t^2 or out of range";
        return false;
      }
    }
    return true;
  });

  ck.check("pi/images", [&](std::string& detail) {
    const json& pi = jx.at("pi");
    std::size_t count = jx.at("lifts").size();
    std::size_t expected_min = (count + 1) / 2;
    if (pi.at("expected_min").get<std::size_t>() != expected_min) {
      detail = "expected_min != ceil(count/2)";
      return false;
    }
    if (pi.at("distinct_images").get<std::size_t>() != expected_min) {
      detail = "distinct image count != n+1";
      return false;
    }
    if (!pi.at("images_on_curve").get<bool>() || !pi.at("nonconstant").get<bool>()) {
      detail = "image flags not set";
      return false;
    }
    return true;
  });

  if (report.contains("bounds")) {
    const json& bounds = report["bounds"];
    ck.check("bounds/rank-length", [&](std::string& detail) {
      if (!bounds.contains("rank_length")) return true;
      const json& t = bounds["rank_length"];
      Rational C = rat_field(t.at("C"));
      std::uint32_t rank = t.at("rank").get<std::uint32_t>();
      Integer len(t.at("ap_length").get<std::string>());
      Rational bound = rank_length_bound(C, rank);
      if (bound != rat_field(t.at("bound"))) {
        detail = "recomputed C^(r+1) disagrees";
        return false;
      }
      if (t.at("consistent").get<bool>() != (Rational(len) <= bound)) {
        detail = "consistency flag disagrees";
        return false;
      }
      return true;
    });
    ck.check("bounds/uniformity", [&](std::string& detail) {
      const json& u = bounds.at("uniformity");
      Integer M(u.at("M").get<std::string>());
      std::uint32_t rank_cap = u.at("R").get<std::uint32_t>();
      std::uint64_t rho = u.at("rho").get<std::uint64_t>();
      Rational c = rat_field(u.at("c"));
      UniformityReport rep =
          uniformity_check(M, rank_cap, c,
                           rho == jacobian_rank_cap(rank_cap)
                               ? std::optional<std::uint32_t>{}
                               : std::optional<std::uint32_t>(
                                     static_cast<std::uint32_t>(rho)));
      if (rep.lhs != Integer(u.at("lhs").get<std::string>()) ||
          rep.rhs != rat_field(u.at("rhs")) ||
          rep.m_max != Integer(u.at("m_max").get<std::string>()) ||
          rep.consistent != u.at("consistent").get<bool>()) {
        detail = "recomputed uniformity data disagrees";
        return false;
      }
      if (bounds.at("jacobian_rank_bound").get<std::uint64_t>() !=
          jacobian_rank_cap(rank_cap)) {
        detail = "jacobian_rank_bound != 2R";
        return false;
      }
      return true;
    });
  }

  bool ok = true;
  for (const CheckResult& c : ck.checks) ok = ok && c.ok;
  return VerifyOutcome{ok, std::move(ck.checks)};
}

}  // namespace apec
