#include "apec/construct.hpp"

#include <string>
#include <utility>

namespace apec {

HexicPoly HexicPoly::from_coefficients(std::array<Rational, 7> c) {
  if (c[6].is_zero())
    fail(errc::internal_mismatch, "hexic leading coefficient is zero");
  return HexicPoly(std::move(c));
}

Rational HexicPoly::eval(const Rational& t) const {
  Rational acc = c_[6];
  for (std::size_t k = 6; k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

bool HexicPoly::is_even() const {
  return c_[1].is_zero() && c_[3].is_zero() && c_[5].is_zero();
}

Poly HexicPoly::poly() const {
  return Poly(std::vector<Rational>(c_.begin(), c_.end()));
}

HexicPoly build_hexic(const CubicPoly& f, const Rational& a, const Rational& b) {
  if (a.is_zero())
    fail(errc::trivial_difference, "substitution a*t^2 + b needs a != 0");
  // f(a t^2 + b) by Horner over polynomials in t
  Poly inner(std::vector<Rational>{b, Rational(0), a});
  Poly g = f.poly().compose(inner);
  std::array<Rational, 7> c;
  for (std::size_t k = 0; k < 7; ++k) c[k] = g.coeff(k);
  return HexicPoly::from_coefficients(std::move(c));
}

SquarefreeResult is_squarefree(const HexicPoly& g) {
  Poly gp = g.poly();
  Poly dg = gp.derivative();
  ExtendedGcd e = extended_gcd(gp, dg);
  SquarefreeResult out;
  if (e.g.degree() == 0) {
    out.squarefree = true;
    out.certificate = SquarefreeCertificate{std::move(e.u), std::move(e.v)};
  } else {
    out.squarefree = false;
    out.repeated_factor = std::move(e.g);
  }
  return out;
}

bool check_certificate(const HexicPoly& g, const SquarefreeCertificate& cert) {
  Poly gp = g.poly();
  Poly lhs = cert.u * gp + cert.v * gp.derivative();
  return lhs == Poly::constant(Rational(1));
}

std::size_t trim_offset(const CubicPoly& f, const Rational& first,
                        const Rational& step, std::size_t length) {
  Rational x = first;
  for (std::size_t i = 0; i < length; ++i) {
    if (!f.eval(x).is_zero()) return i;
    x += step;
  }
  return length;
}

APRecord trim_ap(const WeierstrassCurve& curve, const APRecord& ap) {
  const std::size_t m = ap.length();
  if (m < 4)
    fail(errc::ap_too_short,
         "trimming needs a progression of length >= 4, got " + std::to_string(m));
  std::size_t off = trim_offset(curve.f(), ap.first(), ap.step(), m);
  if (off == m)
    fail(errc::all_two_torsion,
         "every term is a root of f; impossible on a smooth curve for length >= 4");
  if (off == 0) return ap;
  std::vector<ECPoint> tail(ap.points().begin() + static_cast<long>(off),
                            ap.points().end());
  return APRecord::make(curve, ap.x_at(off), ap.step(), std::move(tail));
}

HyperellipticModel construct_X(const WeierstrassCurve& curve, const Rational& first,
                               const Rational& step) {
  if (step.is_zero())
    fail(errc::trivial_difference, "progression step must be nonzero");
  if (curve.f().eval(first).is_zero())
    fail(errc::first_term_two_torsion,
         "f(" + first.str() + ") = 0: first term is 2-torsion, trim the progression");
  HexicPoly g = build_hexic(curve.f(), step, first);
  SquarefreeResult sq = is_squarefree(g);
  if (!sq.squarefree || !check_certificate(g, *sq.certificate))
    fail(errc::not_squarefree,
         "hexic certification failed; inputs violate the smoothness invariants");
  Poly gp = g.poly();
  Rational res = Poly::resultant(gp, gp.derivative());
  if (res.is_zero())
    fail(errc::not_squarefree, "resultant cross-check vanished unexpectedly");
  return HyperellipticModel{std::move(g), curve, step, first,
                            std::move(*sq.certificate), std::move(res)};
}

HyperellipticModel construct_X(const WeierstrassCurve& curve, const APRecord& trimmed) {
  return construct_X(curve, trimmed.first(), trimmed.step());
}

std::vector<Integer> lift_ts(std::uint64_t ap_length) {
  if (ap_length < 1) fail(errc::usage_error, "progression length must be >= 1");
  Integer n = isqrt(Integer(static_cast<unsigned long>(ap_length - 1)));
  std::vector<Integer> ts;
  for (Integer t = -n; t <= n; ++t) ts.push_back(t);
  return ts;
}

std::vector<LiftedPoint> lift_points(const HyperellipticModel& model, const APRecord& ap) {
  if (model.first != ap.first() || model.step != ap.step() ||
      !(model.source == ap.curve()))
    fail(errc::internal_mismatch, "model was not built from this progression");
  std::vector<LiftedPoint> out;
  for (Integer& t : lift_ts(ap.length())) {
    Integer m = t * t;  // fits: |t| <= sqrt(N-1)
    const ECPoint& pt = ap.points().at(m.get_ui());
    const Rational& s = pt.y();
    if (s * s != model.g.eval(Rational(t)))
      fail(errc::internal_mismatch,
           "s^2 != g(" + t.get_str() + "): corrupted progression or model");
    out.push_back(LiftedPoint{std::move(t), s});
  }
  return out;
}

ECPoint map_pi(const HyperellipticModel& model, const LiftedPoint& pt) {
  Rational t(pt.t);
  if (pt.s * pt.s != model.g.eval(t))
    fail(errc::point_not_on_model,
         "(" + pt.t.get_str() + ", " + pt.s.str() + ") does not satisfy s^2 = g(t)");
  Rational x = model.step * t * t + model.first;
  ECPoint image = ECPoint::affine(std::move(x), pt.s);
  // y^2 = s^2 = g(t) = f(a t^2 + b) = f(x) holds identically
  return image;
}

}  // namespace apec
