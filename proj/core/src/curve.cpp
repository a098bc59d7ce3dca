#include "apec/curve.hpp"

#include <ostream>
#include <utility>

namespace apec {

Rational CubicPoly::eval(const Rational& x) const {
  return ((x + p) * x + q) * x + r;
}

Rational CubicPoly::derivative_at(const Rational& x) const {
  return (Rational(3) * x + Rational(2) * p) * x + q;
}

Poly CubicPoly::poly() const {
  return Poly(std::vector<Rational>{r, q, p, Rational(1)});
}

ECPoint ECPoint::affine(Rational x, Rational y) {
  ECPoint pt;
  pt.inf_ = false;
  pt.x_ = std::move(x);
  pt.y_ = std::move(y);
  return pt;
}

const Rational& ECPoint::x() const {
  if (inf_) throw std::domain_error("x() of the point at infinity");
  return x_;
}

const Rational& ECPoint::y() const {
  if (inf_) throw std::domain_error("y() of the point at infinity");
  return y_;
}

bool ECPoint::operator==(const ECPoint& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return x_ == o.x_ && y_ == o.y_;
}

std::ostream& operator<<(std::ostream& os, const ECPoint& p) {
  if (p.is_infinity()) return os << "infinity";
  return os << "(" << p.x() << ", " << p.y() << ")";
}

ECPoint neg(const ECPoint& p) {
  if (p.is_infinity()) return p;
  return ECPoint::affine(p.x(), -p.y());
}

bool xy_less(const ECPoint& a, const ECPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

WeierstrassCurve::WeierstrassCurve(CubicPoly f, Rational disc)
    : f_(std::move(f)), disc_(std::move(disc)) {}

WeierstrassCurve WeierstrassCurve::make(const Rational& p, const Rational& q,
                                        const Rational& r) {
  CubicPoly f{p, q, r};
  Rational disc = Poly::discriminant(f.poly());
  if (disc.is_zero())
    fail(errc::singular_curve,
         "f(x) = " + f.poly().str() + " has a repeated root; y^2 = f(x) is not smooth");
  return WeierstrassCurve(std::move(f), std::move(disc));
}

bool WeierstrassCurve::contains(const ECPoint& pt) const {
  if (pt.is_infinity()) return true;
  return pt.y() * pt.y() == f_.eval(pt.x());
}

void WeierstrassCurve::require_on_curve(const ECPoint& pt, const char* who) const {
  if (!contains(pt)) {
    std::string coords = pt.is_infinity()
                             ? std::string("infinity")
                             : "(" + pt.x().str() + ", " + pt.y().str() + ")";
    fail(errc::point_not_on_curve,
         std::string(who) + ": " + coords + " does not satisfy y^2 = " + f_.poly().str());
  }
}

ECPoint WeierstrassCurve::add_impl(const ECPoint& a, const ECPoint& b) const {
  if (a.is_infinity()) return b;
  if (b.is_infinity()) return a;
  const Rational &x1 = a.x(), &y1 = a.y(), &x2 = b.x(), &y2 = b.y();
  Rational lambda;
  if (x1 == x2) {
    if (y1 == -y2) return ECPoint::infinity();  // includes the y = 0 case
    // tangent: on-curve points with equal x and y1 != -y2 must coincide
    lambda = f_.derivative_at(x1) / (Rational(2) * y1);
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  Rational x3 = lambda * lambda - f_.p - x1 - x2;
  Rational y3 = lambda * (x1 - x3) - y1;
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint WeierstrassCurve::add(const ECPoint& a, const ECPoint& b) const {
  require_on_curve(a, "add");
  require_on_curve(b, "add");
  return add_impl(a, b);
}

ECPoint WeierstrassCurve::scalar_mul(const Integer& k, const ECPoint& p) const {
  require_on_curve(p, "scalar_mul");
  if (sgn(k) == 0 || p.is_infinity()) return ECPoint::infinity();
  Integer n = ::abs(k);
  ECPoint acc = ECPoint::infinity();
  // left-to-right double-and-add
  for (mp_bitcnt_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    acc = add_impl(acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), bit)) acc = add_impl(acc, p);
  }
  return sgn(k) < 0 ? neg(acc) : acc;
}

bool WeierstrassCurve::is_two_torsion(const ECPoint& p) const {
  if (p.is_infinity()) return false;
  return p.y().is_zero();
}

std::vector<ECPoint> WeierstrassCurve::lift_x(const Rational& x) const {
  Rational fx = f_.eval(x);
  if (fx.is_zero()) return {ECPoint::affine(x, Rational(0))};
  if (!fx.is_square()) return {};
  Rational s = fx.sqrt();
  return {ECPoint::affine(x, s), ECPoint::affine(x, -s)};
}

}  // namespace apec
