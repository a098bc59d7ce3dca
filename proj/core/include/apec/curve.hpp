#pragma once

#include <iosfwd>
#include <vector>

#include "apec/error.hpp"
#include "apec/poly.hpp"
#include "apec/rational.hpp"

namespace apec {

// Monic cubic x^3 + p x^2 + q x + r.
struct CubicPoly {
  Rational p, q, r;

  Rational eval(const Rational& x) const;
  Rational derivative_at(const Rational& x) const;  // 3x^2 + 2px + q
  Poly poly() const;

  bool operator==(const CubicPoly& o) const {
    return p == o.p && q == o.q && r == o.r;
  }
};

// Affine rational point or the point at infinity.
class ECPoint {
public:
  ECPoint() : inf_(true) {}
  static ECPoint infinity() { return ECPoint{}; }
  static ECPoint affine(Rational x, Rational y);

  bool is_infinity() const { return inf_; }
  const Rational& x() const;  // pre: affine
  const Rational& y() const;  // pre: affine

  bool operator==(const ECPoint& o) const;
  bool operator!=(const ECPoint& o) const { return !(*this == o); }

  friend std::ostream& operator<<(std::ostream& os, const ECPoint& p);

private:
  bool inf_;
  Rational x_, y_;
};

ECPoint neg(const ECPoint& p);

// Total order with infinity first, then lexicographic (x, y). Fixes the
// output order of every point list in the library.
bool xy_less(const ECPoint& a, const ECPoint& b);

// Smooth curve y^2 = f(x) with f monic cubic; disc(f) != 0, cached.
// Immutable after construction; all operations are pure.
class WeierstrassCurve {
public:
  static WeierstrassCurve make(const Rational& p, const Rational& q, const Rational& r);

  const CubicPoly& f() const { return f_; }
  const Rational& disc() const { return disc_; }

  bool contains(const ECPoint& pt) const;

  // Chord-tangent group law; infinity is the identity. Throws
  // point_not_on_curve if an argument fails the exact on-curve check.
  ECPoint add(const ECPoint& a, const ECPoint& b) const;

  // [k]P by double-and-add; [0]P = infinity, [-k]P = neg([k]P).
  ECPoint scalar_mul(const Integer& k, const ECPoint& p) const;

  // true iff p is affine with y = 0. Infinity is not 2-torsion under this
  // predicate (it encodes "f(x) = 0", the trimming condition).
  bool is_two_torsion(const ECPoint& p) const;

  // The 0, 1 or 2 affine points above x; nonnegative-y point first. Needs
  // f(x) to be an exact rational square for a nonempty result.
  std::vector<ECPoint> lift_x(const Rational& x) const;

  bool operator==(const WeierstrassCurve& o) const { return f_ == o.f_; }

private:
  WeierstrassCurve(CubicPoly f, Rational disc);
  ECPoint add_impl(const ECPoint& a, const ECPoint& b) const;
  void require_on_curve(const ECPoint& pt, const char* who) const;

  CubicPoly f_;
  Rational disc_;
};

}  // namespace apec
