#include <doctest.h>

#include <random>

#include "apec/curve.hpp"
#include "oracles.hpp"

using namespace apec;

namespace {

WeierstrassCurve e1() { return WeierstrassCurve::make(0, 0, 1); }    // y^2 = x^3 + 1
WeierstrassCurve e2() { return WeierstrassCurve::make(0, -1, 0); }   // y^2 = x^3 - x
WeierstrassCurve e3() { return WeierstrassCurve::make(0, -7, 10); }  // rank > 0 fixture

ECPoint pt(long x, long y) { return ECPoint::affine(Rational(x), Rational(y)); }

}  // namespace

TEST_CASE("make_curve computes the discriminant and rejects singular cubics") {
  CHECK_THROWS_WITH_AS(WeierstrassCurve::make(0, 0, 0), doctest::Contains("SingularCurve"),
                       Error);
  try {
    WeierstrassCurve::make(0, 0, 0);
  } catch (const Error& e) {
    CHECK(e.code() == errc::singular_curve);
  }
  CHECK(e1().disc() == Rational(-27));
  CHECK(e2().disc() == Rational(4));
  // independent closed-form oracle
  CHECK(e1().disc() == oracle::cubic_discriminant(0, 0, 1));
  CHECK(e2().disc() == oracle::cubic_discriminant(0, -1, 0));
  // x^3 - 3x + 2 = (x-1)^2 (x+2) is also singular
  CHECK_THROWS_AS(WeierstrassCurve::make(0, -3, 2), Error);
}

TEST_CASE("contains is the exact on-curve check") {
  WeierstrassCurve c = e1();
  CHECK(c.contains(pt(2, 3)));
  CHECK(c.contains(pt(0, -1)));
  CHECK(c.contains(ECPoint::infinity()));
  CHECK(!c.contains(pt(2, 4)));
  CHECK(!c.contains(pt(1, 1)));
}

TEST_CASE("add: doubling, identity, inverse") {
  WeierstrassCurve c = e1();
  ECPoint p = pt(2, 3);
  ECPoint d = c.add(p, p);
  CHECK(d == pt(0, 1));
  CHECK(oracle::group_law_witness(c, p, p, d));

  CHECK(c.add(p, ECPoint::infinity()) == p);
  CHECK(c.add(ECPoint::infinity(), p) == p);
  CHECK(c.add(p, neg(p)) == ECPoint::infinity());
  CHECK(c.add(pt(-1, 0), pt(-1, 0)) == ECPoint::infinity());  // 2-torsion doubles to O

  ECPoint sum = c.add(p, pt(0, 1));
  CHECK(sum == pt(-1, 0));
  CHECK(oracle::group_law_witness(c, p, pt(0, 1), sum));
}

TEST_CASE("add rejects off-curve points") {
  WeierstrassCurve c = e1();
  try {
    c.add(pt(1, 1), pt(2, 3));
    FAIL("expected PointNotOnCurve");
  } catch (const Error& e) {
    CHECK(e.code() == errc::point_not_on_curve);
  }
}

TEST_CASE("neg flips the sign of y") {
  CHECK(neg(pt(2, 3)) == pt(2, -3));
  CHECK(neg(ECPoint::infinity()) == ECPoint::infinity());
  CHECK(neg(pt(0, 1)) == pt(0, -1));
}

TEST_CASE("scalar_mul basics and torsion order") {
  WeierstrassCurve c = e1();
  ECPoint p = pt(2, 3);
  CHECK(c.scalar_mul(2, p) == pt(0, 1));
  CHECK(c.scalar_mul(0, p) == ECPoint::infinity());
  CHECK(c.scalar_mul(1, p) == p);
  CHECK(c.scalar_mul(3, p) == pt(-1, 0));
  CHECK(c.scalar_mul(6, p) == ECPoint::infinity());  // (2,3) has order 6
  CHECK(c.scalar_mul(-2, p) == neg(c.scalar_mul(2, p)));
}

TEST_CASE("scalar_mul distributes over addition of exponents") {
  WeierstrassCurve c = e3();
  ECPoint g = pt(-3, 2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int i = 0; i < 25; ++i) {
    long m = dist(rng), n = dist(rng);
    ECPoint lhs = c.scalar_mul(m + n, g);
    ECPoint rhs = c.add(c.scalar_mul(m, g), c.scalar_mul(n, g));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("group law properties on random points, witnessed independently") {
  WeierstrassCurve c = e3();
  std::vector<ECPoint> pool{ECPoint::infinity()};
  for (long k = -3; k <= 3; ++k) {
    pool.push_back(c.scalar_mul(k, pt(-3, 2)));
    pool.push_back(c.add(c.scalar_mul(k, pt(-3, 2)), pt(-1, 4)));
  }
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 60; ++i) {
    const ECPoint& p = pool[pick(rng)];
    const ECPoint& q = pool[pick(rng)];
    ECPoint s = c.add(p, q);
    CHECK(c.contains(s));                            // closure
    CHECK(c.add(q, p) == s);                         // commutativity
    CHECK(oracle::group_law_witness(c, p, q, s));    // line substitution
    CHECK(c.add(p, neg(p)) == ECPoint::infinity());  // inverse
  }
  for (int i = 0; i < 20; ++i) {
    const ECPoint& p = pool[pick(rng)];
    const ECPoint& q = pool[pick(rng)];
    const ECPoint& r = pool[pick(rng)];
    CHECK(c.add(c.add(p, q), r) == c.add(p, c.add(q, r)));  // associativity
  }
}

TEST_CASE("is_two_torsion means y = 0, never infinity") {
  WeierstrassCurve c = e2();
  CHECK(c.is_two_torsion(pt(0, 0)));
  CHECK(c.is_two_torsion(pt(1, 0)));
  CHECK(c.is_two_torsion(pt(-1, 0)));
  CHECK(!c.is_two_torsion(ECPoint::infinity()));
  WeierstrassCurve c3 = e3();
  CHECK(!c3.is_two_torsion(pt(-3, 2)));
}

TEST_CASE("is_two_torsion(P) iff P + P = infinity for affine P") {
  WeierstrassCurve c = e2();
  for (const ECPoint& p : {pt(0, 0), pt(1, 0), pt(-1, 0)})
    CHECK((c.add(p, p) == ECPoint::infinity()) == c.is_two_torsion(p));
  WeierstrassCurve c1 = e1();
  for (const ECPoint& p : {pt(2, 3), pt(0, 1), pt(-1, 0)})
    CHECK((c1.add(p, p) == ECPoint::infinity()) == c1.is_two_torsion(p));
}

TEST_CASE("lift_x returns the canonical fiber") {
  WeierstrassCurve c = e1();
  auto two = c.lift_x(Rational(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == pt(2, 3));   // nonnegative y first
  CHECK(two[1] == pt(2, -3));
  auto root = c.lift_x(Rational(-1));
  REQUIRE(root.size() == 1);
  CHECK(root[0] == pt(-1, 0));
  CHECK(c.lift_x(Rational(1)).empty());  // f(1) = 2, not a square
}

TEST_CASE("lift_x fiber size matches the square character of f(x)") {
  WeierstrassCurve c = e3();
  for (long num = -20; num <= 20; ++num) {
    for (long den = 1; den <= 3; ++den) {
      Rational x(num, den);
      Rational fx = c.f().eval(x);
      auto fiber = c.lift_x(x);
      CHECK((fiber.size() == 2) == (fx.is_square() && !fx.is_zero()));
      CHECK((fiber.size() == 1) == fx.is_zero());
      for (const ECPoint& p : fiber) {
        CHECK(p.x() == x);
        CHECK(c.contains(p));
      }
    }
  }
}
