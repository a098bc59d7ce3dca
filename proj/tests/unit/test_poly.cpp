#include <doctest.h>

#include <random>

#include "apec/poly.hpp"
#include "oracles.hpp"

using apec::Poly;
using apec::Rational;

namespace {

Poly make(std::initializer_list<long> coeffs) {
  std::vector<Rational> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return Poly(std::move(cs));
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  int deg = deg_dist(rng);
  std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1);
  for (auto& c : cs) c = apec::oracle::random_rational(rng, 9, 4);
  if (cs.back().is_zero()) cs.back() = Rational(1);
  return Poly(std::move(cs));
}

}  // namespace

TEST_CASE("degree, trim and evaluation") {
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly{}.is_zero());
  CHECK(Poly(std::vector<Rational>{Rational(0), Rational(0)}).is_zero());
  Poly f = make({6, 11, 6, 1});  // (x+1)(x+2)(x+3)
  CHECK(f.degree() == 3);
  CHECK(f.eval(Rational(-1)) == Rational(0));
  CHECK(f.eval(Rational(1)) == Rational(24));
  CHECK(f.eval(Rational(1, 2)) == Rational(6) + Rational(11, 2) + Rational(6, 4) + Rational(1, 8));
}

TEST_CASE("derivative and compose") {
  Poly f = make({1, 0, 1});  // x^2 + 1
  CHECK(f.derivative() == make({0, 2}));
  Poly inner = make({1, 1});  // x + 1
  CHECK(f.compose(inner) == make({2, 2, 1}));  // (x+1)^2 + 1
  CHECK(make({0}).degree() == -1);
  CHECK(Poly::constant(Rational(5)).compose(inner) == Poly::constant(Rational(5)));
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 4);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Poly{});
    Rational x = apec::oracle::random_rational(rng, 7, 3);
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("divmod: a = q*b + r with deg r < deg b") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 80; ++i) {
    Poly a = random_poly(rng, 7), b = random_poly(rng, 4);
    auto [q, r] = Poly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(Poly::divmod(make({1}), Poly{}), std::domain_error);
}

TEST_CASE("gcd is monic and divides both arguments") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 50; ++i) {
    Poly f = random_poly(rng, 3), g = random_poly(rng, 3), h = random_poly(rng, 2);
    Poly d = Poly::gcd(f * h, g * h);
    CHECK(!d.is_zero());
    CHECK(d.leading().is_one());
    CHECK(d.degree() >= h.degree());  // h divides the gcd
    CHECK(Poly::divmod(f * h, d).second.is_zero());
    CHECK(Poly::divmod(g * h, d).second.is_zero());
  }
  CHECK(Poly::gcd(Poly{}, Poly{}).is_zero());
  CHECK(Poly::gcd(make({0, 1}), Poly{}) == make({0, 1}));
}

TEST_CASE("extended gcd: u*a + v*b == g") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 60; ++i) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 4);
    apec::ExtendedGcd e = apec::extended_gcd(a, b);
    CHECK(e.u * a + e.v * b == e.g);
    CHECK(e.g == Poly::gcd(a, b));
  }
}

TEST_CASE("resultant vanishes exactly on common factors") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 3);
    bool coprime = Poly::gcd(a, b).degree() == 0;
    CHECK((Poly::resultant(a, b) != Rational(0)) == coprime);
    Poly h = random_poly(rng, 2);
    if (h.degree() >= 1) CHECK(Poly::resultant(a * h, b * h) == Rational(0));
  }
}

TEST_CASE("discriminant of cubics matches the closed form") {
  // x^3 + 1 -> -27, x^3 - x -> 4
  CHECK(Poly::discriminant(make({1, 0, 0, 1})) == Rational(-27));
  CHECK(Poly::discriminant(make({0, -1, 0, 1})) == Rational(4));
  CHECK(Poly::discriminant(make({0, 0, 0, 1})) == Rational(0));  // x^3: triple root
  std::mt19937_64 rng(47);
  for (int i = 0; i < 60; ++i) {
    Rational p = apec::oracle::random_rational(rng, 9, 4);
    Rational q = apec::oracle::random_rational(rng, 9, 4);
    Rational r = apec::oracle::random_rational(rng, 9, 4);
    Poly f(std::vector<Rational>{r, q, p, Rational(1)});
    CHECK(Poly::discriminant(f) == apec::oracle::cubic_discriminant(p, q, r));
  }
}

TEST_CASE("printing") {
  CHECK(make({6, 0, 11, 0, 6, 0, 1}).str("t") == "t^6 + 6*t^4 + 11*t^2 + 6");
  CHECK(make({-1, 1}).str() == "x - 1");
  CHECK(Poly{}.str() == "0");
  CHECK(make({0, -2}).str() == "-2*x");
}
