#include <doctest.h>

#include <random>
#include <sstream>

#include "apec/rational.hpp"
#include "oracles.hpp"

using apec::Integer;
using apec::Rational;

namespace {

bool canonical(const Rational& r) {
  Integer g;
  Integer n = r.num(), d = r.den();
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return d > 0 && g == 1;
}

}  // namespace

TEST_CASE("construction normalizes to lowest terms, positive denominator") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-10, -5) == Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p/q and p, rejects everything else") {
  CHECK(*Rational::parse("3/4") == Rational(3, 4));
  CHECK(*Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(*Rational::parse("7") == Rational(7));
  CHECK(*Rational::parse("-0") == Rational(0));
  CHECK(*Rational::parse("6/4") == Rational(3, 2));

  std::string err;
  CHECK(!Rational::parse("1/0", &err));
  CHECK(err == "denominator is zero");
  CHECK(!Rational::parse(""));
  CHECK(!Rational::parse("1/"));
  CHECK(!Rational::parse("/2"));
  CHECK(!Rational::parse("1.5"));
  CHECK(!Rational::parse("+1"));
  CHECK(!Rational::parse(" 1"));
  CHECK(!Rational::parse("1 "));
  CHECK(!Rational::parse("2/-3"));
  CHECK(!Rational::parse("x"));
}

TEST_CASE("str renders lowest terms and round trips") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-8, 2).str() == "-4");
  CHECK(Rational(0).str() == "0");
  std::ostringstream os;
  os << Rational(-5, 3);
  CHECK(os.str() == "-5/3");
  CHECK(*Rational::parse(Rational(-5, 3).str()) == Rational(-5, 3));
}

TEST_CASE("arithmetic keeps values canonical") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    Rational a = apec::oracle::random_rational(rng, 50, 20);
    Rational b = apec::oracle::random_rational(rng, 50, 20);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (!b.is_zero()) {
      Rational q = a / b;
      CHECK(canonical(q));
      CHECK(q * b == a);
    }
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("floor and ordering") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-4, 2).floor() == -2);
  CHECK(Rational(0).floor() == 0);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  // floor(B) is the unique k with k <= B < k+1
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    Rational b = apec::oracle::random_rational(rng, 1000, 37);
    Integer k = b.floor();
    CHECK(Rational(k) <= b);
    CHECK(b < Rational(Integer(k + 1)));
  }
}

TEST_CASE("exact square detection and sqrt") {
  CHECK(Rational(4, 9).is_square());
  CHECK(Rational(4, 9).sqrt() == Rational(2, 3));
  CHECK(Rational(0).is_square());
  CHECK(Rational(0).sqrt() == Rational(0));
  CHECK(Rational(49).sqrt() == Rational(7));
  CHECK(!Rational(2).is_square());
  CHECK(!Rational(-4).is_square());
  CHECK(!Rational(1, 2).is_square());
  CHECK(!Rational(8, 9).is_square());
  CHECK_THROWS_AS(Rational(2).sqrt(), std::domain_error);
  // both parts must be squares after normalization
  CHECK(Rational(8, 2).is_square());  // = 4
}

TEST_CASE("pow_u is exact") {
  CHECK(Rational(3, 2).pow_u(3) == Rational(27, 8));
  CHECK(Rational(-2).pow_u(5) == Rational(-32));
  CHECK(Rational(5, 7).pow_u(0) == Rational(1));
}

TEST_CASE("isqrt agrees with bisection") {
  for (long n = 0; n <= 3000; ++n) {
    Integer z(n);
    CHECK(apec::isqrt(z) == apec::oracle::isqrt_bisect(z));
  }
  Integer big("123456789123456789123456789");
  Integer r = apec::isqrt(big);
  CHECK(r == apec::oracle::isqrt_bisect(big));
  CHECK(r * r <= big);
  CHECK((r + 1) * (r + 1) > big);
  CHECK_THROWS_AS(apec::isqrt(Integer(-1)), std::domain_error);
}

TEST_CASE("hash is consistent with equality") {
  std::hash<Rational> h;
  CHECK(h(Rational(2, 4)) == h(Rational(1, 2)));
  CHECK(h(Rational(-1, 2)) != h(Rational(1, 2)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Rational a = apec::oracle::random_rational(rng, 40, 12);
    CHECK(h(a) == h(a + Rational(0)));
  }
}

TEST_CASE("bit_length tracks both parts") {
  CHECK(Rational(1).bit_length() == 1);
  CHECK(Rational(255).bit_length() == 8);
  CHECK(Rational(1, 255).bit_length() == 8);
  CHECK(Rational(1024, 3).bit_length() == 11);
}
