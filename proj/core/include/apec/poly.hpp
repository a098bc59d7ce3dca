#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apec/rational.hpp"

namespace apec {

// Dense univariate polynomial over Q; coeff(k) is the coefficient of x^k.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(std::size_t k) const;
  const Rational& leading() const;  // pre: !is_zero()

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly monic() const;  // pre: !is_zero()
  Poly compose(const Poly& inner) const;
  Poly scaled(const Rational& s) const;
  Poly operator-() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  // Euclidean division: a = q*b + r with deg r < deg b. pre: !b.is_zero().
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  // Resultant computed by Gaussian elimination on the Sylvester matrix.
  static Rational resultant(const Poly& a, const Poly& b);

  // (-1)^{d(d-1)/2} * resultant(f, f') / lc(f). pre: degree >= 1.
  static Rational discriminant(const Poly& f);

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str(std::string_view var = "x") const;

private:
  void trim();
  std::vector<Rational> c_;
};

// u*a + v*b = g with g monic, or everything zero when a = b = 0.
struct ExtendedGcd {
  Poly g, u, v;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

}  // namespace apec
