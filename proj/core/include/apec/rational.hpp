#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace apec {

using Integer = mpz_class;

// floor(sqrt(n)) for n >= 0. Exact integer arithmetic, no floating point.
Integer isqrt(const Integer& n);

// floor(num/den), den != 0.
Integer floor_div(const Integer& num, const Integer& den);

// Exact rational number, always in lowest terms with positive denominator.
// The ambient field element for every coordinate in this library.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}        // NOLINT: implicit by design
  Rational(long n) : q_(n) {}       // NOLINT
  Rational(const Integer& n) : q_(n) {}  // NOLINT
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);

  // Strict "p/q" or "p" syntax: optional leading '-', decimal digits,
  // no whitespace. Rejects zero denominators.
  static std::optional<Rational> parse(std::string_view s, std::string* err = nullptr);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const;
  int sign() const { return sgn(q_); }

  Rational abs() const;
  Integer floor() const;

  // max(bits(numerator), bits(denominator)); used for coordinate size caps.
  std::size_t bit_length() const;

  bool is_square() const;
  Rational sqrt() const;  // pre: is_square(); returns the nonnegative root
  Rational pow_u(unsigned long e) const;

  std::string str() const;  // "p/q", or just "p" when the denominator is 1

  std::size_t hash_value() const noexcept;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_), canonical{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ - b.q_), canonical{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_), canonical{});
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_), canonical{}); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct canonical {};
  Rational(mpq_class q, canonical) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace apec

template <>
struct std::hash<apec::Rational> {
  std::size_t operator()(const apec::Rational& r) const noexcept { return r.hash_value(); }
};
