#include "apec/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace apec {

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("floor_div by zero");
  Integer q;
  if (sgn(den) > 0) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    Integer n = -num, d = -den;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  }
  return q;
}

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (mpz_sgn(mpq_denref(q_.get_mpq_t())) == 0)
    throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_), Rational::canonical{});
}

std::optional<Rational> Rational::parse(std::string_view s, std::string* err) {
  auto bad = [&](const char* why) -> std::optional<Rational> {
    if (err) *err = why;
    return std::nullopt;
  };
  if (s.empty()) return bad("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) return bad("expected decimal digits");
  std::string num_str(s.substr(0, i));
  std::string den_str = "1";
  if (i < s.size()) {
    if (s[i] != '/') return bad("unexpected character in rational literal");
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size())
      return bad("malformed denominator");
    den_str = std::string(s.substr(den_begin));
  }
  Integer num(num_str), den(den_str);
  if (sgn(den) == 0) return bad("denominator is zero");
  return Rational(num, den);
}

bool Rational::is_integer() const {
  return mpz_cmp_ui(mpq_denref(q_.get_mpq_t()), 1) == 0;
}

Rational Rational::abs() const {
  return Rational(mpq_class(::abs(q_)), canonical{});
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), mpq_numref(q_.get_mpq_t()), mpq_denref(q_.get_mpq_t()));
  return q;
}

std::size_t Rational::bit_length() const {
  std::size_t nb = mpz_sizeinbase(mpq_numref(q_.get_mpq_t()), 2);
  std::size_t db = mpz_sizeinbase(mpq_denref(q_.get_mpq_t()), 2);
  return nb > db ? nb : db;
}

bool Rational::is_square() const {
  if (sgn(q_) < 0) return false;
  return mpz_perfect_square_p(mpq_numref(q_.get_mpq_t())) != 0 &&
         mpz_perfect_square_p(mpq_denref(q_.get_mpq_t())) != 0;
}

Rational Rational::sqrt() const {
  if (!is_square()) throw std::domain_error("sqrt of a non-square rational");
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), mpq_numref(q_.get_mpq_t()));
  mpz_sqrt(d.get_mpz_t(), mpq_denref(q_.get_mpq_t()));
  // roots of coprime squares stay coprime
  mpq_class out;
  mpq_set_num(out.get_mpq_t(), n.get_mpz_t());
  mpq_set_den(out.get_mpq_t(), d.get_mpz_t());
  return Rational(std::move(out), canonical{});
}

Rational Rational::pow_u(unsigned long e) const {
  mpq_class out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(q_.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(q_.get_mpq_t()), e);
  return Rational(std::move(out), canonical{});
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash_value() const noexcept {
  auto mix = [](std::size_t h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  auto hash_mpz = [&](mpz_srcptr z, std::size_t h) {
    int sz = z->_mp_size;
    h = mix(h, static_cast<std::size_t>(sz));
    int n = sz < 0 ? -sz : sz;
    const mp_limb_t* limbs = z->_mp_d;
    for (int i = 0; i < n; ++i) h = mix(h, static_cast<std::size_t>(limbs[i]));
    return h;
  };
  std::size_t h = 0xa5a5a5a5a5a5a5a5ULL;
  h = hash_mpz(mpq_numref(q_.get_mpq_t()), h);
  h = hash_mpz(mpq_denref(q_.get_mpq_t()), h);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace apec
