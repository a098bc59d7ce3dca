#include "apec/poly.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace apec {

namespace {
const Rational kZero{};
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) {
  if (c.is_zero()) return Poly{};
  return Poly(std::vector<Rational>{c});
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(std::size_t k) const {
  if (k >= c_.size()) return kZero;
  return c_[k];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  const Rational& lc = leading();
  if (lc.is_one()) return *this;
  return scaled(Rational(1) / lc);
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * inner + Poly::constant(c_[i]);
  return acc;
}

Poly Poly::scaled(const Rational& s) const {
  if (s.is_zero()) return Poly{};
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] * s;
  return Poly(std::move(out));
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational& lc = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + b.c_.size() - 1] / lc;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      rem[k + j] -= q * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.is_zero() ? r0 : r0.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(1), u1;
  Poly v0, v1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = Poly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    Poly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {Poly{}, Poly{}, Poly{}};
  Rational inv = Rational(1) / r0.leading();
  return {r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

Rational Poly::resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return Rational(1);
  if (m == 0) return a.leading().pow_u(static_cast<unsigned long>(n));
  if (n == 0) return b.leading().pow_u(static_cast<unsigned long>(m));

  std::size_t dim = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(dim, std::vector<Rational>(dim));
  // n rows of a's coefficients (descending), then m rows of b's
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] =
          a.coeff(static_cast<std::size_t>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] =
          b.coeff(static_cast<std::size_t>(n - k));

  // plain fraction Gaussian elimination; dim <= 11 for our degrees
  Rational det(1);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && s[piv][col].is_zero()) ++piv;
    if (piv == dim) return Rational(0);
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    Rational inv = Rational(1) / s[col][col];
    for (std::size_t row = col + 1; row < dim; ++row) {
      if (s[row][col].is_zero()) continue;
      Rational factor = s[row][col] * inv;
      for (std::size_t k = col; k < dim; ++k)
        s[row][k] -= factor * s[col][k];
    }
  }
  return det;
}

Rational Poly::discriminant(const Poly& f) {
  int d = f.degree();
  if (d < 1) throw std::domain_error("discriminant requires degree >= 1");
  Rational res = resultant(f, f.derivative());
  bool negate = ((d * (d - 1)) / 2) % 2 != 0;
  Rational out = res / f.leading();
  return negate ? -out : out;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace apec
