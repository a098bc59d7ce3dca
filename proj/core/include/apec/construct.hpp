#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "apec/ap_search.hpp"
#include "apec/curve.hpp"

namespace apec {

// Polynomial of degree exactly 6: g(t) = sum c_k t^k, c_6 != 0.
class HexicPoly {
public:
  static HexicPoly from_coefficients(std::array<Rational, 7> c);

  const std::array<Rational, 7>& coefficients() const { return c_; }
  const Rational& coeff(std::size_t k) const { return c_.at(k); }
  Rational eval(const Rational& t) const;
  bool is_even() const;  // only even powers present
  Poly poly() const;

  bool operator==(const HexicPoly& o) const { return c_ == o.c_; }

private:
  explicit HexicPoly(std::array<Rational, 7> c) : c_(std::move(c)) {}
  std::array<Rational, 7> c_;
};

// g(t) = f(a t^2 + b): even, degree 6, leading coefficient a^3.
// trivial_difference if a = 0.
HexicPoly build_hexic(const CubicPoly& f, const Rational& a, const Rational& b);

// Bezout witness u*g + v*g' = 1; checkable with polynomial arithmetic alone.
struct SquarefreeCertificate {
  Poly u, v;
};

struct SquarefreeResult {
  bool squarefree = false;
  std::optional<SquarefreeCertificate> certificate;  // set iff squarefree
  std::optional<Poly> repeated_factor;  // the nonconstant gcd(g, g') otherwise
};

// gcd(g, g') test with certificate extraction.
SquarefreeResult is_squarefree(const HexicPoly& g);

// Re-multiplies u*g + v*g' and compares with 1; independent of the gcd
// routine that produced the certificate.
bool check_certificate(const HexicPoly& g, const SquarefreeCertificate& cert);

// The certified genus-2 model s^2 = g(t) over its source curve.
struct HyperellipticModel {
  HexicPoly g;
  WeierstrassCurve source;
  Rational step;   // a
  Rational first;  // b
  SquarefreeCertificate certificate;
  Rational resultant;  // resultant(g, g'): nonzero cross-check
};

// Index of the first progression term that is not a root of f; equals
// length when every term is a root.
std::size_t trim_offset(const CubicPoly& f, const Rational& first,
                        const Rational& step, std::size_t length);

// Drops leading 2-torsion terms. The step is unchanged and at most 3 terms
// are lost (a cubic has at most 3 roots), so the result has length
// >= length - 3. Requires length >= 4. all_two_torsion is raised only if
// upstream invariants were violated.
APRecord trim_ap(const WeierstrassCurve& curve, const APRecord& ap);

// Builds the hexic from (f, step, first) and certifies it squarefree.
// first_term_two_torsion if f(first) = 0, trivial_difference if step = 0;
// not_squarefree signals a broken invariant, it is unreachable for a
// smooth source curve with f(first) != 0.
HyperellipticModel construct_X(const WeierstrassCurve& curve, const Rational& first,
                               const Rational& step);
HyperellipticModel construct_X(const WeierstrassCurve& curve, const APRecord& trimmed);

struct LiftedPoint {
  Integer t;
  Rational s;

  bool operator==(const LiftedPoint& o) const { return t == o.t && s == o.s; }
};

// t-range -n..n with n = floor(sqrt(N-1)), for a progression of length
// N >= 1. lift_points returns exactly one point per element of this range.
std::vector<Integer> lift_ts(std::uint64_t ap_length);

// The 2n+1 rational points (t, s) of the model, s taken from the
// progression point above index t^2. internal_mismatch if the model and
// progression disagree.
std::vector<LiftedPoint> lift_points(const HyperellipticModel& model, const APRecord& ap);

// (x, y) = (a t^2 + b, s): the covering map to the source curve.
// point_not_on_model if s^2 != g(t).
ECPoint map_pi(const HyperellipticModel& model, const LiftedPoint& pt);

}  // namespace apec
