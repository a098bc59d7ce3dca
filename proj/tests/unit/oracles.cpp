#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace apec::oracle {

Rational cubic_discriminant(const Rational& p, const Rational& q, const Rational& r) {
  return Rational(18) * p * q * r - Rational(4) * p * p * p * r + p * p * q * q -
         Rational(4) * q * q * q - Rational(27) * r * r;
}

Integer isqrt_bisect(const Integer& n) {
  Integer lo(0), hi = n;
  if (hi > 1) hi = n / 2 + 1;
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

bool group_law_witness(const WeierstrassCurve& curve, const ECPoint& p,
                       const ECPoint& q, const ECPoint& s) {
  if (!curve.contains(p) || !curve.contains(q) || !curve.contains(s)) return false;
  if (p.is_infinity()) return s == q;
  if (q.is_infinity()) return s == p;
  if (p.x() == q.x() && p.y() == -q.y()) return s.is_infinity();
  if (s.is_infinity()) return false;

  Rational lambda;
  if (p == q) {
    // tangent slope from implicit differentiation of y^2 = f(x)
    lambda = curve.f().derivative_at(p.x()) / (Rational(2) * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  Poly line(std::vector<Rational>{p.y() - lambda * p.x(), lambda});
  Poly lhs = curve.f().poly() - line * line;
  auto linear = [](const Rational& root) {
    return Poly(std::vector<Rational>{-root, Rational(1)});
  };
  Poly rhs = linear(p.x()) * linear(q.x()) * linear(s.x());
  if (lhs != rhs) return false;
  return s.y() == -line.eval(s.x());
}

ApTriple brute_force_longest_ap(std::span<const Rational> xs) {
  std::vector<Rational> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() == 1) return ApTriple{v[0], Rational(0), 1};

  std::set<Rational> present(v.begin(), v.end());
  ApTriple best{v[0], v[1] - v[0], 2};
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Rational d = v[j] - v[i];
      std::uint32_t len = 2;
      Rational next = v[j] + d;
      while (present.count(next) != 0) {
        ++len;
        next += d;
      }
      ApTriple cand{v[i], d, len};
      bool take = cand.length > best.length ||
                  (cand.length == best.length &&
                   (cand.step < best.step ||
                    (cand.step == best.step && cand.first < best.first)));
      if (take) best = cand;
    }
  }
  return best;
}

Rational random_rational(std::mt19937_64& rng, long num_abs_max, long den_max) {
  std::uniform_int_distribution<long> num_dist(-num_abs_max, num_abs_max);
  std::uniform_int_distribution<long> den_dist(1, den_max);
  return Rational(num_dist(rng), den_dist(rng));
}

Rational random_nonzero_rational(std::mt19937_64& rng, long num_abs_max, long den_max) {
  for (;;) {
    Rational r = random_rational(rng, num_abs_max, den_max);
    if (!r.is_zero()) return r;
  }
}

}  // namespace apec::oracle
