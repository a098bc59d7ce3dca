#include "apec/ap_search.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>

namespace apec {

std::ostream& operator<<(std::ostream& os, const ApTriple& t) {
  return os << "{first=" << t.first << " step=" << t.step << " len=" << t.length << "}";
}

namespace {

std::vector<Rational> sorted_unique(std::span<const Rational> xs) {
  std::vector<Rational> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// (len desc, step asc, first asc)
bool better(const ApTriple& a, const ApTriple& b) {
  if (a.length != b.length) return a.length > b.length;
  if (a.step != b.step) return a.step < b.step;
  return a.first < b.first;
}

}  // namespace

ApTriple longest_ap(std::span<const Rational> xs) {
  if (xs.empty()) fail(errc::empty_input, "longest_ap over an empty set");
  std::vector<Rational> v = sorted_unique(xs);
  const std::size_t n = v.size();
  if (n == 1) return ApTriple{v[0], Rational(0), 1};

  std::unordered_map<Rational, std::uint32_t> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(v[i], static_cast<std::uint32_t>(i));

  // L(j, i) = length of the longest progression ending with v[j], v[i];
  // only entries > 2 are stored (absent means 2).
  std::unordered_map<std::uint64_t, std::uint32_t> len;
  auto key = [](std::uint32_t j, std::uint32_t i) {
    return (static_cast<std::uint64_t>(j) << 32) | i;
  };

  ApTriple best{v[0], v[1] - v[0], 2};  // seeded by the first pair
  for (std::uint32_t i = 1; i < n; ++i) {
    for (std::uint32_t j = 0; j < i; ++j) {
      Rational d = v[i] - v[j];
      std::uint32_t l = 2;
      auto prev = index.find(v[j] - d);
      if (prev != index.end()) {
        auto it = len.find(key(prev->second, j));
        l = (it == len.end() ? 2 : it->second) + 1;
      }
      if (l > 2) len.emplace(key(j, i), l);
      ApTriple cand{v[i] - Rational(static_cast<long>(l - 1)) * d, d, l};
      if (better(cand, best)) best = cand;
    }
  }
  return best;
}

std::vector<ApTriple> all_maximal_aps(std::span<const Rational> xs, std::uint32_t min_len) {
  if (min_len < 3)
    fail(errc::usage_error, "all_maximal_aps requires min_len >= 3");
  if (xs.empty()) fail(errc::empty_input, "all_maximal_aps over an empty set");
  std::vector<Rational> v = sorted_unique(xs);
  const std::size_t n = v.size();

  std::unordered_map<Rational, std::uint32_t> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(v[i], static_cast<std::uint32_t>(i));
  auto present = [&](const Rational& x) { return index.find(x) != index.end(); };

  std::vector<ApTriple> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational d = v[j] - v[i];  // > 0 since sorted
      if (present(v[i] - d)) continue;  // extendable backwards: not a start
      std::uint32_t l = 2;
      Rational next = v[j] + d;
      while (present(next)) {
        ++l;
        next += d;
      }
      if (l >= min_len) out.push_back(ApTriple{v[i], d, l});
    }
  }
  std::sort(out.begin(), out.end(), [](const ApTriple& a, const ApTriple& b) {
    if (a.length != b.length) return a.length > b.length;
    if (a.step != b.step) return a.step < b.step;
    return a.first < b.first;
  });
  return out;
}

APRecord::APRecord(WeierstrassCurve curve, Rational first, Rational step,
                   std::vector<ECPoint> points)
    : curve_(std::move(curve)),
      first_(std::move(first)),
      step_(std::move(step)),
      points_(std::move(points)) {}

APRecord APRecord::make(WeierstrassCurve curve, Rational first, Rational step,
                        std::vector<ECPoint> points) {
  if (step.is_zero())
    fail(errc::trivial_difference, "progression step must be nonzero");
  if (points.empty())
    fail(errc::empty_input, "progression needs at least one point");
  Rational x = first;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_infinity() || points[i].x() != x)
      fail_at(errc::internal_mismatch, static_cast<long>(i),
              "points[" + std::to_string(i) + "] does not sit above " + x.str());
    if (!curve.contains(points[i]))
      fail_at(errc::point_not_on_curve, static_cast<long>(i),
              "points[" + std::to_string(i) + "] fails the on-curve check");
    x += step;
  }
  return APRecord(std::move(curve), std::move(first), std::move(step), std::move(points));
}

Rational APRecord::x_at(std::size_t i) const {
  return first_ + Rational(static_cast<long>(i)) * step_;
}

APRecord ap_points(const WeierstrassCurve& curve, const Rational& first,
                   const Rational& step, std::uint32_t length) {
  if (step.is_zero())
    fail(errc::trivial_difference, "progression step must be nonzero");
  if (length < 1) fail(errc::usage_error, "progression length must be >= 1");
  std::vector<ECPoint> pts;
  pts.reserve(length);
  Rational x = first;
  for (std::uint32_t i = 0; i < length; ++i) {
    std::vector<ECPoint> fiber = curve.lift_x(x);
    if (fiber.empty())
      fail_at(errc::missing_fiber, static_cast<long>(i),
              "f(" + x.str() + ") is not a rational square (term " + std::to_string(i) + ")");
    pts.push_back(fiber.front());  // canonical nonnegative-y choice
    x += step;
  }
  return APRecord::make(curve, first, step, std::move(pts));
}

}  // namespace apec
