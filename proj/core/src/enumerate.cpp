#include "apec/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace apec {

GeneratorSet GeneratorSet::make(WeierstrassCurve curve, std::vector<ECPoint> generators,
                                std::vector<ECPoint> torsion) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!curve.contains(generators[i]))
      fail(errc::invalid_generator,
           "generators[" + std::to_string(i) + "] is not on the curve");
  }
  bool has_infinity = false;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (!curve.contains(torsion[i]))
      fail(errc::invalid_generator,
           "torsion[" + std::to_string(i) + "] is not on the curve");
    if (torsion[i].is_infinity()) has_infinity = true;
  }
  if (!has_infinity)
    fail(errc::invalid_generator, "torsion must include the point at infinity");
  return GeneratorSet{std::move(curve), std::move(generators), std::move(torsion)};
}

namespace {

bool oversize(const ECPoint& p, std::uint32_t cap) {
  if (p.is_infinity()) return false;
  return p.x().bit_length() > cap || p.y().bit_length() > cap;
}

}  // namespace

EnumResult enumerate_points(const GeneratorSet& gs, const EnumConfig& cfg) {
  if (cfg.size_cap < 1 || cfg.max_points < 1)
    fail(errc::usage_error, "size_cap and max_points must be positive");

  const long bound = static_cast<long>(cfg.coeff_bound);
  const std::size_t r = gs.generators.size();

  // per-generator multiple tables [c]G for c in [-bound, bound],
  // built by incremental addition
  std::vector<std::vector<ECPoint>> table(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<ECPoint>& t = table[i];
    t.resize(static_cast<std::size_t>(2 * bound + 1));
    t[static_cast<std::size_t>(bound)] = ECPoint::infinity();
    for (long c = 1; c <= bound; ++c) {
      const ECPoint& prev = t[static_cast<std::size_t>(bound + c - 1)];
      ECPoint next = gs.curve.add(prev, gs.generators[i]);
      t[static_cast<std::size_t>(bound - c)] = neg(next);
      t[static_cast<std::size_t>(bound + c)] = std::move(next);
    }
  }

  EnumResult out;
  auto less = [](const ECPoint& a, const ECPoint& b) { return xy_less(a, b); };
  std::set<ECPoint, decltype(less)> seen(less);

  // odometer over (c_1, ..., c_r), lexicographic; partial sums reused
  // along the recursion spine
  std::vector<ECPoint> partial(r + 1);
  partial[0] = ECPoint::infinity();
  auto emit = [&](const ECPoint& combo_sum) {
    for (const ECPoint& t : gs.torsion) {
      ++out.combinations;
      ECPoint p = gs.curve.add(combo_sum, t);
      if (p.is_infinity()) continue;
      if (oversize(p, cfg.size_cap)) {
        ++out.skipped_oversize;
        continue;
      }
      seen.insert(std::move(p));
    }
  };
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    if (depth == r) {
      emit(partial[r]);
      return;
    }
    for (long c = -bound; c <= bound; ++c) {
      partial[depth + 1] =
          gs.curve.add(partial[depth], table[depth][static_cast<std::size_t>(bound + c)]);
      self(self, depth + 1);
    }
  };
  walk(walk, 0);

  out.points.assign(seen.begin(), seen.end());
  if (out.points.size() > cfg.max_points) {
    out.points.resize(cfg.max_points);
    out.truncated = true;
  }
  return out;
}

}  // namespace apec
