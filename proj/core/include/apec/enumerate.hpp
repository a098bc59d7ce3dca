#pragma once

#include <cstdint>
#include <vector>

#include "apec/curve.hpp"

namespace apec {

// Claimed Mordell-Weil generators plus torsion points. Independence of the
// generators is the caller's responsibility and is not verified here;
// duplicates produced by dependent generators collapse in the enumeration.
struct GeneratorSet {
  WeierstrassCurve curve;
  std::vector<ECPoint> generators;
  std::vector<ECPoint> torsion;  // must contain the point at infinity

  // Validates every point against the curve (invalid_generator on failure)
  // and requires infinity among the torsion points.
  static GeneratorSet make(WeierstrassCurve curve, std::vector<ECPoint> generators,
                           std::vector<ECPoint> torsion);
};

struct EnumConfig {
  std::uint32_t coeff_bound = 3;     // max |c_i| in sum(c_i * G_i)
  std::uint32_t size_cap = 4096;     // max bit length of any coordinate part
  std::uint32_t max_points = 100000; // hard output cap

  bool operator==(const EnumConfig&) const = default;
};

struct EnumResult {
  std::vector<ECPoint> points;  // affine, deduplicated, (x, y)-sorted
  std::uint64_t combinations = 0;
  std::uint64_t skipped_oversize = 0;
  bool truncated = false;
};

// All points sum(c_i * G_i) + T with |c_i| <= coeff_bound and T torsion,
// deduplicated and sorted; infinity is never emitted. Points whose
// coordinates exceed size_cap bits are skipped and counted. Deterministic.
EnumResult enumerate_points(const GeneratorSet& gs, const EnumConfig& cfg);

}  // namespace apec
