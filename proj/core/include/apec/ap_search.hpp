#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "apec/curve.hpp"

namespace apec {

// (first, step, length) progression descriptor. step is 0 only in the
// degenerate length-1 case, where no difference is defined.
struct ApTriple {
  Rational first;
  Rational step;
  std::uint32_t length = 0;

  bool operator==(const ApTriple& o) const {
    return first == o.first && step == o.step && length == o.length;
  }
};

std::ostream& operator<<(std::ostream& os, const ApTriple& t);

// A maximum-length arithmetic progression contained in xs (duplicates are
// ignored). Ties break to the smallest positive step, then smallest first
// term. Throws empty_input on an empty set.
ApTriple longest_ap(std::span<const Rational> xs);

// Every progression of length >= min_len (min_len >= 3) contained in the
// set and not extendable within it on either side. Steps are normalized
// positive; sorted by (length desc, step asc, first asc).
std::vector<ApTriple> all_maximal_aps(std::span<const Rational> xs, std::uint32_t min_len);

// Progression of points on a fixed curve: points[i].x == first + i*step
// exactly, step != 0. Immutable.
class APRecord {
public:
  static APRecord make(WeierstrassCurve curve, Rational first, Rational step,
                       std::vector<ECPoint> points);

  const WeierstrassCurve& curve() const { return curve_; }
  const Rational& first() const { return first_; }
  const Rational& step() const { return step_; }
  std::uint32_t length() const { return static_cast<std::uint32_t>(points_.size()); }
  const std::vector<ECPoint>& points() const { return points_; }
  Rational x_at(std::size_t i) const;

private:
  APRecord(WeierstrassCurve curve, Rational first, Rational step,
           std::vector<ECPoint> points);

  WeierstrassCurve curve_;
  Rational first_, step_;
  std::vector<ECPoint> points_;
};

// Selects the canonical (nonnegative-y) point above each term.
// missing_fiber, carrying the term index, if some f(x_i) is not a square.
APRecord ap_points(const WeierstrassCurve& curve, const Rational& first,
                   const Rational& step, std::uint32_t length);

}  // namespace apec
