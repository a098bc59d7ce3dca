#pragma once

#include <cstdint>
#include <optional>

#include "apec/error.hpp"
#include "apec/rational.hpp"

namespace apec {

// User-supplied constants and rank hypotheses. Nothing here is computed
// from a curve: a "violated" verdict falsifies the supplied constants at
// the given data, never the theorems behind them.
struct RankLedger {
  std::uint32_t rank_e = 0;    // operative rank r of E
  std::uint32_t rank_cap = 0;  // hypothesized uniform rank bound R
  std::uint64_t jacobian_rank_bound = 0;  // always 2 * rank_cap
  Rational count_c;   // > 1
  Rational length_c;  // > 1
  std::optional<std::uint32_t> rho_override;  // known Jacobian rank, if any

  static RankLedger make(std::uint32_t rank_e, std::uint32_t rank_cap,
                         Rational count_c, Rational length_c,
                         std::optional<std::uint32_t> rho_override = {});
};

// C^(r+1), exact. invalid_constant unless C > 1.
Rational rank_length_bound(const Rational& C, std::uint32_t rank);

// c^(1+rho), exact. invalid_constant unless c > 1.
Rational point_count_bound(const Rational& c, std::uint64_t rho);

// 2R: the rank bound for the split Jacobian.
std::uint64_t jacobian_rank_cap(std::uint32_t rank_cap);

struct UniformityReport {
  Integer lhs;   // 2*floor(sqrt(M-4)) + 1
  Rational rhs;  // c^(1+rho)
  bool consistent = false;
  Integer m_max;  // largest M consistent with (R, c)
  std::uint64_t rho = 0;  // exponent actually used (2R unless overridden)
};

// The capstone inequality 2*floor(sqrt(M-4)) + 1 <= c^(1+2R), with its
// exact inversion: m_max = (n_max+1)^2 + 3 where n_max = floor((rhs-1)/2).
// ap_too_short if M < 4.
UniformityReport uniformity_check(const Integer& M, std::uint32_t rank_cap,
                                  const Rational& c,
                                  std::optional<std::uint32_t> rho_override = {});

struct BoundVerdict {
  Integer ap_length;
  Rational length_bound_value;
  bool length_consistent = false;
  UniformityReport uniformity;
  std::uint64_t jacobian_rank_bound = 0;
};

BoundVerdict verdict(const Integer& ap_length, const RankLedger& ledger);

}  // namespace apec
