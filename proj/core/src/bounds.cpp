#include "apec/bounds.hpp"

#include <utility>

namespace apec {

namespace {

void require_above_one(const Rational& c, const char* name) {
  if (!(c > Rational(1)))
    fail(errc::invalid_constant,
         std::string(name) + " must exceed 1, got " + c.str());
}

}  // namespace

RankLedger RankLedger::make(std::uint32_t rank_e, std::uint32_t rank_cap,
                            Rational count_c, Rational length_c,
                            std::optional<std::uint32_t> rho_override) {
  require_above_one(count_c, "c");
  require_above_one(length_c, "C");
  RankLedger l;
  l.rank_e = rank_e;
  l.rank_cap = rank_cap;
  l.jacobian_rank_bound = jacobian_rank_cap(rank_cap);
  l.count_c = std::move(count_c);
  l.length_c = std::move(length_c);
  l.rho_override = rho_override;
  return l;
}

Rational rank_length_bound(const Rational& C, std::uint32_t rank) {
  require_above_one(C, "C");
  return C.pow_u(static_cast<unsigned long>(rank) + 1);
}

Rational point_count_bound(const Rational& c, std::uint64_t rho) {
  require_above_one(c, "c");
  return c.pow_u(static_cast<unsigned long>(rho) + 1);
}

std::uint64_t jacobian_rank_cap(std::uint32_t rank_cap) {
  return 2 * static_cast<std::uint64_t>(rank_cap);
}

UniformityReport uniformity_check(const Integer& M, std::uint32_t rank_cap,
                                  const Rational& c,
                                  std::optional<std::uint32_t> rho_override) {
  require_above_one(c, "c");
  if (M < 4)
    fail(errc::ap_too_short, "uniformity check needs M >= 4, got " + M.get_str());

  UniformityReport rep;
  rep.rho = rho_override ? static_cast<std::uint64_t>(*rho_override)
                         : jacobian_rank_cap(rank_cap);
  rep.lhs = 2 * isqrt(Integer(M - 4)) + 1;
  rep.rhs = point_count_bound(c, rep.rho);
  rep.consistent = Rational(rep.lhs) <= rep.rhs;
  // invert: lhs(M) <= rhs  <=>  M <= m_max
  Integer n_max = ((rep.rhs - Rational(1)) / Rational(2)).floor();
  rep.m_max = (n_max + 1) * (n_max + 1) + 3;
  return rep;
}

BoundVerdict verdict(const Integer& ap_length, const RankLedger& ledger) {
  BoundVerdict v;
  v.ap_length = ap_length;
  v.length_bound_value = rank_length_bound(ledger.length_c, ledger.rank_e);
  v.length_consistent = Rational(ap_length) <= v.length_bound_value;
  v.uniformity = uniformity_check(ap_length, ledger.rank_cap, ledger.count_c,
                                  ledger.rho_override);
  v.jacobian_rank_bound = ledger.jacobian_rank_bound;
  return v;
}

}  // namespace apec
