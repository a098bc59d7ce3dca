#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apec/io.hpp"

namespace apec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoAp = 2;

struct PipelineOptions {
  std::uint32_t min_len = 4;  // smallest progression the construction accepts
  // command-line overrides of the spec document
  std::optional<std::uint32_t> coeff_bound;
  std::optional<std::uint32_t> size_cap;
  std::optional<std::uint32_t> max_points;
  std::optional<Rational> count_c;
  std::optional<Rational> length_c;
  std::optional<std::uint32_t> rank_cap;
};

struct RunResult {
  int exit_code = kExitOk;
  json report;
  std::string summary;  // human-readable, destined for stderr
};

// Enumerate points and list every maximal x-coordinate progression of
// length >= min_len.
RunResult run_ap_find(const CurveSpec& spec, const PipelineOptions& opt);

// Build, certify and lift the genus-2 model for a designated progression.
RunResult run_construct(const CurveSpec& spec, const Rational& first,
                        const Rational& step, std::uint32_t length);

// Bound verdict alone; the rank-length check runs only when both rank and C are given.
json run_bound(const Integer& M, std::uint32_t rank_cap, const Rational& c,
               std::optional<std::uint32_t> rank_e, std::optional<Rational> length_c,
               std::optional<std::uint32_t> rho_override = {});

// ap-find, construct on the best progression, bound verdicts: the whole
// chain in one deterministic report. Constants must be present (spec file
// or overrides). exit 2 when no progression of length >= min_len exists.
RunResult run_pipeline(const CurveSpec& spec, const PipelineOptions& opt);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyOutcome {
  bool ok = false;
  std::vector<CheckResult> checks;
};

// Re-validates a pipeline or construct report from its own fields alone:
// discriminant, progression arithmetic, hexic identity, Bezout certificate,
// resultant, lift equations, covering images, bound arithmetic. Needs no
// input spec; reports are self-contained.
VerifyOutcome verify_report(const json& report);

}  // namespace apec
