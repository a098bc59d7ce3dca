#include "apec/error.hpp"

namespace apec {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::singular_curve: return "SingularCurve";
    case errc::point_not_on_curve: return "PointNotOnCurve";
    case errc::invalid_generator: return "InvalidGenerator";
    case errc::empty_input: return "EmptyInput";
    case errc::missing_fiber: return "MissingFiber";
    case errc::all_two_torsion: return "AllTwoTorsion";
    case errc::trivial_difference: return "TrivialDifference";
    case errc::first_term_two_torsion: return "FirstTermTwoTorsion";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::internal_mismatch: return "InternalMismatch";
    case errc::point_not_on_model: return "PointNotOnModel";
    case errc::invalid_constant: return "InvalidConstant";
    case errc::ap_too_short: return "APTooShort";
    case errc::parse_error: return "ParseError";
    case errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace apec
