#pragma once

#include <stdexcept>
#include <string>

namespace apec {

// Failure codes surfaced by the library. Each corresponds to a documented
// error condition of some operation; see the per-function comments.
enum class errc {
  singular_curve,
  point_not_on_curve,
  invalid_generator,
  empty_input,
  missing_fiber,
  all_two_torsion,
  trivial_difference,
  first_term_two_torsion,
  not_squarefree,
  internal_mismatch,
  point_not_on_model,
  invalid_constant,
  ap_too_short,
  parse_error,
  usage_error,
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}
  Error(errc code, const std::string& what_arg, long index)
      : std::runtime_error(what_arg), code_(code), index_(index) {}

  errc code() const noexcept { return code_; }

  // Payload for missing_fiber: index of the offending progression term.
  // -1 when not applicable.
  long index() const noexcept { return index_; }

private:
  errc code_;
  long index_ = -1;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

[[noreturn]] inline void fail_at(errc code, long index, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg, index);
}

}  // namespace apec
