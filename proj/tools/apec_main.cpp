// Command line front end: ap-find, construct, bound, pipeline,
// verify-report. Reports go to stdout as JSON documents; human summaries
// and diagnostics go to stderr. Exit codes: 0 ok, 1 error, 2 no
// progression found.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "apec/pipeline.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    apec::fail(apec::errc::usage_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

apec::CurveSpec load_spec(const std::string& path) {
  return apec::parse_curve_spec(read_input(path));
}

apec::Rational rational_arg(const std::string& text, const char* flag) {
  std::string err;
  auto r = apec::Rational::parse(text, &err);
  if (!r)
    apec::fail(apec::errc::usage_error,
               std::string(flag) + ": '" + text + "' " + err);
  return *r;
}

apec::Integer integer_arg(const std::string& text, const char* flag) {
  apec::Rational r = rational_arg(text, flag);
  if (!r.is_integer())
    apec::fail(apec::errc::usage_error, std::string(flag) + ": expected an integer");
  return r.num();
}

int emit(const apec::RunResult& result) {
  std::cout << apec::dump_document(result.report);
  std::cerr << result.summary;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic progressions on rational elliptic curves: point "
               "enumeration, genus-2 construction with squarefree "
               "certificates, and rank/uniformity bound verdicts"};
  app.require_subcommand(1);

  std::string spec_path, report_path;
  apec::PipelineOptions opt;
  std::uint32_t min_len = 4;
  std::optional<std::uint32_t> coeff_bound, size_cap, max_points, rank_cap, rho;
  std::string c_str, big_c_str, b_str, a_str, m_str;
  std::uint32_t length = 0;
  std::optional<std::uint32_t> rank_e;

  auto add_enum_flags = [&](CLI::App* cmd) {
    cmd->add_option("--coeff-bound", coeff_bound, "max |c_i| in generator combinations");
    cmd->add_option("--size-cap", size_cap, "max coordinate bit length");
    cmd->add_option("--max-points", max_points, "output cap for enumeration");
  };

  CLI::App* ap_find = app.add_subcommand(
      "ap-find", "enumerate points and list maximal x-coordinate progressions");
  ap_find->add_option("spec", spec_path, "curve spec document (or - for stdin)")->required();
  ap_find->add_option("--min-len", min_len, "smallest progression length to report");
  add_enum_flags(ap_find);

  CLI::App* construct = app.add_subcommand(
      "construct", "build and certify the genus-2 model for a designated progression");
  construct->add_option("spec", spec_path, "curve spec document (or - for stdin)")->required();
  construct->add_option("--b", b_str, "first term of the progression")->required();
  construct->add_option("--a", a_str, "common difference")->required();
  construct->add_option("--M", length, "progression length")->required();

  CLI::App* bound = app.add_subcommand(
      "bound", "evaluate the rank and uniformity inequalities for given constants");
  bound->add_option("--M", m_str, "progression length")->required();
  std::uint32_t bound_rank_cap = 0;
  bound->add_option("--R", bound_rank_cap, "hypothesized uniform rank bound")->required();
  bound->add_option("--c", c_str, "height-uniform Mordell constant (> 1)")->required();
  bound->add_option("--r", rank_e, "rank of E, enables the C^(r+1) check");
  bound->add_option("--C", big_c_str, "progression-length constant (> 1)");
  bound->add_option("--rho", rho, "known Jacobian rank override (default 2R)");

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "ap-find, construct on the best progression, bound verdicts");
  pipeline->add_option("spec", spec_path, "curve spec document (or - for stdin)")->required();
  pipeline->add_option("--min-len", min_len, "smallest progression length to accept");
  add_enum_flags(pipeline);
  pipeline->add_option("--c", c_str, "override the spec's constant c");
  pipeline->add_option("--C", big_c_str, "override the spec's constant C");
  pipeline->add_option("--R", rank_cap, "override the spec's rank bound R");

  CLI::App* verify = app.add_subcommand(
      "verify-report", "re-check a report from its own fields alone");
  verify->add_option("report", report_path, "report document (or - for stdin)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    opt.min_len = min_len;
    opt.coeff_bound = coeff_bound;
    opt.size_cap = size_cap;
    opt.max_points = max_points;
    if (!c_str.empty()) opt.count_c = rational_arg(c_str, "--c");
    if (!big_c_str.empty()) opt.length_c = rational_arg(big_c_str, "--C");
    opt.rank_cap = rank_cap;

    if (ap_find->parsed()) return emit(apec::run_ap_find(load_spec(spec_path), opt));

    if (construct->parsed()) {
      apec::Rational first = rational_arg(b_str, "--b");
      apec::Rational step = rational_arg(a_str, "--a");
      return emit(apec::run_construct(load_spec(spec_path), first, step, length));
    }

    if (bound->parsed()) {
      apec::Integer m = integer_arg(m_str, "--M");
      std::optional<apec::Rational> length_c;
      if (!big_c_str.empty()) length_c = rational_arg(big_c_str, "--C");
      if (rank_e.has_value() != length_c.has_value())
        apec::fail(apec::errc::usage_error, "--r and --C must be given together");
      apec::json rep = apec::run_bound(m, bound_rank_cap,
                                       rational_arg(c_str, "--c"), rank_e, length_c, rho);
      std::cout << apec::dump_document(rep);
      return apec::kExitOk;
    }

    if (pipeline->parsed()) return emit(apec::run_pipeline(load_spec(spec_path), opt));

    if (verify->parsed()) {
      apec::json rep;
      try {
        rep = apec::json::parse(read_input(report_path));
      } catch (const apec::json::parse_error& e) {
        apec::fail(apec::errc::parse_error, std::string("invalid JSON: ") + e.what());
      }
      apec::VerifyOutcome out = apec::verify_report(rep);
      for (const apec::CheckResult& c : out.checks) {
        std::cerr << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cerr << " (" << c.detail << ")";
        std::cerr << "\n";
      }
      std::cerr << (out.ok ? "report accepted\n" : "report rejected\n");
      return out.ok ? apec::kExitOk : apec::kExitError;
    }
  } catch (const apec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return apec::kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return apec::kExitError;
  }
  return apec::kExitError;
}
