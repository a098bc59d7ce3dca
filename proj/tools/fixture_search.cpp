// Offline fixture generator. Exhaustively scans y^2 = x^3 + q*x + r over an
// integer coefficient box, collects the integral x with f(x) a perfect
// square, and keeps curves whose integral points contain an x-coordinate
// progression of the requested length. Deliberately self-contained 64-bit
// arithmetic: fixtures emitted here serve as an oracle for the exact
// pipeline, so this tool shares none of its code paths.
//
// Typical use:
//   apec-fixture-search --list
//   apec-fixture-search --emit-q -1 --emit-r 25 --out fixture.spec.json

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using std::int64_t;

int64_t isqrt64(int64_t n) {
  if (n < 0) return -1;
  int64_t lo = 0, hi = 3037000499LL;  // floor(sqrt(2^63 - 1))
  if (hi > n) hi = n;
  while (lo < hi) {
    int64_t mid = lo + (hi - lo + 1) / 2;
    if (mid <= n / (mid == 0 ? 1 : mid) && mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

bool perfect_square(int64_t n, int64_t* root) {
  if (n < 0) return false;
  int64_t s = isqrt64(n);
  if (s * s != n) return false;
  *root = s;
  return true;
}

struct Ap {
  int64_t first = 0, step = 0;
  int64_t length = 0;
};

// longest progression in a sorted set of distinct integers, by pair-walk;
// ties to smallest step then smallest first term
Ap longest_ap(const std::vector<int64_t>& xs) {
  const std::set<int64_t> set(xs.begin(), xs.end());
  Ap best;
  if (xs.size() == 1) return Ap{xs[0], 0, 1};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      int64_t d = xs[j] - xs[i];
      if (set.count(xs[i] - d)) continue;  // not a progression start
      int64_t len = 2;
      int64_t next = xs[j] + d;
      while (set.count(next)) {
        ++len;
        next += d;
      }
      bool take = len > best.length ||
                  (len == best.length &&
                   (d < best.step || (d == best.step && xs[i] < best.first)));
      if (take) best = Ap{xs[i], d, len};
    }
  }
  return best;
}

struct Hit {
  int64_t q = 0, r = 0;
  Ap ap;
};

std::vector<int64_t> square_xs(int64_t q, int64_t r, int64_t xmax) {
  std::vector<int64_t> xs;
  for (int64_t x = -xmax; x <= xmax; ++x) {
    int64_t v = x * x * x + q * x + r;
    int64_t root = 0;
    if (perfect_square(v, &root)) xs.push_back(x);
  }
  return xs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive fixture search over y^2 = x^3 + q*x + r"};
  int64_t qmax = 32, rmax = 32, xmax = 100, min_len = 4;
  bool list = false;
  int64_t emit_q = 0, emit_r = 0;
  bool have_emit_q = false, have_emit_r = false;
  std::string out_path;
  app.add_option("--qmax", qmax, "search |q| <= qmax (default 32)");
  app.add_option("--rmax", rmax, "search |r| <= rmax (default 32)");
  app.add_option("--xmax", xmax, "scan integer x in [-xmax, xmax] (default 100)");
  app.add_option("--min-len", min_len, "keep curves with a progression this long");
  app.add_flag("--list", list, "print every hit, best first");
  app.add_option("--emit-q", emit_q, "q of the curve to emit as a spec document")
      ->each([&](const std::string&) { have_emit_q = true; });
  app.add_option("--emit-r", emit_r, "r of the curve to emit")
      ->each([&](const std::string&) { have_emit_r = true; });
  app.add_option("--out", out_path, "output path for --emit (default stdout)");
  CLI11_PARSE(app, argc, argv);

  if (have_emit_q != have_emit_r) {
    std::cerr << "--emit-q and --emit-r must be given together\n";
    return 1;
  }

  if (have_emit_q) {
    if (4 * emit_q * emit_q * emit_q + 27 * emit_r * emit_r == 0) {
      std::cerr << "singular curve\n";
      return 1;
    }
    std::vector<int64_t> xs = square_xs(emit_q, emit_r, xmax);
    if (xs.empty()) {
      std::cerr << "no integral points in the window\n";
      return 1;
    }
    Ap ap = longest_ap(xs);
    if (ap.length < min_len) {
      std::cerr << "longest progression has length " << ap.length << " < "
                << min_len << "\n";
      return 1;
    }
    nlohmann::json gens = nlohmann::json::array();
    for (int64_t i = 0; i < ap.length; ++i) {
      int64_t x = ap.first + i * ap.step;
      int64_t v = x * x * x + emit_q * x + emit_r;
      int64_t y = 0;
      perfect_square(v, &y);
      gens.push_back({std::to_string(x), std::to_string(y)});
    }
    nlohmann::json doc = {
        {"f", {{"p", "0"}, {"q", std::to_string(emit_q)}, {"r", std::to_string(emit_r)}}},
        {"generators", gens},
        {"torsion", nlohmann::json::array({"infinity"})},
        {"enum", {{"coeff_bound", 1}, {"size_cap", 512}, {"max_points", 4096}}},
        {"constants", {{"c", "2"}, {"C", "2"}, {"R", 1}}},
        {"provenance",
         {{"tool", "apec-fixture-search"},
          {"method", "exhaustive scan of integral x with x^3 + q*x + r a perfect square"},
          {"box", {{"qmax", qmax}, {"rmax", rmax}, {"xmax", xmax}}},
          {"ap", {{"first", std::to_string(ap.first)},
                  {"step", std::to_string(ap.step)},
                  {"length", ap.length}}}}}};
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << text;
    }
    return 0;
  }

  std::vector<Hit> hits;
  for (int64_t q = -qmax; q <= qmax; ++q) {
    for (int64_t r = -rmax; r <= rmax; ++r) {
      if (4 * q * q * q + 27 * r * r == 0) continue;  // singular
      std::vector<int64_t> xs = square_xs(q, r, xmax);
      if (static_cast<int64_t>(xs.size()) < min_len) continue;
      Ap ap = longest_ap(xs);
      if (ap.length >= min_len) hits.push_back(Hit{q, r, ap});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.ap.length != b.ap.length) return a.ap.length > b.ap.length;
    int64_t wa = std::abs(a.q) + std::abs(a.r), wb = std::abs(b.q) + std::abs(b.r);
    if (wa != wb) return wa < wb;
    if (a.q != b.q) return a.q < b.q;
    return a.r < b.r;
  });
  std::cout << hits.size() << " curves with a progression of length >= "
            << min_len << "\n";
  std::size_t shown = 0;
  for (const Hit& h : hits) {
    std::cout << "q=" << h.q << " r=" << h.r << "  first=" << h.ap.first
              << " step=" << h.ap.step << " length=" << h.ap.length << "\n";
    if (!list && ++shown >= 10) break;
  }
  return 0;
}
