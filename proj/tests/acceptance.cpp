// Acceptance suite: one PASS/FAIL line per criterion. Seeds are fixed here
// and were chosen before any run of this file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "systole/cycles.hpp"
#include "systole/exact.hpp"
#include "systole/harness.hpp"
#include "systole/series.hpp"

using namespace systole;

namespace {

constexpr std::uint64_t kSeedBase = 0x5157013e0000ull;
constexpr double kSystoleTarget = 2.4843;

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

RunConfig make_config(std::uint32_t n, std::uint64_t samples, std::uint64_t seed, const std::string& stats) {
  RunConfig c;
  c.n = n;
  c.samples = samples;
  c.seed = seed;
  c.statistics = parse_statistics(stats);
  c.workers = workers();
  return c;
}

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

Outcome limit_bracket() {
  const auto t0 = std::chrono::steady_clock::now();
  const LimitBracket b = systole_limit_bracket(7);
  const double elapsed = seconds_since(t0);
  const double lo = std::floor(b.lower * 1e5) / 1e5;
  const double hi = std::ceil(b.upper * 1e5) / 1e5;
  const bool pass = lo <= 2.48432 && hi >= 2.48434 && elapsed < 1.0;
  return {pass, "bracket [" + fmt(b.lower, 7) + ", " + fmt(b.upper, 7) + "] -> [" + fmt(lo, 5) + ", " +
                    fmt(hi, 5) + "] in " + fmt(elapsed, 4) + " s"};
}

Outcome riemannian() {
  const auto t0 = std::chrono::steady_clock::now();
  const double coefficient = riemannian_bound_coefficient();
  const auto [lo, hi] = riemannian_bounds(1.0, 0.5);
  const double elapsed = seconds_since(t0);
  const bool pass = std::abs(coefficient - 2.87038) <= 1e-5 && std::abs(hi - 1.43519) <= 1e-5 && lo == 1.0 &&
                    elapsed < 0.1;
  return {pass, "coefficient " + fmt(coefficient) + ", bounds [" + fmt(lo) + ", " + fmt(hi) + "] in " +
                    fmt(elapsed, 4) + " s"};
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream detail;
  for (std::uint32_t n : {1u, 2u}) {
    const std::string stats = n == 1 ? "genus,xk:2,z:LR,separating:3" : "genus,xk:4,z:LR/LLR,separating:6";
    const ExhaustiveReport r = run_exhaustive(n, parse_statistics(stats));
    bool ok = r.pairings == omega_count(n) && r.euler_consistent;
    for (const auto& x : r.xk) ok = ok && x.average == x.exact;
    for (const auto& z : r.z) ok = ok && z.average == z.exact;
    for (const auto& s : r.separating) ok = ok && to_double(s.frequency) <= gnk_probability_upper(n, s.k);
    Rational mass = 0;
    for (const auto& [g, p] : r.genus_distribution) mass += p;
    ok = ok && mass == 1;
    pass = pass && ok;
    detail << "N=" << n << " " << r.pairings << " pairings " << (ok ? "exact" : "MISMATCH") << "; ";
  }
  const double elapsed = seconds_since(t0);
  pass = pass && elapsed < 120;
  detail << fmt(elapsed, 2) << " s";
  return {pass, detail.str()};
}

RunReport cycle_run() {
  static const RunReport report = run(make_config(200, 20000, kSeedBase + 4, "xk:3,z:LR/LLR"));
  return report;
}

Outcome poisson_cycles() {
  const RunReport r = cycle_run();
  const double tv2 = r.xk[1].tv_poisson, tv3 = r.xk[2].tv_poisson;
  return {tv2 < 0.03 && tv3 < 0.03, "TV(X_2, Po(1)) = " + fmt(tv2, 4) + ", TV(X_3, Po(4/3)) = " + fmt(tv3, 4)};
}

Outcome poisson_words() {
  const RunReport r = cycle_run();
  const double tv = r.z[0].tv_poisson, joint = r.z_joint_tv.value_or(1.0);
  return {tv < 0.03 && joint < 0.05, "TV(Z_[LR], Po(1/2)) = " + fmt(tv, 4) + ", joint TV = " + fmt(joint, 4)};
}

Outcome mell_law() {
  const RunReport r = run(make_config(500, 10000, kSeedBase + 6, "mell"));
  const auto& m = *r.mell;
  return {m.tv_limit < 0.03, "TV = " + fmt(m.tv_limit, 4) + " over " + std::to_string(m.conditional_count) +
                                 " positive-genus samples, proxy rejections " + std::to_string(m.proxy_count)};
}

Outcome separating_decay() {
  std::vector<SeparatingSummary> s;
  std::ostringstream detail;
  for (std::uint32_t n : {32u, 128u, 512u}) {
    const auto bound = static_cast<std::uint32_t>(std::floor(0.9 * std::log2(n)));
    const RunReport r = run(make_config(n, 5000, kSeedBase + 7 + n, "separating:" + std::to_string(bound)));
    s.push_back(*r.separating);
    detail << "N=" << n << " b=" << bound << " f=" << fmt(r.separating->frequency, 4) << "+-"
           << fmt(r.separating->standard_error, 4) << "; ";
  }
  bool pass = true;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double pooled = std::sqrt(s[i].standard_error * s[i].standard_error +
                                    s[i - 1].standard_error * s[i - 1].standard_error);
    pass = pass && s[i].frequency <= s[i - 1].frequency + 2 * pooled;
  }
  return {pass, detail.str()};
}

Outcome systole_trend() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunReport small = run(make_config(32, 3000, kSeedBase + 8, "systole"));
  const RunReport large = run(make_config(512, 3000, kSeedBase + 8, "systole"));
  const double elapsed = seconds_since(t0);
  const double m32 = small.systole->moments.mean, m512 = large.systole->moments.mean;
  const bool pass = std::abs(m512 - kSystoleTarget) <= 0.10 &&
                    std::abs(m512 - kSystoleTarget) <= std::abs(m32 - kSystoleTarget) && elapsed < 600;
  return {pass, "mean(32) = " + fmt(m32, 4) + "+-" + fmt(small.systole->moments.standard_error, 4) +
                    ", mean(512) = " + fmt(m512, 4) + "+-" + fmt(large.systole->moments.standard_error, 4) +
                    ", proxy rejections " + std::to_string(small.systole->proxy_count) + "/" +
                    std::to_string(large.systole->proxy_count) + ", " + fmt(elapsed, 1) + " s"};
}

std::string bits_word(unsigned bits, unsigned len) {
  std::string w;
  for (unsigned i = 0; i < len; ++i) w += (bits >> (len - 1 - i)) & 1 ? 'R' : 'L';
  return w;
}

Outcome property_suites() {
  std::vector<std::string> failed;
  auto check = [&](bool ok, const std::string& name) {
    if (!ok) failed.push_back(name);
  };

  bool trace_ok = true;
  for (unsigned len = 1; len <= 12 && trace_ok; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      const Word w(bits_word(bits, len));
      const BigInt t = word_trace(w);
      trace_ok = trace_ok && word_trace(w.reverse_swapped()) == t;
      for (std::size_t s = 1; s < len; ++s) trace_ok = trace_ok && word_trace(w.rotated(s)) == t;
    }
  }
  check(trace_ok, "trace invariance");

  bool monotone = true;
  for (unsigned len = 1; len <= 9; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      const std::string w = bits_word(bits, len);
      const BigInt t = word_trace(Word(w));
      for (std::size_t pos = 0; pos <= len; ++pos) {
        for (char ch : {'L', 'R'}) monotone = monotone && word_trace(Word(w.substr(0, pos) + ch + w.substr(pos))) >= t;
      }
    }
  }
  check(monotone, "insertion monotonicity");

  bool edge_bound = true, faces_ok = true;
  for (std::uint32_t n : {8u, 16u, 32u, 64u}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const RibbonGraph g(sample_uniform(n, kSeedBase + 9, n * 100 + s));
      std::vector<std::map<std::size_t, int>> through(g.edge_count());
      for (const auto& c : enumerate_cycles(g, 10)) {
        for (std::uint32_t e : c.edges) ++through[e][c.length()];
      }
      for (const auto& m : through) {
        for (const auto& [k, c] : m) edge_bound = edge_bound && c <= (1 << (k / 2));
      }
      const HomologyBasis basis(g);
      gf2::BitVector sum(g.edge_count());
      for (const auto& row : basis.face_edge_matrix()) sum ^= row;
      faces_ok = faces_ok && sum.none();
      faces_ok = faces_ok && basis.rank() + g.component_count() == g.faces().size();
    }
  }
  check(edge_bound, "edge cycle bound");
  check(faces_ok, "face matrix");

  const std::string stats = "genus,xk:3,z:LR/LLR,mell,systole,separating:4";
  RunConfig one = make_config(40, 200, kSeedBase + 9, stats);
  one.workers = 1;
  RunConfig four = one;
  four.workers = 4;
  auto body = [](const RunReport& r) {
    auto j = to_json(r, false);
    j["config"].erase("workers");
    return j.dump();
  };
  const std::string a = body(run(one)), b = body(run(one)), c = body(run(four));
  check(a == b, "determinism");
  check(a == c, "worker independence");

  std::string detail = failed.empty() ? "all property suites hold" : "failed:";
  for (const auto& f : failed) detail += " " + f;
  return {failed.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "run only these criteria")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"limit bracket", limit_bracket},
      {"riemannian constants", riemannian},
      {"oracle equivalence", oracle_equivalence},
      {"poisson cycle law", poisson_cycles},
      {"poisson word-class law", poisson_words},
      {"m_ell limit law", mell_law},
      {"separating decay", separating_decay},
      {"systole trend", systole_trend},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && std::find(only.begin(), only.end(), static_cast<int>(i + 1)) == only.end()) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
