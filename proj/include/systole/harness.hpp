#pragma once

// Seeded Monte Carlo runs over uniform random pairings and exhaustive runs
// over all of Omega_N for N <= 3. Sample i always uses PRNG stream i, so a
// run is a pure function of (n, samples, seed, statistics).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "systole/bigint.hpp"
#include "systole/ribbon_graph.hpp"
#include "systole/stats.hpp"
#include "systole/word.hpp"

namespace systole {

struct StatisticSet {
  bool genus = false;
  std::optional<std::uint32_t> xk_max;  // X_{N,k} for k = 1..xk_max
  std::vector<Word> z_classes;
  bool mell = false;
  bool systole = false;
  std::optional<std::uint32_t> separating_bound;

  bool empty() const;
};

// Comma-separated: genus, xk:K, z:W1/W2/..., mell, systole, separating:B.
StatisticSet parse_statistics(const std::string& text);
std::string to_string(const StatisticSet& s);

struct RunConfig {
  std::uint32_t n = 1;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  StatisticSet statistics;
  unsigned workers = 1;
  std::string output;  // empty: stdout
  std::string format = "json";
};

// Throws std::invalid_argument naming the offending field.
void validate(const RunConfig& config);

struct SampleRecord {
  int genus = 0;
  std::vector<std::int64_t> xk;  // index k-1
  std::vector<std::int64_t> z;   // per requested class
  int mell = 0;
  bool mell_proxy = false;
  std::optional<double> systole;
  bool systole_proxy = false;
  bool separating = false;
};

SampleRecord measure(const RibbonGraph& g, const StatisticSet& stats, const std::vector<WordClass>& classes);

struct CountSummary {
  SampleSummary moments;
  Pmf pmf;
};

struct XkSummary {
  std::uint32_t k = 0;
  CountSummary counts;
  Rational exact_mean;
  double poisson_mean = 0;  // 2^k / (2k)
  double tv_poisson = 0;
};

struct ZSummary {
  WordClass cls;
  CountSummary counts;
  std::optional<Rational> exact_mean;
  double tv_poisson = 0;
};

struct MellSummary {
  Pmf pmf;                   // all samples, m_ell = 0 for genus 0
  Pmf conditional_pmf;       // genus > 0 only
  std::uint64_t conditional_count = 0;
  double conditional_mean = 0;
  double tv_limit = 0;
  std::uint64_t proxy_count = 0;
};

struct SystoleSummary {
  SampleSummary moments;  // over samples with positive genus
  std::uint64_t genus_zero_count = 0;
  std::uint64_t proxy_count = 0;
  double series_limit = 0;
};

struct SeparatingSummary {
  std::uint32_t bound = 0;
  std::uint64_t count = 0;
  double frequency = 0;
  double standard_error = 0;
};

struct RunReport {
  RunConfig config;
  std::optional<CountSummary> genus;
  std::vector<XkSummary> xk;
  std::vector<ZSummary> z;
  std::optional<double> z_joint_tv;  // joint law vs product of Poissons
  std::optional<MellSummary> mell;
  std::optional<SystoleSummary> systole;
  std::optional<SeparatingSummary> separating;
  std::vector<SampleRecord> records;
  double wall_clock_seconds = 0;
};

RunReport run(const RunConfig& config);

nlohmann::json to_json(const RunReport& report, bool include_wall_clock = true);
std::string to_text(const RunReport& report);
std::string records_to_csv(const RunReport& report);

// Exact averages over every pairing of Omega_N next to the closed forms.
struct ExhaustiveReport {
  std::uint32_t n = 0;
  BigInt pairings = 0;
  std::vector<std::pair<int, Rational>> genus_distribution;
  bool euler_consistent = true;
  struct Xk {
    std::uint32_t k;
    Rational average;
    Rational exact;
  };
  std::vector<Xk> xk;
  struct Z {
    WordClass cls;
    Rational average;
    Rational exact;
  };
  std::vector<Z> z;
  std::vector<std::pair<int, Rational>> mell_distribution;
  struct Separating {
    std::uint32_t k;
    Rational frequency;
    Rational bound;
  };
  std::vector<Separating> separating;
};

ExhaustiveReport run_exhaustive(std::uint32_t n, const StatisticSet& stats);
nlohmann::json to_json(const ExhaustiveReport& report);

}  // namespace systole
