#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "systole/exact.hpp"
#include "systole/harness.hpp"
#include "systole/series.hpp"
#include "systole/word.hpp"

using nlohmann::json;
using namespace systole;

namespace {

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

void print_exact(const std::string& label, const Rational& r, bool as_json) {
  if (as_json) {
    std::cout << json{{"what", label}, {"fraction", to_fraction_string(r)}, {"decimal", to_double(r)}}.dump(2)
              << "\n";
  } else {
    std::cout << label << " = " << to_fraction_string(r) << " ~ " << std::setprecision(12) << to_double(r) << "\n";
  }
}

int cmd_enumerate(std::uint64_t max_trace) {
  std::cout << enumerate_trace_classes(max_trace).to_csv();
  return 0;
}

int cmd_limit(std::uint64_t terms, const std::string& format) {
  const LimitBracket b = systole_limit_bracket(terms);
  // Outward rounding to five decimals.
  const double lo5 = std::floor(b.lower * 1e5) / 1e5;
  const double hi5 = std::ceil(b.upper * 1e5) / 1e5;
  if (format == "json") {
    json out{{"n", b.n},
             {"lower", b.lower},
             {"upper", b.upper},
             {"upper_rigorous", b.upper_rigorous},
             {"lower_5dp", lo5},
             {"upper_5dp", hi5}};
    out["terms"] = json::array();
    for (const auto& t : b.terms) {
      out["terms"].push_back({{"k", t.k},
                              {"lambda", to_fraction_string(t.lambda)},
                              {"p", t.p},
                              {"length", t.length},
                              {"partial_sum", t.partial_sum}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << std::setw(4) << "k" << std::setw(12) << "Lambda_k" << std::setw(14) << "p_k" << std::setw(12)
            << "2acosh(k/2)" << std::setw(14) << "S_k" << "\n";
  for (const auto& t : b.terms) {
    std::cout << std::setw(4) << t.k << std::setw(12) << to_fraction_string(t.lambda) << std::setw(14)
              << fixed(t.p, 8) << std::setw(12) << fixed(t.length, 6) << std::setw(14) << fixed(t.partial_sum, 8)
              << "\n";
  }
  std::cout << "\nbracket [" << fixed(b.lower, 8) << ", " << fixed(b.upper, 8) << "]  rounded outward ["
            << fixed(lo5, 5) << ", " << fixed(hi5, 5) << "]\n"
            << "upper with e^n tail factor " << fixed(b.upper_rigorous, 8) << "\n";
  return 0;
}

int cmd_mell(std::uint64_t max_k, const std::string& format) {
  json rows = json::array();
  double total = 0;
  for (std::uint64_t k = 1; k <= max_k; ++k) {
    const double p = mell_limit_pmf(k);
    total += p;
    rows.push_back({{"k", k}, {"p", p}, {"cumulative", total}});
  }
  if (format == "json") {
    std::cout << json{{"pmf", rows}}.dump(2) << "\n";
    return 0;
  }
  std::cout << std::setw(4) << "k" << std::setw(16) << "P[m=k]" << std::setw(16) << "cumulative" << "\n";
  for (const auto& r : rows) {
    std::cout << std::setw(4) << r["k"].get<std::uint64_t>() << std::setw(16) << fixed(r["p"].get<double>(), 10)
              << std::setw(16) << fixed(r["cumulative"].get<double>(), 10) << "\n";
  }
  return 0;
}

int cmd_riemannian(double m1, double m2, const std::string& format) {
  const auto [lower, upper] = riemannian_bounds(m1, m2);
  const double coefficient = riemannian_bound_coefficient();
  if (format == "json") {
    std::cout << json{{"m1", m1}, {"m2", m2}, {"coefficient", coefficient}, {"lower", lower}, {"upper", upper}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "coefficient " << fixed(coefficient, 6) << "\nlower " << fixed(lower, 6) << "\nupper "
              << fixed(upper, 6) << "\n";
  }
  return 0;
}

int cmd_exact(const std::string& what, std::uint32_t n, std::uint32_t k, const std::string& word,
              bool as_json) {
  if (what == "xk") {
    print_exact("E[X_{" + std::to_string(n) + "," + std::to_string(k) + "}]", expected_xk(n, k), as_json);
  } else if (what == "z") {
    if (word.empty()) throw std::invalid_argument("--what z needs --word");
    const WordClass cls = canonicalize(Word(word));
    print_exact("E[Z_{" + std::to_string(n) + ",[" + cls.canonical.str() + "]}]", expected_z_class(n, cls),
                as_json);
  } else if (what == "omega") {
    print_exact("|Omega_" + std::to_string(n) + "|", Rational(omega_count(n)), as_json);
  } else if (what == "dnk") {
    print_exact("P[D_{" + std::to_string(n) + "," + std::to_string(k) + "}]", dnk_probability(n, k), as_json);
  } else if (what == "gbound") {
    print_exact("G bound (" + std::to_string(n) + "," + std::to_string(k) + ")", gnk_bound_exact(n, k), as_json);
  } else {
    throw std::invalid_argument("unknown --what " + what);
  }
  return 0;
}

void emit(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << body;
}

int cmd_sample(RunConfig config, const std::string& stats) {
  config.statistics = parse_statistics(stats);
  validate(config);
  const RunReport report = run(config);
  if (config.format == "csv") {
    emit(records_to_csv(report), config.output);
  } else if (config.format == "text") {
    emit(to_text(report), config.output);
  } else {
    emit(to_json(report).dump(2) + "\n", config.output);
  }
  if (!config.output.empty() && config.format != "text") std::cerr << to_text(report);
  return 0;
}

int cmd_brute(std::uint32_t n, const std::string& stats) {
  const ExhaustiveReport r = run_exhaustive(n, parse_statistics(stats));
  std::cout << to_json(r).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Systoles of random surfaces glued from ideal triangles"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  std::uint64_t max_trace = 0;
  auto* enumerate = app.add_subcommand("enumerate-classes", "CSV table of trace classes A_3..A_K");
  enumerate->add_option("--max-trace", max_trace)->required()->check(CLI::Range(3, 1 << 20));

  std::uint64_t terms = 0;
  auto* limit = app.add_subcommand("limit", "partial sum and tail bracket of the limiting expected systole");
  limit->add_option("--terms", terms)->required()->check(CLI::Range(4, 400));
  add_format(limit);

  std::uint64_t max_k = 0;
  auto* mell = app.add_subcommand("mell-dist", "limit distribution of m_ell");
  mell->add_option("--max-k", max_k)->required()->check(CLI::Range(1, 4096));
  add_format(mell);

  double m1 = 0, m2 = 0;
  auto* riem = app.add_subcommand("riemannian-bound", "bounds for the Riemannian triangle model");
  riem->add_option("--m1", m1)->required()->check(CLI::PositiveNumber);
  riem->add_option("--m2", m2)->required()->check(CLI::PositiveNumber);
  add_format(riem);

  std::string what, word;
  std::uint32_t exact_n = 0, exact_k = 0;
  auto* exact = app.add_subcommand("exact", "closed-form finite-N quantities");
  exact->add_option("--what", what)->required()->check(CLI::IsMember({"xk", "z", "omega", "dnk", "gbound"}));
  exact->add_option("--n", exact_n)->required()->check(CLI::Range(1, 1 << 20));
  exact->add_option("--k", exact_k);
  exact->add_option("--word", word);
  add_format(exact);

  RunConfig config;
  std::string stats;
  auto* sample = app.add_subcommand("sample", "Monte Carlo over uniform random pairings");
  sample->add_option("--n", config.n)->required()->check(CLI::Range(1, 1 << 24));
  sample->add_option("--count", config.samples)->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", config.seed)->required();
  sample->add_option("--stats", stats, "genus,xk:K,z:W1/W2,mell,systole,separating:B")->required();
  sample->add_option("--workers", config.workers)->check(CLI::Range(1, 256));
  sample->add_option("--out", config.output);
  sample->add_option("--format", config.format)->check(CLI::IsMember({"json", "csv", "text"}));

  std::uint32_t brute_n = 0;
  std::string brute_stats;
  auto* brute = app.add_subcommand("brute-force", "exact averages over every pairing");
  brute->add_option("--n", brute_n)->required()->check(CLI::IsMember({1, 2}));
  brute->add_option("--stats", brute_stats)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(max_trace);
    if (*limit) return cmd_limit(terms, format);
    if (*mell) return cmd_mell(max_k, format);
    if (*riem) return cmd_riemannian(m1, m2, format);
    if (*exact) return cmd_exact(what, exact_n, exact_k, word, format == "json");
    if (*sample) return cmd_sample(config, stats);
    if (*brute) return cmd_brute(brute_n, brute_stats);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
