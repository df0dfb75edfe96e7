#include "systole/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "systole/cycles.hpp"
#include "systole/exact.hpp"
#include "systole/series.hpp"

namespace systole {

bool StatisticSet::empty() const {
  return !genus && !xk_max && z_classes.empty() && !mell && !systole && !separating_bound;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint32_t parse_count(const std::string& name, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9) {
    throw std::invalid_argument("statistic '" + name + "' needs a nonnegative integer, got '" + value + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(value));
}

}  // namespace

StatisticSet parse_statistics(const std::string& text) {
  StatisticSet s;
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    const std::string name = item.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : item.substr(colon + 1);
    const bool has_arg = colon != std::string::npos;
    if (name == "genus" && !has_arg) {
      s.genus = true;
    } else if (name == "mell" && !has_arg) {
      s.mell = true;
    } else if (name == "systole" && !has_arg) {
      s.systole = true;
    } else if (name == "xk" && has_arg) {
      s.xk_max = parse_count(name, arg);
    } else if (name == "separating" && has_arg) {
      s.separating_bound = parse_count(name, arg);
    } else if (name == "z" && has_arg) {
      for (const std::string& w : split(arg, '/')) s.z_classes.emplace_back(w);
    } else {
      throw std::invalid_argument("unknown statistic '" + item + "'");
    }
  }
  if (s.empty()) throw std::invalid_argument("no statistics requested");
  return s;
}

std::string to_string(const StatisticSet& s) {
  std::vector<std::string> parts;
  if (s.genus) parts.push_back("genus");
  if (s.xk_max) parts.push_back("xk:" + std::to_string(*s.xk_max));
  if (!s.z_classes.empty()) {
    std::string z = "z:";
    for (std::size_t i = 0; i < s.z_classes.size(); ++i) z += (i ? "/" : "") + s.z_classes[i].str();
    parts.push_back(z);
  }
  if (s.mell) parts.push_back("mell");
  if (s.systole) parts.push_back("systole");
  if (s.separating_bound) parts.push_back("separating:" + std::to_string(*s.separating_bound));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

void validate(const RunConfig& c) {
  if (c.n < 1) throw std::invalid_argument("n must be >= 1");
  if (c.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (c.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (c.statistics.empty()) throw std::invalid_argument("no statistics requested");
  if (c.statistics.xk_max) {
    const auto k = *c.statistics.xk_max;
    if (k < 1 || k > 2 * c.n) throw std::invalid_argument("xk max_k must be in [1, 2n]");
  }
  if (c.statistics.separating_bound) {
    const auto b = *c.statistics.separating_bound;
    if (b < 2 || b > 3 * c.n) throw std::invalid_argument("separating bound must be in [2, 3n]");
  }
  for (const Word& w : c.statistics.z_classes) {
    if (w.length() > 2 * c.n) throw std::invalid_argument("z class word longer than 2n: " + w.str());
  }
  if (c.format != "json" && c.format != "csv" && c.format != "text") {
    throw std::invalid_argument("format must be json, csv or text");
  }
}

SampleRecord measure(const RibbonGraph& g, const StatisticSet& stats, const std::vector<WordClass>& classes) {
  SampleRecord r;
  r.genus = g.total_genus();

  std::size_t walk = stats.xk_max.value_or(0);
  for (const WordClass& cls : classes) walk = std::max(walk, cls.length);
  if (walk > 0) {
    r.xk.assign(stats.xk_max.value_or(0), 0);
    r.z.assign(classes.size(), 0);
    for_each_cycle(g, walk, [&](const Cycle& c) {
      const std::size_t k = c.length();
      if (k <= r.xk.size()) ++r.xk[k - 1];
      if (classes.empty()) return;
      bool needed = false;
      for (const WordClass& cls : classes) needed = needed || cls.length == k;
      if (!needed) return;
      const Word canonical = canonicalize(cycle_word(c)).canonical;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].canonical == canonical) ++r.z[i];
      }
    });
  }
  if (stats.mell) {
    const MellResult m = m_ell_detailed(g);
    r.mell = m.value;
    r.mell_proxy = m.proxy_rejected_shorter;
  }
  if (stats.systole) {
    const SystoleResult s = systole_estimate_detailed(g);
    r.systole = s.length;
    r.systole_proxy = s.proxy_rejected_candidate;
  }
  if (stats.separating_bound) r.separating = has_short_separating_cycle(g, *stats.separating_bound);
  return r;
}

namespace {

CountSummary summarize_counts(const std::vector<std::int64_t>& values) {
  CountSummary s;
  s.moments = summarize(std::vector<double>(values.begin(), values.end()));
  s.pmf = empirical_pmf(values);
  return s;
}

JointPmf product_poisson(const std::vector<double>& means) {
  JointPmf out{{{}, 1.0}};
  for (double lambda : means) {
    const Pmf marginal = poisson_pmf_vector(lambda);
    JointPmf next;
    for (const auto& [key, mass] : out) {
      for (std::size_t k = 0; k < marginal.size(); ++k) {
        auto extended = key;
        extended.push_back(static_cast<std::int64_t>(k));
        next[extended] = mass * marginal[k];
      }
    }
    out = std::move(next);
  }
  return out;
}

Pmf mell_limit_vector() {
  Pmf out{0.0};
  CompensatedSum mass;
  for (std::uint64_t k = 1; 1.0 - mass.value() > 1e-15 && k < 64; ++k) {
    out.push_back(mell_limit_pmf(k));
    mass.add(out.back());
  }
  return out;
}

constexpr std::size_t kMaxJointClasses = 4;

}  // namespace

RunReport run(const RunConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const StatisticSet& stats = config.statistics;

  std::vector<WordClass> classes;
  for (const Word& w : stats.z_classes) classes.push_back(canonicalize(w));

  RunReport report;
  report.config = config;
  report.records.resize(config.samples);

  // Worker t handles samples t, t + W, ...; each sample owns stream = index.
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned t) {
    try {
      for (std::uint64_t i = t; i < config.samples; i += config.workers) {
        const RibbonGraph g(sample_uniform(config.n, config.seed, i));
        report.records[i] = measure(g, stats, classes);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.workers, config.samples));
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  const auto& recs = report.records;
  const double total = static_cast<double>(recs.size());

  if (stats.genus) {
    std::vector<std::int64_t> v;
    for (const auto& r : recs) v.push_back(r.genus);
    report.genus = summarize_counts(v);
  }
  if (stats.xk_max) {
    for (std::uint32_t k = 1; k <= *stats.xk_max; ++k) {
      std::vector<std::int64_t> v;
      for (const auto& r : recs) v.push_back(r.xk[k - 1]);
      XkSummary s;
      s.k = k;
      s.counts = summarize_counts(v);
      s.exact_mean = expected_xk(config.n, k);
      s.poisson_mean = std::ldexp(1.0, static_cast<int>(k)) / (2.0 * k);
      s.tv_poisson = tv_distance(s.counts.pmf, poisson_pmf_vector(s.poisson_mean, s.counts.pmf.size()));
      report.xk.push_back(std::move(s));
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<std::int64_t> v;
    for (const auto& r : recs) v.push_back(r.z[i]);
    ZSummary s{classes[i], summarize_counts(v), expected_z_class(config.n, classes[i]), 0.0};
    const double lambda = to_double(classes[i].poisson_mean);
    s.tv_poisson = tv_distance(s.counts.pmf, poisson_pmf_vector(lambda, s.counts.pmf.size()));
    report.z.push_back(std::move(s));
  }
  if (classes.size() >= 2 && classes.size() <= kMaxJointClasses) {
    std::map<std::vector<std::int64_t>, std::uint64_t> counts;
    for (const auto& r : recs) ++counts[r.z];
    JointPmf empirical;
    for (const auto& [key, c] : counts) empirical[key] = static_cast<double>(c) / total;
    std::vector<double> means;
    for (const auto& cls : classes) means.push_back(to_double(cls.poisson_mean));
    report.z_joint_tv = tv_distance(empirical, product_poisson(means));
  }
  if (stats.mell) {
    MellSummary s;
    std::vector<std::int64_t> all, conditional;
    for (const auto& r : recs) {
      all.push_back(r.mell);
      if (r.genus > 0) conditional.push_back(r.mell);
      if (r.mell_proxy) ++s.proxy_count;
    }
    s.pmf = empirical_pmf(all);
    s.conditional_count = conditional.size();
    if (!conditional.empty()) {
      s.conditional_pmf = empirical_pmf(conditional);
      s.conditional_mean = summarize(std::vector<double>(conditional.begin(), conditional.end())).mean;
      s.tv_limit = tv_distance(s.conditional_pmf, mell_limit_vector());
    } else {
      s.tv_limit = 1.0;
    }
    report.mell = std::move(s);
  }
  if (stats.systole) {
    SystoleSummary s;
    std::vector<double> lengths;
    for (const auto& r : recs) {
      if (r.systole) {
        lengths.push_back(*r.systole);
      } else {
        ++s.genus_zero_count;
      }
      if (r.systole_proxy) ++s.proxy_count;
    }
    s.moments = summarize(lengths);
    s.series_limit = build_series_table(40).partial_sum();
    report.systole = s;
  }
  if (stats.separating_bound) {
    SeparatingSummary s;
    s.bound = *stats.separating_bound;
    for (const auto& r : recs) s.count += r.separating ? 1 : 0;
    s.frequency = static_cast<double>(s.count) / total;
    s.standard_error = std::sqrt(s.frequency * (1.0 - s.frequency) / total);
    report.separating = s;
  }

  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

using nlohmann::json;

json fraction_json(const Rational& r) { return {{"fraction", to_fraction_string(r)}, {"decimal", to_double(r)}}; }

json counts_json(const CountSummary& s) {
  return {{"mean", s.moments.mean}, {"stderr", s.moments.standard_error}, {"pmf", s.pmf}};
}

}  // namespace

json to_json(const RunReport& report, bool include_wall_clock) {
  const RunConfig& c = report.config;
  json out;
  out["config"] = {{"n", c.n},
                   {"samples", c.samples},
                   {"seed", c.seed},
                   {"statistics", to_string(c.statistics)},
                   {"workers", c.workers}};
  if (report.genus) out["genus"] = counts_json(*report.genus);
  for (const auto& x : report.xk) {
    json j = counts_json(x.counts);
    j["k"] = x.k;
    j["exact_mean"] = fraction_json(x.exact_mean);
    j["poisson_mean"] = x.poisson_mean;
    j["tv_poisson"] = x.tv_poisson;
    out["xk"].push_back(j);
  }
  for (const auto& z : report.z) {
    json j = counts_json(z.counts);
    j["class"] = z.cls.canonical.str();
    j["class_size"] = z.cls.size;
    j["poisson_mean"] = fraction_json(z.cls.poisson_mean);
    if (z.exact_mean) j["exact_mean"] = fraction_json(*z.exact_mean);
    j["tv_poisson"] = z.tv_poisson;
    out["z"].push_back(j);
  }
  if (report.z_joint_tv) out["z_joint_tv"] = *report.z_joint_tv;
  if (report.mell) {
    const auto& m = *report.mell;
    out["mell"] = {{"pmf", m.pmf},
                   {"conditional_pmf", m.conditional_pmf},
                   {"conditional_count", m.conditional_count},
                   {"conditional_mean", m.conditional_mean},
                   {"tv_limit", m.tv_limit},
                   {"proxy_rejections", m.proxy_count}};
  }
  if (report.systole) {
    const auto& s = *report.systole;
    out["systole"] = {{"mean", s.moments.mean},
                      {"stderr", s.moments.standard_error},
                      {"count", s.moments.count},
                      {"genus_zero", s.genus_zero_count},
                      {"proxy_rejections", s.proxy_count},
                      {"series_limit", s.series_limit}};
  }
  if (report.separating) {
    const auto& s = *report.separating;
    out["separating"] = {
        {"bound", s.bound}, {"count", s.count}, {"frequency", s.frequency}, {"stderr", s.standard_error}};
  }
  if (include_wall_clock) out["wall_clock_seconds"] = report.wall_clock_seconds;
  return out;
}

namespace {

// Leading zero mass is skipped and the first shown index is marked.
std::string pmf_row(const Pmf& p) {
  std::size_t first = 0;
  while (first + 1 < p.size() && p[first] == 0.0) ++first;
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  if (first > 0) os << "[" << first << "..] ";
  for (std::size_t i = first; i < p.size(); ++i) os << (i > first ? " " : "") << p[i];
  return os.str();
}

}  // namespace

std::string to_text(const RunReport& report) {
  const RunConfig& c = report.config;
  std::ostringstream os;
  os << "n=" << c.n << " samples=" << c.samples << " seed=" << c.seed << " stats=" << to_string(c.statistics)
     << "\n\n";
  os << std::left << std::setw(16) << "statistic" << std::right << std::setw(12) << "mean" << std::setw(12)
     << "stderr" << std::setw(12) << "reference" << std::setw(10) << "tv" << "  pmf\n";
  os << std::fixed;
  auto row = [&](const std::string& name, const CountSummary& s, const std::string& ref, double tv,
                 bool has_tv) {
    os << std::left << std::setw(16) << name << std::right << std::setprecision(5) << std::setw(12)
       << s.moments.mean << std::setw(12) << s.moments.standard_error << std::setw(12) << ref;
    if (has_tv) {
      os << std::setw(10) << std::setprecision(4) << tv;
    } else {
      os << std::setw(10) << "-";
    }
    os << "  " << pmf_row(s.pmf) << "\n";
  };
  auto dec = [](double x) {
    std::ostringstream d;
    d << std::fixed << std::setprecision(5) << x;
    return d.str();
  };
  if (report.genus) row("genus", *report.genus, "-", 0, false);
  for (const auto& x : report.xk) row("X_" + std::to_string(x.k), x.counts, dec(to_double(x.exact_mean)), x.tv_poisson, true);
  for (const auto& z : report.z) {
    row("Z_[" + z.cls.canonical.str() + "]", z.counts, z.exact_mean ? dec(to_double(*z.exact_mean)) : "-",
        z.tv_poisson, true);
  }
  if (report.z_joint_tv) os << "\njoint Z tv vs product Poisson: " << std::setprecision(4) << *report.z_joint_tv << "\n";
  if (report.mell) {
    const auto& m = *report.mell;
    os << "\nm_ell | genus>0: count=" << m.conditional_count << " mean=" << std::setprecision(5)
       << m.conditional_mean << " tv_limit=" << std::setprecision(4) << m.tv_limit
       << " proxy_rejections=" << m.proxy_count << "\n  pmf " << pmf_row(m.conditional_pmf) << "\n";
  }
  if (report.systole) {
    const auto& s = *report.systole;
    os << "\nsystole: mean=" << std::setprecision(5) << s.moments.mean << " stderr=" << s.moments.standard_error
       << " series_limit=" << s.series_limit << " genus_zero=" << s.genus_zero_count
       << " proxy_rejections=" << s.proxy_count << "\n";
  }
  if (report.separating) {
    const auto& s = *report.separating;
    os << "\nseparating (<= " << s.bound << " edges): frequency=" << std::setprecision(5) << s.frequency
       << " stderr=" << s.standard_error << " count=" << s.count << "\n";
  }
  os << "\nwall clock " << std::setprecision(3) << report.wall_clock_seconds << " s\n";
  return os.str();
}

std::string records_to_csv(const RunReport& report) {
  const StatisticSet& st = report.config.statistics;
  std::ostringstream os;
  os << "sample";
  if (st.genus) os << ",genus";
  if (st.xk_max) {
    for (std::uint32_t k = 1; k <= *st.xk_max; ++k) os << ",X_" << k;
  }
  for (const auto& z : report.z) os << ",Z_" << z.cls.canonical.str();
  if (st.mell) os << ",mell,mell_proxy";
  if (st.systole) os << ",systole,systole_proxy";
  if (st.separating_bound) os << ",separating";
  os << "\n" << std::setprecision(17);
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    os << i;
    if (st.genus) os << "," << r.genus;
    for (auto x : r.xk) os << "," << x;
    for (auto z : r.z) os << "," << z;
    if (st.mell) os << "," << r.mell << "," << (r.mell_proxy ? 1 : 0);
    if (st.systole) {
      os << ",";
      if (r.systole) os << *r.systole;
      os << "," << (r.systole_proxy ? 1 : 0);
    }
    if (st.separating_bound) os << "," << (r.separating ? 1 : 0);
    os << "\n";
  }
  return os.str();
}

ExhaustiveReport run_exhaustive(std::uint32_t n, const StatisticSet& stats) {
  if (n < 1 || n > kMaxEnumerableN) throw std::invalid_argument("exhaustive runs need 1 <= n <= 3");
  RunConfig probe;
  probe.n = n;
  probe.statistics = stats;
  validate(probe);

  std::vector<WordClass> classes;
  for (const Word& w : stats.z_classes) classes.push_back(canonicalize(w));
  // Separating frequencies are tabulated per exact cycle length.
  StatisticSet per_sample = stats;
  per_sample.separating_bound.reset();
  const std::uint32_t sep_bound = stats.separating_bound.value_or(0);

  ExhaustiveReport out;
  out.n = n;
  std::map<int, BigInt> genus_counts, mell_counts;
  std::vector<BigInt> xk_totals(stats.xk_max.value_or(0), 0);
  std::vector<BigInt> z_totals(classes.size(), 0);
  std::vector<BigInt> sep_counts(sep_bound + 1, 0);
  BigInt total = 0;

  enumerate_all_pairings(n, [&](const Pairing& p) {
    const RibbonGraph g(p);
    ++total;
    int genus = 0;
    for (std::uint32_t c = 0; c < g.component_count(); ++c) {
      genus += g.genus_per_component()[c];
    }
    // V - E + F = 2C - 2g over the whole graph.
    const long long euler = static_cast<long long>(g.vertex_count()) - g.edge_count() +
                            static_cast<long long>(g.faces().size());
    if (euler != 2LL * g.component_count() - 2LL * g.total_genus() || genus != g.total_genus()) {
      out.euler_consistent = false;
    }
    ++genus_counts[g.total_genus()];
    const SampleRecord r = measure(g, per_sample, classes);
    for (std::size_t i = 0; i < r.xk.size(); ++i) xk_totals[i] += r.xk[i];
    for (std::size_t i = 0; i < r.z.size(); ++i) z_totals[i] += r.z[i];
    if (stats.mell) ++mell_counts[r.mell];
    if (sep_bound >= 2) {
      std::vector<char> has(sep_bound + 1, 0);
      for_each_cycle(g, sep_bound, [&](const Cycle& c) {
        if (c.length() >= 2 && !has[c.length()] && is_graph_separating(g, c)) has[c.length()] = 1;
      });
      for (std::uint32_t k = 2; k <= sep_bound; ++k) sep_counts[k] += has[k];
    }
  });

  out.pairings = total;
  for (const auto& [g, c] : genus_counts) out.genus_distribution.emplace_back(g, Rational(c, total));
  for (std::size_t i = 0; i < xk_totals.size(); ++i) {
    const auto k = static_cast<std::uint32_t>(i + 1);
    out.xk.push_back({k, Rational(xk_totals[i], total), expected_xk(n, k)});
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.z.push_back({classes[i], Rational(z_totals[i], total), expected_z_class(n, classes[i])});
  }
  for (const auto& [m, c] : mell_counts) out.mell_distribution.emplace_back(m, Rational(c, total));
  for (std::uint32_t k = 2; k <= sep_bound; ++k) {
    out.separating.push_back({k, Rational(sep_counts[k], total), gnk_bound_exact(n, k)});
  }
  return out;
}

nlohmann::json to_json(const ExhaustiveReport& r) {
  json out;
  out["n"] = r.n;
  out["pairings"] = r.pairings.str();
  if (!r.genus_distribution.empty()) {
    for (const auto& [g, p] : r.genus_distribution) {
      out["genus_distribution"].push_back({{"genus", g}, {"probability", fraction_json(p)}});
    }
  }
  out["euler_consistent"] = r.euler_consistent;
  for (const auto& x : r.xk) {
    out["xk"].push_back({{"k", x.k},
                         {"average", fraction_json(x.average)},
                         {"exact", fraction_json(x.exact)},
                         {"match", x.average == x.exact}});
  }
  for (const auto& z : r.z) {
    out["z"].push_back({{"class", z.cls.canonical.str()},
                        {"average", fraction_json(z.average)},
                        {"exact", fraction_json(z.exact)},
                        {"match", z.average == z.exact}});
  }
  for (const auto& [m, p] : r.mell_distribution) {
    out["mell_distribution"].push_back({{"mell", m}, {"probability", fraction_json(p)}});
  }
  for (const auto& s : r.separating) {
    out["separating"].push_back({{"k", s.k},
                                 {"frequency", fraction_json(s.frequency)},
                                 {"bound", fraction_json(s.bound)},
                                 {"within_bound", s.frequency <= s.bound}});
  }
  return out;
}

}  // namespace systole
