#include "systole/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace systole {

double poisson_pmf(double lambda, std::uint64_t k) {
  if (!(lambda >= 0)) throw std::invalid_argument("poisson_pmf requires lambda >= 0");
  if (lambda == 0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(lambda) - lambda - std::lgamma(kd + 1.0));
}

Pmf poisson_pmf_vector(double lambda, std::size_t min_support) {
  Pmf out;
  for (std::size_t k = 0;; ++k) {
    out.push_back(poisson_pmf(lambda, k));
    // Past the mode the tail after k is below p_k * lambda / (k + 1 - lambda).
    const double next = static_cast<double>(k + 1);
    if (k >= min_support && next > lambda && out.back() * lambda / (next - lambda) < 1e-16) break;
  }
  return out;
}

namespace {

double checked_mass(const Pmf& p) {
  CompensatedSum s;
  for (double x : p) {
    if (!(x >= 0)) throw std::invalid_argument("pmf entries must be nonnegative");
    s.add(x);
  }
  if (std::abs(s.value() - 1.0) > 1e-9) throw std::invalid_argument("pmf does not sum to 1");
  return s.value();
}

}  // namespace

double tv_distance(const Pmf& p, const Pmf& q) {
  checked_mass(p);
  checked_mass(q);
  CompensatedSum diff;
  for (std::size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    diff.add(std::abs(a - b));
  }
  return std::min(1.0, 0.5 * diff.value());
}

double tv_distance(const JointPmf& p, const JointPmf& q) {
  Pmf pv, qv;
  for (const auto& [key, mass] : p) {
    pv.push_back(mass);
    auto it = q.find(key);
    qv.push_back(it == q.end() ? 0.0 : it->second);
  }
  for (const auto& [key, mass] : q) {
    if (!p.contains(key)) {
      pv.push_back(0.0);
      qv.push_back(mass);
    }
  }
  return tv_distance(pv, qv);
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

SampleSummary summarize(const std::vector<double>& values) {
  SampleSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  CompensatedSum total;
  for (double v : values) total.add(v);
  s.mean = total.value() / static_cast<double>(s.count);
  if (s.count > 1) {
    CompensatedSum sq;
    for (double v : values) sq.add((v - s.mean) * (v - s.mean));
    const double variance = sq.value() / static_cast<double>(s.count - 1);
    s.standard_error = std::sqrt(variance / static_cast<double>(s.count));
  }
  return s;
}

Pmf empirical_pmf(const std::vector<std::int64_t>& values) {
  if (values.empty()) return {};
  const std::int64_t top = *std::max_element(values.begin(), values.end());
  if (*std::min_element(values.begin(), values.end()) < 0) {
    throw std::invalid_argument("empirical_pmf needs nonnegative values");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(top) + 1, 0);
  for (std::int64_t v : values) ++counts[static_cast<std::size_t>(v)];
  Pmf out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(values.size());
  }
  return out;
}

}  // namespace systole
