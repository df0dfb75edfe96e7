#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace systole {

// Probability mass on 0, 1, 2, ...
using Pmf = std::vector<double>;

// lambda^k e^{-lambda} / k!, evaluated in log space. Throws for lambda < 0.
double poisson_pmf(double lambda, std::uint64_t k);

// Poisson pmf on 0..K with K the first index >= min_support at which the
// remaining tail is provably below 1e-16.
Pmf poisson_pmf_vector(double lambda, std::size_t min_support = 0);

// Half the L1 distance. Both inputs must sum to 1 within 1e-9.
double tv_distance(const Pmf& p, const Pmf& q);

// Joint pmf over integer tuples; missing keys carry zero mass.
using JointPmf = std::map<std::vector<std::int64_t>, double>;
double tv_distance(const JointPmf& p, const JointPmf& q);

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0;
  double correction_ = 0;
};

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0;
  double standard_error = 0;
};

SampleSummary summarize(const std::vector<double>& values);

// Empirical pmf of nonnegative integer observations, truncated at the largest value.
Pmf empirical_pmf(const std::vector<std::int64_t>& values);

}  // namespace systole
