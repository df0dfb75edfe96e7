#pragma once

// Evaluation of the limiting expected hyperbolic systole
//   sum_{k>=3} p_k 2 acosh(k/2),
//   p_k = exp(-sum_{i=3}^{k-1} Lambda_i) (1 - exp(-Lambda_k)),
// the limit law of m_ell and the Riemannian upper-bound coefficient.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "systole/bigint.hpp"
#include "systole/word.hpp"

namespace systole {

// log(x + sqrt(x^2 - 1)), x >= 1.
double arccosh(double x);

// Throws std::invalid_argument unless 3 <= k <= table.max_trace.
double p_term(std::uint64_t k, const TraceClassTable& table);

struct SeriesTerm {
  std::uint64_t k = 0;
  Rational lambda;       // Lambda_k
  double p = 0;          // p_k
  double length = 0;     // 2 acosh(k/2)
  double partial_sum = 0;  // S_k
};

struct SeriesTable {
  std::uint64_t n_terms = 0;
  std::vector<SeriesTerm> terms;  // k = 3..n_terms
  // Tail bound 2 p_n/(1 - e^{-Lambda_n}) x^{n+1}/(1-x), x = log(n+1)^{1/(n+1)}/e.
  double remainder = 0;
  // Same bound carrying the factor e^n from the geometric tail estimate.
  double remainder_rigorous = 0;

  double partial_sum() const { return terms.back().partial_sum; }
};

SeriesTable build_series_table(std::uint64_t n);

struct LimitBracket {
  std::uint64_t n = 0;
  double lower = 0;           // S_n
  double upper = 0;           // S_n + remainder
  double upper_rigorous = 0;  // S_n + remainder_rigorous
  std::vector<SeriesTerm> terms;
};

// Throws std::invalid_argument for n < 4.
LimitBracket systole_limit_bracket(std::uint64_t n);

// Limit of P[m_ell = k]; throws for k < 1.
double mell_limit_pmf(std::uint64_t k);

// sum_{k>=2} k P[m_ell = k], truncated after the first term below tolerance.
double riemannian_bound_coefficient(double tolerance = 1e-9);

// (m1, m2 * coefficient); throws for nonpositive inputs.
std::pair<double, double> riemannian_bounds(double m1, double m2);

}  // namespace systole
