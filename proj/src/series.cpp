#include "systole/series.hpp"

#include <cmath>
#include <stdexcept>

namespace systole {

double arccosh(double x) {
  if (!(x >= 1.0)) throw std::domain_error("arccosh requires x >= 1");
  return std::log(x + std::sqrt(x * x - 1.0));
}

namespace {

Rational lambda_prefix(std::uint64_t k, const TraceClassTable& table) {
  Rational total = 0;
  for (std::uint64_t i = 3; i < k; ++i) total += table.lambda(i);
  return total;
}

}  // namespace

double p_term(std::uint64_t k, const TraceClassTable& table) {
  if (k < 3) throw std::invalid_argument("p_term requires k >= 3");
  if (k > table.max_trace) throw std::invalid_argument("trace class table too small for p_term");
  const double prefix = std::exp(-to_double(lambda_prefix(k, table)));
  return prefix * -std::expm1(-to_double(table.lambda(k)));
}

SeriesTable build_series_table(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("series table needs n >= 3");
  const TraceClassTable table = enumerate_trace_classes(n);

  SeriesTable out;
  out.n_terms = n;
  double sum = 0;
  for (std::uint64_t k = 3; k <= n; ++k) {
    SeriesTerm t;
    t.k = k;
    t.lambda = table.lambda(k);
    t.p = p_term(k, table);
    t.length = 2.0 * arccosh(static_cast<double>(k) / 2.0);
    sum += t.p * t.length;
    t.partial_sum = sum;
    out.terms.push_back(std::move(t));
  }

  const double nd = static_cast<double>(n);
  const double x = std::pow(std::log(nd + 1.0), 1.0 / (nd + 1.0)) / std::exp(1.0);
  const double last_factor = -std::expm1(-to_double(table.lambda(n)));
  out.remainder = 2.0 * out.terms.back().p / last_factor * std::pow(x, nd + 1.0) / (1.0 - x);
  out.remainder_rigorous = std::exp(nd) * out.remainder;
  return out;
}

LimitBracket systole_limit_bracket(std::uint64_t n) {
  if (n < 4) throw std::invalid_argument("systole_limit_bracket requires n >= 4");
  SeriesTable table = build_series_table(n);
  LimitBracket b;
  b.n = n;
  b.lower = table.partial_sum();
  b.upper = b.lower + table.remainder;
  b.upper_rigorous = b.lower + table.remainder_rigorous;
  b.terms = std::move(table.terms);
  return b;
}

namespace {

// sum_{j=1}^{k} (2^{j-1} - 1)/j
double mell_exponent(std::uint64_t k) {
  double total = 0;
  for (std::uint64_t j = 1; j <= k; ++j) {
    total += (std::ldexp(1.0, static_cast<int>(std::min<std::uint64_t>(j - 1, 4096))) - 1.0) /
             static_cast<double>(j);
  }
  return total;
}

}  // namespace

double mell_limit_pmf(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("mell_limit_pmf requires k >= 1");
  const double before = mell_exponent(k - 1);
  const double step = (std::ldexp(1.0, static_cast<int>(std::min<std::uint64_t>(k - 1, 4096))) - 1.0) /
                      static_cast<double>(k);
  // e^{-a} - e^{-a-s} = e^{-a} (1 - e^{-s})
  return std::exp(-before) * -std::expm1(-step);
}

double riemannian_bound_coefficient(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  double sum = 0;
  for (std::uint64_t k = 2;; ++k) {
    const double term = static_cast<double>(k) * mell_limit_pmf(k);
    sum += term;
    if (term < tolerance) break;
  }
  return sum;
}

std::pair<double, double> riemannian_bounds(double m1, double m2) {
  if (!(m1 > 0) || !(m2 > 0)) throw std::invalid_argument("m1 and m2 must be positive");
  return {m1, m2 * riemannian_bound_coefficient(1e-9)};
}

}  // namespace systole
