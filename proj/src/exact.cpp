#include "systole/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace systole {

namespace {

// (6N-1)(6N-3)...(6N-2k+1)
BigInt odd_falling(std::uint32_t n, std::uint32_t k) {
  BigInt out = 1;
  for (std::uint32_t i = 0; i < k; ++i) out *= 6ll * n - 2ll * i - 1;
  return out;
}

BigInt pow_int(unsigned base, unsigned exp) {
  BigInt out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

BigInt omega_count(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("omega_count requires N >= 1");
  return odd_falling(n, 3 * n);
}

BigInt ordered_omega_count(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("ordered_omega_count requires N >= 1");
  return factorial(6 * n) / pow_int(2, 3 * n);
}

Rational expected_xk(std::uint32_t n, std::uint32_t k) {
  if (k < 1 || k > 2 * n) throw std::invalid_argument("expected_xk requires 1 <= k <= 2N");
  Rational lead(pow_int(6, k), BigInt(2 * k));
  return lead * Rational(falling_factorial(2ll * n, k), odd_falling(n, k));
}

Rational expected_z_class(std::uint32_t n, const WordClass& cls) {
  const auto len = static_cast<std::uint32_t>(cls.length);
  if (len < 1 || len > 2 * n) throw std::invalid_argument("expected_z_class requires |w| <= 2N");
  return cls.poisson_mean * Rational(pow_int(3, len) * falling_factorial(2ll * n, len), odd_falling(n, len));
}

Rational omega_nk_count(std::uint32_t n, std::uint32_t k) {
  if (n < 1 || k > 2 * n) throw std::invalid_argument("omega_nk_count requires 0 <= k <= 2N");
  return Rational(pow_int(6, k) * binomial(2ll * n, k) * factorial(6 * n - 2 * k), pow_int(2, 3 * n));
}

Rational dnk_count(std::uint32_t n, std::uint32_t k) {
  if (n < 1 || k < 2) throw std::invalid_argument("dnk_count requires N >= 1 and k >= 2");
  const long long N = n, K = k;
  BigInt total = 0;
  for (long long L = 1; L <= N - 1; ++L) {
    for (long long l = 1; l <= K - 1; ++l) {
      BigInt term = binomial(2 * N, K) * binomial(K, l) * binomial(2 * N - K, 2 * L - l) *
                    binomial(3 * N - K, 3 * L - l);
      if (term == 0) continue;
      term *= factorial(static_cast<unsigned>(6 * L - 2 * l));
      term *= factorial(static_cast<unsigned>(6 * (N - L) - 2 * (K - l)));
      total += term;
    }
  }
  return Rational(pow_int(6, k) * total, pow_int(2, 3 * n + 1));
}

Rational dnk_probability(std::uint32_t n, std::uint32_t k) {
  if (n < 1 || k < 2) throw std::invalid_argument("dnk_probability requires N >= 1 and k >= 2");
  if (2 * k > 6 * n) return 0;
  const long long N = n, K = k;
  Rational sum = 0;
  for (long long l = 1; l <= K - 1; ++l) {
    const long long lo = (l + 1) / 2;
    const long long hi = N - (K - l + 1) / 2;
    for (long long L = lo; L <= hi; ++L) {
      const BigInt num = binomial(2 * N, K) * binomial(K, l) * binomial(2 * N - K, 2 * L - l) *
                         binomial(3 * N - K, 3 * L - l);
      if (num == 0) continue;
      sum += Rational(num, binomial(6 * N - 2 * K, 6 * L - 2 * l));
    }
  }
  return Rational(pow_int(6, k), BigInt(2)) * sum / Rational(falling_factorial(6 * N, 2 * k));
}

Rational gnk_bound_exact(std::uint32_t n, std::uint32_t k) {
  if (n < 1 || k < 2 || k > 3 * n) throw std::invalid_argument("gnk bound requires 2 <= k <= 3N");
  const Rational factor(pow_int(2, k) * factorial(k - 1) * falling_factorial(3ll * n, k));
  return factor * dnk_count(n, k) / Rational(ordered_omega_count(n));
}

namespace {

long double log_binomial(long double n, long double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

double gnk_bound_log_space(std::uint32_t n, std::uint32_t k) {
  if (n < 1 || k < 2 || k > 3 * n) throw std::invalid_argument("gnk bound requires 2 <= k <= 3N");
  if (2 * k > 6 * n) return 0;
  const long double N = n, K = k;
  // log of 2^k (k-1)! (3N)_k 6^k / 2 / (6N)_{2k}
  const long double head = K * std::log(2.0L) + std::lgamma(K) + std::lgamma(3 * N + 1) -
                           std::lgamma(3 * N - K + 1) + K * std::log(6.0L) - std::log(2.0L) -
                           (std::lgamma(6 * N + 1) - std::lgamma(6 * N - 2 * K + 1));
  long double sum = 0;
  for (std::uint32_t l = 1; l + 1 <= k; ++l) {
    const long long lo = (l + 1) / 2;
    const long long hi = static_cast<long long>(n) - (k - l + 1) / 2;
    auto term = [&](long long L) -> long double {
      const long double a = 2.0L * L - l, b = 3.0L * L - l;
      if (a < 0 || a > 2 * N - K || b < 0 || b > 3 * N - K) return 0;
      return std::exp(log_binomial(2 * N, K) + log_binomial(K, l) + log_binomial(2 * N - K, a) +
                      log_binomial(3 * N - K, b) - log_binomial(6 * N - 2 * K, 6.0L * L - 2 * l) + head);
    };
    // Terms are largest at both ends of the L range and negligible inside.
    long long left = lo, right = hi;
    for (; left <= right; ++left) {
      const long double t = term(left);
      sum += t;
      if (left > lo + 2 && t < 1e-22L * sum) break;
    }
    for (; right > left; --right) {
      const long double t = term(right);
      sum += t;
      if (right < hi - 2 && t < 1e-22L * sum) break;
    }
  }
  return static_cast<double>(sum);
}

double gnk_probability_upper(std::uint32_t n, std::uint32_t k) {
  if (n > kExactBoundLimit) return std::min(1.0, gnk_bound_log_space(n, k));
  const Rational bound = gnk_bound_exact(n, k);
  return bound >= 1 ? 1.0 : to_double(bound);
}

namespace {

struct PairingWalker {
  std::uint32_t n;
  const std::function<void(const Pairing&)>& visit;
  std::uint64_t slice;
  std::uint64_t slice_count;
  std::vector<HalfEdge> mate;
  std::uint64_t ordinal = 0;

  static constexpr HalfEdge kFree = UINT32_MAX;

  void recurse(HalfEdge from) {
    while (from < mate.size() && mate[from] != kFree) ++from;
    if (from == mate.size()) {
      if (ordinal++ % slice_count == slice) visit(Pairing(n, mate));
      return;
    }
    for (HalfEdge other = from + 1; other < mate.size(); ++other) {
      if (mate[other] != kFree) continue;
      mate[from] = other;
      mate[other] = from;
      recurse(from + 1);
      mate[from] = kFree;
      mate[other] = kFree;
    }
  }
};

}  // namespace

void enumerate_all_pairings(std::uint32_t n, const std::function<void(const Pairing&)>& visit,
                            std::uint64_t slice, std::uint64_t slice_count) {
  if (n < 1) throw std::invalid_argument("enumerate_all_pairings requires N >= 1");
  if (n > kMaxEnumerableN) {
    throw std::invalid_argument("exhaustive enumeration limited to N <= " + std::to_string(kMaxEnumerableN));
  }
  if (slice_count == 0 || slice >= slice_count) throw std::invalid_argument("bad enumeration slice");
  PairingWalker walker{n, visit, slice, slice_count, std::vector<HalfEdge>(6 * n, PairingWalker::kFree)};
  walker.recurse(0);
}

}  // namespace systole
