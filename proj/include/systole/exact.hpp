#pragma once

// Closed-form counts and expectations over the uniform pairing space, in
// exact rational arithmetic, and exhaustive enumeration for N <= 3.

#include <cstdint>
#include <functional>

#include "systole/bigint.hpp"
#include "systole/ribbon_graph.hpp"
#include "systole/word.hpp"

namespace systole {

// (6N-1)(6N-3)...3.1
BigInt omega_count(std::uint32_t n);

// |Omega_N^o| = (6N)! / 2^{3N}
BigInt ordered_omega_count(std::uint32_t n);

// E[X_{N,k}] = 6^k/(2k) * 2N(2N-1)...(2N-k+1) / ((6N-1)(6N-3)...(6N-2k+1)).
// Throws unless 1 <= k <= 2N.
Rational expected_xk(std::uint32_t n, std::uint32_t k);

// E[Z_{N,[w]}] = |[w]|/(2|w|) 3^{|w|} 2N...(2N-|w|+1) / ((6N-1)...(6N-2|w|+1)).
Rational expected_z_class(std::uint32_t n, const WordClass& cls);

// |Omega_{N,k}^o| = 6^k C(2N,k) (6N-2k)! / 2^{3N}; 0 <= k <= 2N.
Rational omega_nk_count(std::uint32_t n, std::uint32_t k);

// |D_{N,k}^o| as the double sum over component splits (L, l). N >= 1, k >= 2;
// N = 1 gives the empty sum.
Rational dnk_count(std::uint32_t n, std::uint32_t k);

// P[D_{N,k}^o] = |D_{N,k}^o| / |Omega_N^o| via the binomial-ratio form,
// summed only over the nonvanishing range of L.
Rational dnk_probability(std::uint32_t n, std::uint32_t k);

// 2^k (k-1)! (3N)!/(3N-k)! P[D_{N,k}^o], unclamped. 2 <= k <= 3N.
Rational gnk_bound_exact(std::uint32_t n, std::uint32_t k);

// The same bound summed in long double log space; the L-sum is walked in
// from both ends and cut once terms drop below 1e-22 of the running total.
double gnk_bound_log_space(std::uint32_t n, std::uint32_t k);

// Above this N the exact rational is too large to be worth building.
constexpr std::uint32_t kExactBoundLimit = 256;

// min(1, bound): exact for N <= kExactBoundLimit, log space beyond.
double gnk_probability_upper(std::uint32_t n, std::uint32_t k);

constexpr std::uint32_t kMaxEnumerableN = 3;

// Every pairing of Omega_N exactly once: the smallest free label is matched
// with each larger free label in increasing order. Pairings whose ordinal is
// congruent to slice mod slice_count are visited. Throws for N > 3.
void enumerate_all_pairings(std::uint32_t n, const std::function<void(const Pairing&)>& visit,
                            std::uint64_t slice = 0, std::uint64_t slice_count = 1);

}  // namespace systole
