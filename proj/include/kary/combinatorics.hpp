#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace kary {

/// Binomial coefficient; zero when k < 0 or k > n (and for negative n).
mpz_class binomial(long n, long k);

/// Word-size binomial for table sizes; throws on overflow.
std::uint64_t binomial_u64(int n, int k);

/// Advances `comb` (strictly increasing, entries < n) to the next combination
/// in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<int>& comb, int n);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

}  // namespace kary
