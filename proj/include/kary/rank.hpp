#pragma once

#include <cstdint>
#include <vector>

#include "kary/sparse_matrix.hpp"

namespace kary {

/// Rank over Q by fraction-free sparse elimination with Markowitz pivoting
/// (lowest (r-1)(c-1) cost, ties by smallest row then column). Deterministic.
std::size_t rank(const SparseIntMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const SparseIntMatrix& m);

/// Rank over Z/p for a prime p < 2^32. Never exceeds rank over Q.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

bool is_prime_u32(std::uint64_t n);

/// `count` distinct primes drawn uniformly from (2^30, 2^31) using `seed`.
std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed);

}  // namespace kary
