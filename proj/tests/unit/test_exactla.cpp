#include <doctest.h>

#include <random>
#include <sstream>

#include "kary/errors.hpp"
#include "kary/rank.hpp"
#include "kary/sparse_matrix.hpp"
#include "oracles.hpp"

using namespace kary;

TEST_CASE("from_columns normalizes entries") {
  const auto m = SparseIntMatrix::from_columns(3, {{{2, 1}, {0, 4}, {2, -1}}, {{1, 5}}});
  CHECK(m.nnz() == 2);
  CHECK(m.at(0, 0) == 4);
  CHECK(m.at(2, 0) == 0);
  CHECK(m.at(1, 1) == 5);
}

TEST_CASE("exact rank agrees with dense rational elimination") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 14)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(0, 14)(rng);
    const double density = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
    const long bound = trial % 3 == 0 ? 1 : (trial % 3 == 1 ? 3 : 1000000);
    const auto m = oracle::random_matrix(rng, rows, cols, density, bound);
    const auto r = rank(m);
    CHECK(r == oracle::rank(oracle::to_dense(m)));
    CHECK(rank(m.transpose()) == r);
    CHECK(kernel_dim(m) == cols - r);
  }
}

TEST_CASE("rank of structured matrices") {
  SUBCASE("low rank products") {
    std::mt19937_64 rng(3);
    for (std::size_t inner = 0; inner <= 6; ++inner) {
      const auto a = oracle::random_matrix(rng, 12, inner, 0.8, 5);
      const auto b = oracle::random_matrix(rng, inner, 12, 0.8, 5);
      const auto p = a * b;
      CHECK(rank(p) <= inner);
      CHECK(rank(p) == oracle::rank(oracle::to_dense(p)));
    }
  }
  SUBCASE("large entries need exact arithmetic") {
    // rows differ by 1 in the last place of a 40-digit entry
    mpz_class big("1000000000000000000000000000000000000001");
    const auto m = SparseIntMatrix::from_columns(2, {{{0, big}, {1, big - 1}}, {{0, big + 1}, {1, big}}});
    CHECK(rank(m) == 2);
    const auto s = SparseIntMatrix::from_columns(2, {{{0, big}, {1, 2 * big}}, {{0, 3 * big}, {1, 6 * big}}});
    CHECK(rank(s) == 1);
  }
  CHECK(rank(SparseIntMatrix(5, 7)) == 0);
  CHECK(rank(SparseIntMatrix(0, 0)) == 0);
}

TEST_CASE("modular rank agrees with exact rank at random large primes") {
  const auto primes = random_primes(3, 42);
  REQUIRE(primes.size() == 3);
  for (auto p : primes) {
    CHECK(p > (1ULL << 30));
    CHECK(p < (1ULL << 31));
    CHECK(is_prime_u32(p));
  }
  CHECK(random_primes(3, 42) == primes);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_matrix(rng, 10, 10, 0.4, 50);
    for (auto p : primes) CHECK(rank_mod_p(m, p) == rank(m));
  }
  // over F_2 the all-ones 2x2 with a 2 on the diagonal degenerates
  const auto m = SparseIntMatrix::from_columns(2, {{{0, 2}, {1, 1}}, {{0, 1}, {1, 2}}});
  CHECK(rank(m) == 2);
  CHECK(rank_mod_p(m, 3) == 1);
}

TEST_CASE("primality test agrees with trial division") {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime_u32(n) == slow(n));
  for (std::uint64_t n = (1ULL << 31) - 200; n < (1ULL << 31); ++n) CHECK(is_prime_u32(n) == slow(n));
  CHECK(is_prime_u32(2147483647ULL));
  CHECK_FALSE(is_prime_u32(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("MatrixMarket round trip") {
  std::mt19937_64 rng(4);
  const auto m = oracle::random_matrix(rng, 9, 6, 0.3, 100);
  std::stringstream io;
  write_matrix_market(io, m);
  CHECK(read_matrix_market(io) == m);
  std::stringstream bad("%%MatrixMarket matrix array real general\n2 2\n");
  CHECK_THROWS_AS(read_matrix_market(bad), InputError);
}

TEST_CASE("submatrix and product") {
  const auto m = SparseIntMatrix::from_columns(3, {{{0, 1}, {2, 2}}, {{1, 3}}, {{0, 4}, {1, 5}, {2, 6}}});
  const std::vector<std::size_t> rows{2, 0};
  const std::vector<std::size_t> cols{2, 0};
  const auto s = m.submatrix(rows, cols);
  CHECK(s.at(0, 0) == 6);
  CHECK(s.at(1, 0) == 4);
  CHECK(s.at(0, 1) == 2);
  CHECK(s.at(1, 1) == 1);
  const auto p = m.transpose() * m;
  CHECK(p.at(0, 0) == 5);
  CHECK(p.at(0, 2) == 16);
  CHECK(p == p.transpose());
}
