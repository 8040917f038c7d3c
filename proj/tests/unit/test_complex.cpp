#include <doctest.h>

#include <random>

#include "kary/combinatorics.hpp"
#include "kary/complex.hpp"
#include "kary/errors.hpp"
#include "kary/families.hpp"
#include "kary/rank.hpp"
#include "oracles.hpp"

using namespace kary;

TEST_CASE("wedge basis is lexicographic and lex_rank inverts it") {
  for (int dim = 0; dim <= 7; ++dim)
    for (int t = 0; t <= dim; ++t) {
      const auto basis = wedge_basis(dim, t);
      const auto ref = oracle::subsets(dim, t);
      REQUIRE(basis.size() == ref.size());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].indices() == ref[i]);
        CHECK(basis[i].degree() == t);
        CHECK(lex_rank(basis[i], dim) == i);
      }
    }
  CHECK(lex_rank(WedgeMonomial::from_indices({60, 63}), 64) == binomial_u64(64, 2) - 4);
}

TEST_CASE("shuffle signs agree with inversion counts") {
  for (int t = 0; t <= 7; ++t)
    for (int k = 0; k <= t; ++k) {
      const ShuffleSet s(t, k);
      CHECK(s.size() == binomial_u64(t, k));
      for (const auto& sh : s.shuffles()) {
        std::vector<int> perm = sh.selected;
        perm.insert(perm.end(), sh.rest.begin(), sh.rest.end());
        CHECK(sh.sign == oracle::inversion_sign(perm));
        CHECK(ShuffleSet::sign_of(sh.selected) == sh.sign);
      }
    }
}

TEST_CASE("chain layout degrees") {
  CHECK(ChainLayout(heisenberg(3, 2)).degrees == std::vector<int>{0, 1, 3, 5, 7});
  CHECK(ChainLayout(heisenberg(2, 1)).degrees == std::vector<int>{0, 1, 2, 3});
  CHECK(ChainLayout(heisenberg(5, 1)).degrees == std::vector<int>{0, 1, 5});
  const ChainLayout l(free_three_step_small(4));
  CHECK(l.contains(7));
  CHECK_FALSE(l.contains(3));
  CHECK(l.position(7) == 3);
}

TEST_CASE("differential matches the permutation-enumeration oracle") {
  std::mt19937_64 rng(77);
  for (int draw = 0; draw < 20; ++draw) {
    const auto alg = oracle::random_family(rng);
    INFO(alg.name());
    for (int t = 0; t <= alg.dim(); ++t) {
      const auto d = differential_matrix(alg, t);
      const int target = t - alg.arity() + 1;
      CHECK(d.rows() == (target < 0 ? 0 : binomial_u64(alg.dim(), target)));
      CHECK(d.cols() == binomial_u64(alg.dim(), t));
      CHECK(oracle::to_dense(d) == oracle::differential(alg, t));
    }
  }
}

TEST_CASE("d^2 = 0 on the layout for every family, random draws") {
  std::mt19937_64 rng(99);
  for (int draw = 0; draw < 20; ++draw) {
    const auto alg = oracle::random_family(rng);
    INFO(alg.name());
    CHECK(verify_d_squared(alg).empty());
    const int k = alg.arity();
    for (int t = 2 * k - 1; t <= alg.dim(); t += k - 1)
      CHECK((differential_matrix(alg, t - k + 1) * differential_matrix(alg, t)).is_zero());
  }
}

TEST_CASE("off-layout degrees may break d^2 = 0 for odd arity") {
  // The two-bracket contraction cancels only for the layout degrees.
  KaryAlgebra f = free_two_step(3, 4);
  CHECK(verify_d_squared(f, DegreeScope::Layout).empty());
  const auto all = verify_d_squared(f, DegreeScope::All);
  for (int t : all) CHECK_FALSE(ChainLayout(f).contains(t));
  CHECK(verify_d_squared(heisenberg(2, 2), DegreeScope::All).empty());
}

TEST_CASE("weight blocks partition the differential") {
  for (const auto& alg : {free_two_step(2, 4), free_two_step(3, 4), free_three_step_small(3)}) {
    const int k = alg.arity();
    for (int t = k; t <= alg.dim(); ++t) {
      const auto full = differential_matrix(alg, t);
      const auto blocks = weight_blocks(alg, t);
      std::size_t cols = 0;
      std::size_t nnz = 0;
      std::size_t block_rank = 0;
      for (const auto& b : blocks) {
        cols += b.cols.size();
        nnz += b.matrix.nnz();
        block_rank += rank(b.matrix);
        for (std::size_t c : b.cols) CHECK(monomial_weight(alg, wedge_basis(alg.dim(), t)[c]) == b.weight);
      }
      CHECK(cols == full.cols());
      CHECK(nnz == full.nnz());
      CHECK(block_rank == rank(full));
    }
  }
  CHECK_THROWS_AS(weight_blocks(heisenberg(2, 1), 2), InputError);
}
