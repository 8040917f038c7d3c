#include <doctest.h>

#include "kary/combinatorics.hpp"
#include "kary/errors.hpp"
#include "kary/families.hpp"
#include "kary/homology.hpp"
#include "kary/schur.hpp"
#include "oracles.hpp"

using namespace kary;

namespace {

std::vector<Partition> partitions_of(int size, int max_part) {
  if (size == 0) return {{}};
  std::vector<Partition> out;
  for (int p = std::min(size, max_part); p >= 1; --p)
    for (auto rest : partitions_of(size - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  return out;
}

}  // namespace

TEST_CASE("partition helpers") {
  CHECK(is_partition({3, 2, 2}));
  CHECK(is_partition({}));
  CHECK_FALSE(is_partition({2, 3}));
  CHECK_FALSE(is_partition({2, 0}));
  CHECK(dominant_of({0, 2, 1, 2}) == Partition{2, 2, 1});
  CHECK(partition_to_string({2, 1, 1}) == "(2,1,1)");
}

TEST_CASE("hook-content dimension against tableau enumeration") {
  CHECK(schur_dim({2, 2, 1}, 3) == 3);
  CHECK(schur_dim({3, 2, 1, 1}, 4) == 20);
  CHECK(schur_dim({2, 1, 1, 1}, 4) == 4);
  CHECK(schur_dim({}, 3) == 1);
  for (int n = 1; n <= 4; ++n)
    for (int size = 0; size <= 6; ++size)
      for (const auto& lambda : partitions_of(size, size)) {
        INFO(partition_to_string(lambda), " n=", n);
        CHECK(schur_dim(lambda, n) == oracle::ssyt_count(lambda, n));
        CHECK((schur_dim(lambda, n) == 0) == (static_cast<int>(lambda.size()) > n));
      }
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) CHECK(schur_dim(Partition(static_cast<std::size_t>(k), 1), n) == binomial(n, k));
}

TEST_CASE("Kostka numbers and characters against tableau enumeration") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size, size)) {
      const int n = 4;
      const auto ref = oracle::ssyt_weights(lambda, n);
      const auto table = schur_character(lambda, n);
      std::map<Weight, std::int64_t> got(table.mult.begin(), table.mult.end());
      CHECK(got == ref);
      for (const auto& [w, m] : ref) CHECK(kostka(lambda, std::vector<int>(w.begin(), w.end())) == m);
    }
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({2, 1}, {3}) == 0);
}

TEST_CASE("peeling recovers decompositions and round-trips") {
  SUBCASE("exterior square of C^3") {
    KaryAlgebra v = abelian(2, 3);
    v.set_weights({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto t = character_by_weights(v, 2);
    CHECK(t.mult.size() == 3);
    CHECK(t.mult.at({1, 1, 0}) == 1);
    CHECK(decompose_character(t).partitions() == std::vector<Partition>{{1, 1}});
  }
  const std::vector<std::pair<Partition, std::int64_t>> parts{{{2, 1}, 2}, {{3}, 1}, {{1, 1, 1}, 1}};
  SchurDecomposition d;
  d.n = 3;
  for (const auto& [p, m] : parts) d.summands.push_back({p, m});
  const auto table = expand(d);
  const auto back = decompose_character(table);
  CHECK(back.partitions() == d.partitions());
  CHECK(expand(back) == table);
  CHECK(back.dimension() == 2 * 8 + 10 + 1);
}

TEST_CASE("malformed characters are rejected") {
  CharacterTable asym;
  asym.n = 2;
  asym.mult[{1, 0}] = 1;
  CHECK_THROWS_AS(decompose_character(asym), ConsistencyError);
  CharacterTable negative;
  negative.n = 2;
  negative.mult[{2, 0}] = 1;
  negative.mult[{0, 2}] = 1;  // S_2 without its (1,1) weight
  CHECK_THROWS_AS(decompose_character(negative), ConsistencyError);
}

TEST_CASE("homology characters of free 2-step algebras") {
  const auto c3 = character_by_weights(free_two_step(3, 3), 3);
  CHECK(c3.total() == 3);
  CHECK(c3.asymmetric_weights().empty());
  const auto d3 = decompose_character(c3);
  CHECK(d3.partitions() == std::vector<Partition>{{2, 2, 1}});

  const auto c4 = character_by_weights(free_two_step(3, 4), 3);
  CHECK(c4.total() == 44);
  const auto d4 = decompose_character(c4);
  CHECK(d4.partitions() == std::vector<Partition>{{2, 1, 1, 1}, {2, 2, 1}, {3, 2, 1, 1}});
  CHECK(d4.dimension() == 44);
  CHECK(expand(d4) == c4);

  // character totals equal the Betti numbers at every degree
  const auto alg = free_two_step(2, 4);
  const auto report = betti_all(alg);
  for (const auto& rec : report.degrees) {
    const auto ch = character_by_weights(alg, rec.degree);
    CHECK(static_cast<std::uint64_t>(ch.total()) == rec.betti);
    CHECK(decompose_character(ch).dimension() == rec.betti);
  }
  CHECK_THROWS_AS(character_by_weights(heisenberg(2, 1), 1), InputError);
}

TEST_CASE("second homology contains the 2^j 1^(2k-2j-1) family") {
  CHECK(second_homology_summands(3) == std::vector<Partition>{{2, 1, 1, 1}, {2, 2, 1}});
  const auto d = decompose_character(character_by_weights(free_two_step(3, 4), 3)).partitions();
  for (const auto& p : second_homology_summands(3)) CHECK(std::find(d.begin(), d.end(), p) != d.end());
  for (const auto& p : second_homology_summands_alt(3)) CHECK(partition_size(p) == 7);
  const auto d2 = decompose_character(character_by_weights(free_two_step(2, 4), 2)).partitions();
  CHECK(d2 == std::vector<Partition>{{2, 1}});
}

TEST_CASE("closed-form bounds") {
  CHECK(lower_bound_betti(4, 3, 2) == 20);
  CHECK(lower_bound_betti(3, 3, 2) == 0);
  CHECK(lower_bound_betti(4, 2, 2) == 20);
  CHECK(second_homology_bound(4, 3) == 24);
  CHECK(second_homology_bound(3, 3) == 3);
  CHECK(second_homology_bound(2, 2) == 2);
  CHECK_THROWS_AS(lower_bound_betti(2, 3, 2), InputError);
  const double ratio = asymptotic_bound(30, 3, 2) / lower_bound_betti(30, 3, 2).get_d();
  CHECK(ratio > 1.0 / 3);
  CHECK(ratio < 3);
  for (int k = 2; k <= 5; ++k) CHECK(asymptotic_bound(2 * k + 4, k, 2) > 0);
}

TEST_CASE("Pieri dimension identity") {
  CHECK(pieri_dimension_check(3, 1));
  CHECK(pieri_dimension_check(4, 2));
  for (int x = 1; x <= 12; ++x)
    for (int a = 1; a <= x; ++a) CHECK(pieri_dimension_check(x, a));
}

TEST_CASE("representation stability") {
  const auto r = stability_check(3, 3, {3, 4, 5});
  CHECK(r.stable());
  CHECK(*r.stable_from == 4);
  CHECK(r.decompositions[0].partitions() == std::vector<Partition>{{2, 2, 1}});
  const auto h1 = stability_check(2, 1, {2, 3, 4});
  for (const auto& d : h1.decompositions) CHECK(d.partitions() == std::vector<Partition>{{1}});
  CHECK(*h1.stable_from == 2);
  CHECK_FALSE(stability_check(2, 1, {3}).stable());
  CHECK(to_json(r)["runs"].size() == 3);
}

TEST_CASE("k = 2 homology is multiplicity free in self-conjugate partitions") {
  auto conjugate = [](const Partition& p) {
    Partition c;
    for (int col = 1; !p.empty() && col <= p.front(); ++col) {
      int len = 0;
      for (int row : p) len += row >= col ? 1 : 0;
      c.push_back(len);
    }
    return c;
  };
  const auto alg = free_two_step(2, 4);
  std::size_t summands = 0;
  for (int t = 0; t <= alg.dim(); ++t) {
    const auto d = decompose_character(character_by_weights(alg, t));
    for (const auto& s : d.summands) {
      INFO("H^", t, " ", partition_to_string(s.partition));
      CHECK(s.multiplicity == 1);
      CHECK(conjugate(s.partition) == s.partition);
      ++summands;
    }
  }
  CHECK(summands > 0);
}
