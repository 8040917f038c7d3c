#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "kary/core.hpp"
#include "kary/homology.hpp"

namespace kary {

/// Weakly decreasing positive parts; the empty partition is allowed.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
std::string partition_to_string(const Partition& p);
/// Weight vector sorted decreasingly with zero entries dropped.
Partition dominant_of(const Weight& w);

/// dim S_lambda(C^n) by the hook-content formula; 0 when lambda has more than n rows.
mpz_class schur_dim(const Partition& lambda, int n);

/// Number of semistandard tableaux of shape lambda and content mu (any composition).
mpz_class kostka(const Partition& lambda, const std::vector<int>& mu);

/// Weight -> multiplicity for a polynomial GL_n character.
struct CharacterTable {
  int n = 0;
  std::map<Weight, std::int64_t> mult;

  std::int64_t total() const;
  /// Weights whose multiplicity differs from that of some coordinate permutation.
  std::vector<Weight> asymmetric_weights() const;
  bool operator==(const CharacterTable&) const = default;
};

/// Full character of S_lambda(C^n).
CharacterTable schur_character(const Partition& lambda, int n);

/// Per-weight Betti numbers at chain degree t. Needs a weight-additive grading.
CharacterTable character_by_weights(const KaryAlgebra& alg, int t, const EngineOptions& options = {});

struct SchurSummand {
  Partition partition;
  std::int64_t multiplicity = 0;
};

struct SchurDecomposition {
  int n = 0;
  std::vector<SchurSummand> summands;  // peeling order: lexicographically decreasing

  mpz_class dimension() const;
  std::vector<Partition> partitions() const;  // sorted, with multiplicity
};

/// Peels the greatest dominant weight repeatedly. Throws ConsistencyError when the
/// table is not symmetric or a multiplicity would go negative.
SchurDecomposition decompose_character(const CharacterTable& table);
CharacterTable expand(const SchurDecomposition& d);

nlohmann::json to_json(const SchurDecomposition& d);
std::string to_text(const SchurDecomposition& d);

/// C(n,k)C(x,a) - C(n,2k)C(x,a-1) - C(x,a+1), a = (i-1)(k-1), x = C(n,k).
mpz_class lower_bound_betti(int n, int k, int i);
/// C(n,k)C(n,k-1) - C(n,2k-1).
mpz_class second_homology_bound(int n, int k);
/// Leading-order estimate of lower_bound_betti for large n.
double asymptotic_bound(int n, int k, int i);
/// x C(x,a) == C(x,a+1) + dim S_{2 1^{a-1}}(C^x).
bool pieri_dimension_check(int x, int alpha);

/// Partitions 2^j 1^{2k-2j-1}, j = 1..k-1, expected inside H^k of the free 2-step algebra.
std::vector<Partition> second_homology_summands(int k);
/// The same family with exponent 2k-2j+1, kept for comparison; these have the wrong size.
std::vector<Partition> second_homology_summands_alt(int k);

struct StabilityReport {
  int k = 0;
  int t = 0;
  std::vector<int> ns;
  std::vector<SchurDecomposition> decompositions;
  std::optional<int> stable_from;  // smallest n after which the partition multiset is constant
  bool stable() const { return stable_from.has_value(); }
};
StabilityReport stability_check(int k, int t, const std::vector<int>& ns, const EngineOptions& options = {});

nlohmann::json to_json(const StabilityReport& r);

}  // namespace kary
