#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "kary/complex.hpp"
#include "kary/core.hpp"

namespace kary {

struct EngineOptions {
  /// Largest chain space (number of wedge monomials) any computation may touch.
  std::uint64_t size_cap = 1'000'000;
  unsigned threads = 1;
  /// Rank d_t block by block when the algebra carries a weight grading.
  bool use_weight_blocks = true;
};

/// Rank of d_t, overall and per weight block when graded.
struct DegreeRank {
  int degree = 0;
  std::size_t rank = 0;
  std::map<Weight, std::size_t> block_rank;  // graded algebras only
  std::map<Weight, std::size_t> block_cols;
};

/// Ranks of d_t for each requested degree; degrees outside [k, dim] have rank 0.
/// Independent degrees and weight blocks are ranked concurrently.
std::map<int, DegreeRank> differential_ranks(const KaryAlgebra& alg, const std::vector<int>& degrees,
                                             const EngineOptions& options = {});

struct DegreeRecord {
  int degree = 0;
  std::uint64_t chain_dim = 0;
  std::uint64_t rank_out = 0;  // rank of d_t
  std::uint64_t kernel = 0;
  std::uint64_t image = 0;  // rank of the incoming d_{t+k-1}
  std::uint64_t betti = 0;
  std::optional<mpz_class> formula;
  std::optional<bool> match;
};

struct Comparison {
  std::string name;
  mpz_class expected;
  mpz_class actual;
  bool asserted = true;
  bool pass = true;
  std::string note;
};

Comparison compare(std::string name, const mpz_class& expected, const mpz_class& actual, bool asserted = true,
                   std::string note = {});
/// Assertion that `actual >= bound`.
Comparison compare_at_least(std::string name, const mpz_class& bound, const mpz_class& actual, bool asserted = true,
                            std::string note = {});

struct HomologyReport {
  std::string algebra;
  int arity = 0;
  int dim = 0;
  std::vector<DegreeRecord> degrees;  // layout degrees, starting with 0
  mpz_class total = 0;
  mpz_class euler_chain = 0;
  mpz_class euler_betti = 0;
  std::vector<Comparison> comparisons;

  const DegreeRecord& at(int degree) const;
  std::uint64_t betti(int degree) const { return at(degree).betti; }
  bool euler_holds() const { return euler_chain == euler_betti; }
  bool all_pass() const;
};

/// kernel_dim(d_t) - rank(d_{t+k-1}) for a layout degree t (H^0 = 1).
std::uint64_t betti(const KaryAlgebra& alg, int t, const EngineOptions& options = {});

/// Betti numbers at every layout degree, totals and the Euler characteristic.
HomologyReport betti_all(const KaryAlgebra& alg, const EngineOptions& options = {});

/// Homology over every exterior degree 0..dim (not only the layout), as used by
/// the refinement bound for 2-step algebras. `defined` is false when d^2 != 0
/// on some pair of non-layout degrees, in which case the numbers are not homology.
struct ExteriorReport {
  std::vector<std::uint64_t> betti;  // index = degree
  mpz_class total = 0;
  bool defined = true;
  std::vector<int> d_squared_failures;
};
ExteriorReport exterior_homology(const KaryAlgebra& alg, const EngineOptions& options = {});

// ---- closed forms and validators -------------------------------------------

/// C(km, i(k-1)+1) - C(km, (i-1)(k-1)).
mpz_class heisenberg_betti_formula(int k, int m, int i);
/// C(km, (i-1)(k-1)).
mpz_class heisenberg_image_formula(int k, int m, int i);
/// Largest i for which the Heisenberg formula is claimed: (floor((km+1)/2) - 1)/(k-1).
int heisenberg_valid_max_i(int k, int m);

HomologyReport verify_heisenberg(int k, int m, const EngineOptions& options = {});

/// Matrix of theta_j : Lambda^j a -> Lambda^{j-k+2} a for an algebra with a
/// codimension-one abelian ideal a and complement z.
struct ThetaMap {
  int degree = 0;
  Index z = 0;
  std::vector<Index> ideal_basis;  // global indices spanning a, increasing
  SparseIntMatrix matrix;
};

/// Basis index z such that every bracket involves z and never outputs z.
std::optional<Index> acj_shape(const KaryAlgebra& alg);

ThetaMap theta_matrix(const KaryAlgebra& alg, int j);

struct ThetaHomology {
  int alpha = 0;
  mpz_class chain_term;       // C(dim a, alpha) - C(dim a, alpha+k-2)
  std::uint64_t kernel_low = 0;   // dim ker theta_{alpha-1}
  std::uint64_t kernel_high = 0;  // dim ker theta_{alpha+k-2}
  mpz_class value;
};
ThetaHomology acj_homology_via_theta(const KaryAlgebra& alg, int alpha);

/// C(km+1, k) - m C(km-k, k-1) - C(m+1, 2).
mpz_class acj_second_homology_formula(int k, int m);
/// k = 2 ACJ Betti numbers C(m+1, floor((i+1)/2)) C(m, floor(i/2)).
mpz_class acj_k2_betti_formula(int m, int i);

HomologyReport verify_acj(int k, int m, const EngineOptions& options = {});

/// k, C(2k+1,k) - (3k+2), (2k+1)(k-1) for k >= 4; (3, 24, 14, 1) for k = 3.
std::vector<mpz_class> free3_betti_formula(int k);

HomologyReport verify_free3(int k, const EngineOptions& options = {});

struct PropertyMReport {
  std::string algebra;
  int truncation = 0;
  int current_dim = 0;
  bool current_two_step = false;
  int current_center_dim = 0;
  mpz_class layout_total_alg;
  mpz_class layout_total_current;
  mpz_class layout_power;  // layout_total_alg^j
  mpz_class exterior_total_alg;
  mpz_class exterior_total_current;
  mpz_class exterior_power;
  bool exterior_defined = true;
  mpz_class dimension_bound;  // refinement_bound(dim, 0, k)
  std::optional<mpz_class> center_bound;  // refinement_bound(dim - z, z, k) when 2-step
  bool layout_equal = false;
  bool exterior_equal = false;
};
PropertyMReport property_m_check(const KaryAlgebra& alg, int j, const EngineOptions& options = {});

// ---- serialization -----------------------------------------------------------

nlohmann::json big_to_json(const mpz_class& v);
nlohmann::json to_json(const Comparison& c);
nlohmann::json to_json(const HomologyReport& report);
nlohmann::json to_json(const PropertyMReport& report);
std::string to_csv(const HomologyReport& report);
std::string to_text(const HomologyReport& report);

inline constexpr const char* kReportSchema = "karyhom.report/1";

}  // namespace kary
