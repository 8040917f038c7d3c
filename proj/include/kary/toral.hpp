#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "kary/core.hpp"
#include "kary/homology.hpp"

namespace kary {

/// sum_{i<k} |sum_j (-1)^j C(dim_v, kj+i)| * 2^dim_z
mpz_class refinement_bound(int dim_v, int dim_z, int k);

/// log2 of a positive integer, rendered with 10 significant digits ("3.0" for exact powers).
std::string format_log2(const mpz_class& v);
double log2_of(const mpz_class& v);

struct ToralBoundRecord {
  int dim_v = 0;
  int dim_z = 0;
  int k = 0;
  mpz_class bound;
  double log2 = 0;
  std::string log2_text;
};

struct ToralTable {
  int n_max = 0;
  std::vector<int> ks;
  std::vector<ToralBoundRecord> records;  // row-major: n outer, k inner

  const ToralBoundRecord& at(int n, int k) const;
};

/// refinement_bound(n, 0, k) for n in 1..n_max (the z-free factor).
ToralTable toral_table(int n_max, const std::vector<int>& ks);

std::string to_csv(const ToralTable& table);
std::string to_text(const ToralTable& table);
nlohmann::json to_json(const ToralTable& table);

struct ToralReport {
  std::string algebra;
  int arity = 0;
  int dim = 0;
  int center_dim = 0;
  bool two_step = false;
  mpz_class total;  // layout convention, including H^0
  mpz_class power_of_two;
  std::optional<mpz_class> refined_bound;
  std::optional<mpz_class> exterior_total;  // set when d^2 = 0 on every degree
  std::vector<Comparison> comparisons;

  bool all_pass() const;
};

/// Throws InputError for a non-nilpotent algebra.
ToralReport verify_toral(const KaryAlgebra& alg, const EngineOptions& options = {});
/// Same, reusing an already computed layout total.
ToralReport verify_toral(const KaryAlgebra& alg, const mpz_class& layout_total, const EngineOptions& options = {});

nlohmann::json to_json(const ToralReport& report);

}  // namespace kary
