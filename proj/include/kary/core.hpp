#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kary {

using Index = int;
using Coeff = std::int64_t;
using IndexTuple = std::vector<Index>;
using Weight = std::vector<std::int64_t>;

struct Term {
  Index index;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse integer vector: strictly increasing indices, nonzero coefficients.
using SparseVector = std::vector<Term>;

/// Sorts `tuple` in place and returns the sign of the sorting permutation,
/// or 0 when two entries coincide.
int sort_with_sign(std::span<Index> tuple);

/// Adds `scale * v` into `acc`, keeping the sparse invariant.
void axpy(SparseVector& acc, Coeff scale, const SparseVector& v);

/// Finite-dimensional k-ary Lie algebra given by integer structure constants
/// on sorted basis tuples. Brackets on unsorted tuples are recovered with the
/// sign of the sorting permutation.
class KaryAlgebra {
 public:
  KaryAlgebra(int arity, int dim, std::vector<std::string> labels = {});

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }

  /// Adds `value` to the bracket of `args` (any order, distinct entries).
  /// Zero results are erased rather than stored.
  void add_bracket(std::span<const Index> args, const SparseVector& value);

  const std::map<IndexTuple, SparseVector>& brackets() const { return brackets_; }

  /// Stored value for a strictly increasing tuple, or nullptr when zero.
  const SparseVector* find(const IndexTuple& sorted) const;

  void set_weights(std::vector<Weight> weights);
  bool has_weights() const { return !weights_.empty(); }
  const std::vector<Weight>& weights() const { return weights_; }
  int weight_rank() const { return weights_.empty() ? 0 : static_cast<int>(weights_.front().size()); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  int arity_;
  int dim_;
  std::vector<std::string> labels_;
  std::map<IndexTuple, SparseVector> brackets_;
  std::vector<Weight> weights_;
  std::string name_;
};

/// The k-bracket of basis elements in arbitrary order.
SparseVector bracket(const KaryAlgebra& alg, std::span<const Index> indices);

/// Bracket with the basis element at `slot` replaced by the vector `v`.
SparseVector bracket_with(const KaryAlgebra& alg, std::span<const Index> indices, std::size_t slot,
                          const SparseVector& v);

/// (2k-1)-tuples (inner k-tuple followed by outer k-1 tuple) whose generalized
/// Jacobi residual is nonzero. Empty means the identity holds.
std::vector<IndexTuple> check_jacobi(const KaryAlgebra& alg);

/// True when every stored bracket maps into basis elements whose weight is the
/// sum of the input weights. Vacuously true without weights.
bool is_weight_additive(const KaryAlgebra& alg);

/// Basis change b_i -> signs[i] * b_i. Leaves every rank invariant.
KaryAlgebra with_basis_signs(const KaryAlgebra& alg, std::span<const int> signs);

/// Subspace of Q^n kept in unique reduced row echelon form.
class Subspace {
 public:
  explicit Subspace(int ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace span(int ambient_dim, std::vector<std::vector<mpq_class>> vectors);
  static Subspace whole(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<mpq_class>>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const std::vector<mpq_class>& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_dim_;
  std::vector<std::vector<mpq_class>> basis_;
  std::vector<int> pivots_;
};

/// C^1 = g, C^{i+1} = [C^i, g, ..., g]; stops at zero or at the first repeat.
std::vector<Subspace> lower_central_series(const KaryAlgebra& alg);

bool is_nilpotent(const KaryAlgebra& alg);

/// Lower central series is exactly [g, C^2, 0] with C^2 nonzero.
bool is_two_step(const KaryAlgebra& alg);

/// Kernel of v -> [v, b_{i2}, ..., b_{ik}] over all (k-1)-subsets of the basis.
Subspace center(const KaryAlgebra& alg);

}  // namespace kary
