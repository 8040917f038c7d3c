#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kary/core.hpp"
#include "kary/sparse_matrix.hpp"

namespace kary {

using Mask = std::uint64_t;

/// Largest algebra dimension the wedge machinery supports (bitmask monomials).
inline constexpr int kMaxWedgeDim = 64;

/// Strictly increasing index tuple, stored as a bitmask.
class WedgeMonomial {
 public:
  WedgeMonomial() = default;
  explicit WedgeMonomial(Mask mask) : mask_(mask) {}
  static WedgeMonomial from_indices(const std::vector<int>& indices);

  Mask mask() const { return mask_; }
  int degree() const;
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  std::vector<int> indices() const;

  friend auto operator<=>(const WedgeMonomial&, const WedgeMonomial&) = default;

 private:
  Mask mask_ = 0;
};

/// All C(dim, t) monomials of degree t in lexicographic order of index tuples.
std::vector<WedgeMonomial> wedge_basis(int dim, int t);

/// Position of `m` in wedge_basis(dim, m.degree()).
std::size_t lex_rank(const WedgeMonomial& m, int dim);

/// Shuffles sigma of {0..t-1} with sigma(0)<...<sigma(k-1) and
/// sigma(k)<...<sigma(t-1), identified by the selected positions.
class ShuffleSet {
 public:
  struct Shuffle {
    std::vector<int> selected;  // sigma(0..k-1)
    std::vector<int> rest;      // sigma(k..t-1)
    int sign;
  };

  ShuffleSet(int t, int k);
  const std::vector<Shuffle>& shuffles() const { return shuffles_; }
  std::size_t size() const { return shuffles_.size(); }

  /// Sign of the shuffle selecting the increasing positions `selected`.
  static int sign_of(const std::vector<int>& selected);

 private:
  std::vector<Shuffle> shuffles_;
};

/// Degrees carrying the complex: 0, then t_i = i(k-1)+1 <= dim.
struct ChainLayout {
  int arity = 2;
  int dim = 0;
  std::vector<int> degrees;

  explicit ChainLayout(const KaryAlgebra& alg);
  bool contains(int t) const;
  /// Position of t in `degrees` (0 for the augmentation degree).
  int position(int t) const;
};

/// Matrix of d_t : Lambda^t g -> Lambda^{t-k+1} g in lexicographic bases.
/// For t < k the map is zero and the matrix has C(dim, t-k+1) rows (zero if negative).
SparseIntMatrix differential_matrix(const KaryAlgebra& alg, int t);

enum class DegreeScope { Layout, All };

/// Degrees t for which d_{t-k+1} d_t != 0, over composable pairs with t-k+1 >= k.
std::vector<int> verify_d_squared(const KaryAlgebra& alg, DegreeScope scope = DegreeScope::Layout);

Weight monomial_weight(const KaryAlgebra& alg, const WedgeMonomial& m);

/// One weight block of d_t: column and row monomials of equal total weight.
struct WeightBlock {
  Weight weight;
  std::vector<std::size_t> cols;  // indices into wedge_basis(dim, t)
  std::vector<std::size_t> rows;  // indices into wedge_basis(dim, t-k+1)
  SparseIntMatrix matrix;
};

/// Blocks keyed by weight (ordered), covering every column of degree t.
/// Requires weight-additive weights.
std::vector<WeightBlock> weight_blocks(const KaryAlgebra& alg, int t);

}  // namespace kary
