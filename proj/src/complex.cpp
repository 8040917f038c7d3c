#include "kary/complex.hpp"

#include <array>
#include <bit>
#include <numeric>

#include "kary/combinatorics.hpp"
#include "kary/errors.hpp"

namespace kary {

namespace {

const std::array<std::array<std::uint64_t, 65>, 65>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

void require_wedge_dim(const KaryAlgebra& alg) {
  if (alg.dim() > kMaxWedgeDim) throw ResourceError("wedge monomials support dimension at most 64");
}

int parity_below(Mask m, int bit) { return std::popcount(m & ((Mask{1} << bit) - 1)) & 1; }

}  // namespace

WedgeMonomial WedgeMonomial::from_indices(const std::vector<int>& indices) {
  Mask m = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= kMaxWedgeDim) throw InputError("wedge index out of range");
    if (i > 0 && indices[i - 1] >= indices[i]) throw InputError("wedge indices must be strictly increasing");
    m |= Mask{1} << indices[i];
  }
  return WedgeMonomial(m);
}

int WedgeMonomial::degree() const { return std::popcount(mask_); }

std::vector<int> WedgeMonomial::indices() const {
  std::vector<int> out;
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<WedgeMonomial> wedge_basis(int dim, int t) {
  if (dim > kMaxWedgeDim) throw ResourceError("wedge monomials support dimension at most 64");
  if (t < 0 || t > dim) throw InputError("wedge degree out of range");
  std::vector<WedgeMonomial> out;
  out.reserve(binomial_table()[dim][t]);
  std::vector<int> c(static_cast<std::size_t>(t));
  std::iota(c.begin(), c.end(), 0);
  do {
    Mask m = 0;
    for (int i : c) m |= Mask{1} << i;
    out.emplace_back(m);
  } while (next_combination(c, dim));
  return out;
}

std::size_t lex_rank(const WedgeMonomial& m, int dim) {
  const auto& binom = binomial_table();
  const int t = m.degree();
  std::size_t rank = 0;
  int prev = 0;
  int i = 0;
  for (Mask rest = m.mask(); rest != 0; rest &= rest - 1, ++i) {
    const int c = std::countr_zero(rest);
    for (int v = prev; v < c; ++v) rank += binom[dim - 1 - v][t - 1 - i];
    prev = c + 1;
  }
  return rank;
}

ShuffleSet::ShuffleSet(int t, int k) {
  if (k < 0 || t < k) throw InputError("shuffle set needs 0 <= k <= t");
  for (auto& sel : combinations(t, k)) {
    std::vector<int> rest;
    for (int p = 0, s = 0; p < t; ++p) {
      if (s < k && sel[static_cast<std::size_t>(s)] == p) {
        ++s;
      } else {
        rest.push_back(p);
      }
    }
    int sign = sign_of(sel);
    shuffles_.push_back({std::move(sel), std::move(rest), sign});
  }
}

int ShuffleSet::sign_of(const std::vector<int>& selected) {
  // moving the j-th selected position to slot j crosses (pos - j) unselected ones
  int inversions = 0;
  for (std::size_t j = 0; j < selected.size(); ++j) inversions += selected[j] - static_cast<int>(j);
  return inversions % 2 == 0 ? 1 : -1;
}

ChainLayout::ChainLayout(const KaryAlgebra& alg) : arity(alg.arity()), dim(alg.dim()) {
  degrees.push_back(0);
  for (int t = 1; t <= dim; t += arity - 1) degrees.push_back(t);
}

bool ChainLayout::contains(int t) const { return position(t) >= 0; }

int ChainLayout::position(int t) const {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == t) return static_cast<int>(i);
  return -1;
}

SparseIntMatrix differential_matrix(const KaryAlgebra& alg, int t) {
  require_wedge_dim(alg);
  const int n = alg.dim();
  const int k = alg.arity();
  if (t < 0 || t > n) throw InputError("differential degree out of range");
  const int target = t - k + 1;
  const auto& binom = binomial_table();
  const std::size_t ncols = binom[n][t];
  const std::size_t nrows = target >= 0 ? binom[n][target] : 0;
  if (t < k) return SparseIntMatrix(nrows, ncols);

  struct Bracket {
    Mask key;
    const SparseVector* value;
  };
  std::vector<Bracket> table;
  for (const auto& [key, value] : alg.brackets()) {
    Mask m = 0;
    for (Index i : key) m |= Mask{1} << i;
    table.push_back({m, &value});
  }

  const auto basis = wedge_basis(n, t);
  std::vector<SparseIntMatrix::Column> columns(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    const Mask col = basis[c].mask();
    auto& out = columns[c];
    for (const Bracket& b : table) {
      if ((b.key & col) != b.key) continue;
      // shuffle sign: positions of the bracket arguments inside the monomial
      int parity = 0;
      int j = 0;
      for (Mask sel = b.key; sel != 0; sel &= sel - 1, ++j) parity += parity_below(col, std::countr_zero(sel)) + j;
      const Mask rest = col & ~b.key;
      for (const Term& term : *b.value) {
        if ((rest >> term.index) & 1U) continue;
        const int sign = ((parity + parity_below(rest, term.index)) & 1) ? -1 : 1;
        const WedgeMonomial image(rest | (Mask{1} << term.index));
        out.push_back({lex_rank(image, n), mpz_class(static_cast<long>(sign * term.coeff))});
      }
    }
  }
  return SparseIntMatrix::from_columns(nrows, std::move(columns));
}

std::vector<int> verify_d_squared(const KaryAlgebra& alg, DegreeScope scope) {
  const int k = alg.arity();
  std::vector<int> degrees;
  if (scope == DegreeScope::Layout) {
    ChainLayout layout(alg);
    degrees.assign(layout.degrees.begin(), layout.degrees.end());
  } else {
    for (int t = 0; t <= alg.dim(); ++t) degrees.push_back(t);
  }
  std::vector<int> failing;
  for (int t : degrees) {
    const int s = t - k + 1;
    if (s < k) continue;
    SparseIntMatrix product = differential_matrix(alg, s) * differential_matrix(alg, t);
    if (!product.is_zero()) failing.push_back(t);
  }
  return failing;
}

Weight monomial_weight(const KaryAlgebra& alg, const WedgeMonomial& m) {
  Weight w(static_cast<std::size_t>(alg.weight_rank()), 0);
  for (int i : m.indices()) {
    const Weight& wi = alg.weights()[static_cast<std::size_t>(i)];
    for (std::size_t c = 0; c < w.size(); ++c) w[c] += wi[c];
  }
  return w;
}

std::vector<WeightBlock> weight_blocks(const KaryAlgebra& alg, int t) {
  if (!alg.has_weights()) throw InputError("weight blocks need a graded algebra");
  if (!is_weight_additive(alg)) throw InputError("weights are not additive over the brackets");
  const int n = alg.dim();
  const int target = t - alg.arity() + 1;
  std::map<Weight, WeightBlock> blocks;
  const auto cols = wedge_basis(n, t);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Weight w = monomial_weight(alg, cols[c]);
    auto& block = blocks[w];
    block.weight = w;
    block.cols.push_back(c);
  }
  if (target >= 0) {
    const auto rows = wedge_basis(n, target);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = blocks.find(monomial_weight(alg, rows[r]));
      if (it != blocks.end()) it->second.rows.push_back(r);
    }
  }
  const SparseIntMatrix full = differential_matrix(alg, t);
  std::vector<WeightBlock> out;
  out.reserve(blocks.size());
  for (auto& [w, block] : blocks) {
    block.matrix = full.submatrix(block.rows, block.cols);
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace kary
