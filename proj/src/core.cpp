#include "kary/core.hpp"

#include <algorithm>
#include <numeric>

#include "kary/combinatorics.hpp"
#include "kary/errors.hpp"

namespace kary {

int sort_with_sign(std::span<Index> tuple) {
  int sign = 1;
  // insertion sort; parity of the number of swaps
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i - 1] == tuple[i]) return 0;
  return sign;
}

void axpy(SparseVector& acc, Coeff scale, const SparseVector& v) {
  if (scale == 0 || v.empty()) return;
  SparseVector out;
  out.reserve(acc.size() + v.size());
  auto a = acc.begin();
  auto b = v.begin();
  while (a != acc.end() || b != v.end()) {
    if (b == v.end() || (a != acc.end() && a->index < b->index)) {
      out.push_back(*a++);
    } else if (a == acc.end() || b->index < a->index) {
      if (b->coeff != 0) out.push_back({b->index, scale * b->coeff});
      ++b;
    } else {
      Coeff c = a->coeff + scale * b->coeff;
      if (c != 0) out.push_back({a->index, c});
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

KaryAlgebra::KaryAlgebra(int arity, int dim, std::vector<std::string> labels)
    : arity_(arity), dim_(dim), labels_(std::move(labels)) {
  if (arity < 2) throw InputError("arity must be at least 2");
  if (dim < 1) throw InputError("dimension must be at least 1");
  if (labels_.empty()) {
    for (int i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != dim) throw InputError("label count does not match dimension");
}

void KaryAlgebra::add_bracket(std::span<const Index> args, const SparseVector& value) {
  if (static_cast<int>(args.size()) != arity_) throw InputError("bracket tuple length differs from arity");
  IndexTuple key(args.begin(), args.end());
  for (Index i : key)
    if (i < 0 || i >= dim_) throw InputError("bracket index out of range");
  int sign = sort_with_sign(key);
  if (sign == 0) throw InputError("bracket arguments must be distinct");
  std::map<Index, Coeff> merged;
  for (const Term& t : value) {
    if (t.index < 0 || t.index >= dim_) throw InputError("bracket value index out of range");
    merged[t.index] += t.coeff;
  }
  SparseVector normalized;
  for (const auto& [i, c] : merged)
    if (c != 0) normalized.push_back({i, c});
  SparseVector& slot = brackets_[key];
  axpy(slot, sign, normalized);
  if (slot.empty()) brackets_.erase(key);
}

const SparseVector* KaryAlgebra::find(const IndexTuple& sorted) const {
  auto it = brackets_.find(sorted);
  return it == brackets_.end() ? nullptr : &it->second;
}

void KaryAlgebra::set_weights(std::vector<Weight> weights) {
  if (!weights.empty()) {
    if (static_cast<int>(weights.size()) != dim_) throw InputError("one weight per basis element required");
    for (const Weight& w : weights)
      if (w.size() != weights.front().size()) throw InputError("weights must share one rank");
  }
  weights_ = std::move(weights);
}

SparseVector bracket(const KaryAlgebra& alg, std::span<const Index> indices) {
  if (static_cast<int>(indices.size()) != alg.arity()) throw InputError("bracket tuple length differs from arity");
  IndexTuple key(indices.begin(), indices.end());
  for (Index i : key)
    if (i < 0 || i >= alg.dim()) throw InputError("bracket index out of range");
  int sign = sort_with_sign(key);
  if (sign == 0) return {};
  const SparseVector* v = alg.find(key);
  if (v == nullptr) return {};
  SparseVector out = *v;
  if (sign < 0)
    for (Term& t : out) t.coeff = -t.coeff;
  return out;
}

SparseVector bracket_with(const KaryAlgebra& alg, std::span<const Index> indices, std::size_t slot,
                          const SparseVector& v) {
  SparseVector acc;
  IndexTuple args(indices.begin(), indices.end());
  for (const Term& t : v) {
    args[slot] = t.index;
    axpy(acc, t.coeff, bracket(alg, args));
  }
  return acc;
}

std::vector<IndexTuple> check_jacobi(const KaryAlgebra& alg) {
  const int k = alg.arity();
  const int n = alg.dim();
  std::vector<IndexTuple> violations;
  if (n < k) return violations;
  // Inner tuple sorted and repeat-free, outer tuple sorted and repeat-free:
  // both sides are alternating in each group, so this covers every basis tuple.
  std::vector<int> inner(static_cast<std::size_t>(k));
  std::iota(inner.begin(), inner.end(), 0);
  do {
    const SparseVector* head = alg.find(inner);
    std::vector<int> outer(static_cast<std::size_t>(k - 1));
    std::iota(outer.begin(), outer.end(), 0);
    do {
      SparseVector residual;
      if (head != nullptr) {
        IndexTuple lhs(1, 0);
        lhs.insert(lhs.end(), outer.begin(), outer.end());
        axpy(residual, 1, bracket_with(alg, lhs, 0, *head));
      }
      for (int i = 0; i < k; ++i) {
        IndexTuple in(1, inner[static_cast<std::size_t>(i)]);
        in.insert(in.end(), outer.begin(), outer.end());
        SparseVector nested = bracket(alg, in);
        if (nested.empty()) continue;
        IndexTuple args(inner.begin(), inner.end());
        axpy(residual, -1, bracket_with(alg, args, static_cast<std::size_t>(i), nested));
      }
      if (!residual.empty()) {
        IndexTuple bad(inner.begin(), inner.end());
        bad.insert(bad.end(), outer.begin(), outer.end());
        violations.push_back(std::move(bad));
      }
    } while (next_combination(outer, n));
  } while (next_combination(inner, n));
  return violations;
}

bool is_weight_additive(const KaryAlgebra& alg) {
  if (!alg.has_weights()) return true;
  const auto& w = alg.weights();
  const std::size_t r = static_cast<std::size_t>(alg.weight_rank());
  for (const auto& [key, value] : alg.brackets()) {
    Weight sum(r, 0);
    for (Index i : key)
      for (std::size_t c = 0; c < r; ++c) sum[c] += w[static_cast<std::size_t>(i)][c];
    for (const Term& t : value)
      if (w[static_cast<std::size_t>(t.index)] != sum) return false;
  }
  return true;
}

KaryAlgebra with_basis_signs(const KaryAlgebra& alg, std::span<const int> signs) {
  if (static_cast<int>(signs.size()) != alg.dim()) throw InputError("one sign per basis element required");
  KaryAlgebra out(alg.arity(), alg.dim(), alg.labels());
  for (const auto& [key, value] : alg.brackets()) {
    Coeff in_sign = 1;
    for (Index i : key) in_sign *= signs[static_cast<std::size_t>(i)];
    SparseVector v = value;
    // [s a_1, ..., s a_k] = sum c_b b = sum (c_b s_b) (s_b b)
    for (Term& t : v) t.coeff *= in_sign * signs[static_cast<std::size_t>(t.index)];
    out.add_bracket(key, v);
  }
  out.set_weights(alg.weights());
  out.set_name(alg.name());
  return out;
}

// ---- Subspace ------------------------------------------------------------

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<mpq_class>>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    mpq_class inv = 1 / rows[r][static_cast<std::size_t>(c)];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][static_cast<std::size_t>(c)] == 0) continue;
      mpq_class f = rows[i][static_cast<std::size_t>(c)];
      for (int j = 0; j < ncols; ++j) rows[i][static_cast<std::size_t>(j)] -= f * rows[r][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Subspace Subspace::span(int ambient_dim, std::vector<std::vector<mpq_class>> vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim) throw InputError("vector length differs from ambient dimension");
  s.pivots_ = rref(vectors, ambient_dim);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::whole(int ambient_dim) {
  std::vector<std::vector<mpq_class>> id(static_cast<std::size_t>(ambient_dim),
                                         std::vector<mpq_class>(static_cast<std::size_t>(ambient_dim)));
  for (int i = 0; i < ambient_dim; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return span(ambient_dim, std::move(id));
}

bool Subspace::contains(const std::vector<mpq_class>& v) const {
  std::vector<mpq_class> r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    mpq_class f = r[static_cast<std::size_t>(pivots_[i])];
    if (f == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * basis_[i][j];
  }
  return std::all_of(r.begin(), r.end(), [](const mpq_class& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const auto& v) { return contains(v); });
}

std::vector<Subspace> lower_central_series(const KaryAlgebra& alg) {
  const int n = alg.dim();
  const int k = alg.arity();
  std::vector<Subspace> series{Subspace::whole(n)};
  while (series.back().dim() > 0) {
    std::vector<std::vector<mpq_class>> gens;
    for (const auto& c : series.back().basis()) {
      std::vector<int> rest(static_cast<std::size_t>(k - 1));
      std::iota(rest.begin(), rest.end(), 0);
      if (k - 1 > n) break;
      do {
        std::vector<mpq_class> out(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
          if (c[static_cast<std::size_t>(j)] == 0) continue;
          IndexTuple args(1, j);
          args.insert(args.end(), rest.begin(), rest.end());
          for (const Term& t : bracket(alg, args)) {
            out[static_cast<std::size_t>(t.index)] += c[static_cast<std::size_t>(j)] * static_cast<long>(t.coeff);
            nonzero = true;
          }
        }
        if (nonzero) gens.push_back(std::move(out));
      } while (next_combination(rest, n));
    }
    Subspace next = Subspace::span(n, std::move(gens));
    if (next == series.back()) break;  // stationary: not nilpotent
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const KaryAlgebra& alg) { return lower_central_series(alg).back().dim() == 0; }

bool is_two_step(const KaryAlgebra& alg) {
  auto series = lower_central_series(alg);
  return series.size() == 3 && series.back().dim() == 0;
}

Subspace center(const KaryAlgebra& alg) {
  const int n = alg.dim();
  const int k = alg.arity();
  // Rows of the stacked map: one per (outer tuple, output index); columns: basis of g.
  std::vector<std::vector<mpq_class>> rows;
  if (k - 1 <= n) {
    std::vector<int> rest(static_cast<std::size_t>(k - 1));
    std::iota(rest.begin(), rest.end(), 0);
    do {
      std::map<Index, std::vector<mpq_class>> block;
      for (int j = 0; j < n; ++j) {
        IndexTuple args(1, j);
        args.insert(args.end(), rest.begin(), rest.end());
        for (const Term& t : bracket(alg, args)) {
          auto& row = block[t.index];
          if (row.empty()) row.assign(static_cast<std::size_t>(n), mpq_class(0));
          row[static_cast<std::size_t>(j)] = static_cast<long>(t.coeff);
        }
      }
      for (auto& [_, row] : block) rows.push_back(std::move(row));
    } while (next_combination(rest, n));
  }
  std::vector<int> pivots = rref(rows, n);
  // Nullspace basis from the RREF: one vector per free column.
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<mpq_class>> kernel;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<mpq_class> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(f)];
    kernel.push_back(std::move(v));
  }
  return Subspace::span(n, std::move(kernel));
}

}  // namespace kary
