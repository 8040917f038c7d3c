#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kary/families.hpp"

namespace oracle {

int inversion_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<mpq_class> bracket(const kary::KaryAlgebra& alg, const std::vector<int>& args) {
  std::vector<mpq_class> out(static_cast<std::size_t>(alg.dim()), 0);
  std::vector<int> sorted = args;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
  const int sign = inversion_sign(args);
  auto it = alg.brackets().find(sorted);
  if (it == alg.brackets().end()) return out;
  for (const auto& term : it->second) out[static_cast<std::size_t>(term.index)] += sign * term.coeff;
  return out;
}

std::vector<std::vector<int>> subsets(int dim, int t) {
  std::vector<std::vector<int>> out;
  if (t < 0 || t > dim) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < dim; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Dense differential(const kary::KaryAlgebra& alg, int t) {
  const int k = alg.arity();
  const int dim = alg.dim();
  const auto cols = subsets(dim, t);
  const auto rows = subsets(dim, t - k + 1);
  Dense d(rows.size(), std::vector<mpq_class>(cols.size(), 0));
  if (t < k) return d;
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<int> perm(static_cast<std::size_t>(t));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (!std::is_sorted(perm.begin(), perm.begin() + k) || !std::is_sorted(perm.begin() + k, perm.end())) continue;
      const int sigma = inversion_sign(perm);
      std::vector<int> args;
      for (int p = 0; p < k; ++p) args.push_back(cols[c][static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])]);
      const auto value = bracket(alg, args);
      for (int b = 0; b < dim; ++b) {
        if (value[static_cast<std::size_t>(b)] == 0) continue;
        // b wedge rest, then sort
        std::vector<int> word{b};
        for (int p = k; p < t; ++p) word.push_back(cols[c][static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])]);
        std::vector<int> sorted = word;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        d[row_of.at(sorted)][c] += sigma * inversion_sign(word) * value[static_cast<std::size_t>(b)];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return d;
}

Dense to_dense(const kary::SparseIntMatrix& m) {
  Dense d(m.rows(), std::vector<mpq_class>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) d[e.row][c] = e.value;
  return d;
}

std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Dense multiply(const Dense& a, const Dense& b, std::size_t inner) {
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  Dense out(a.size(), std::vector<mpq_class>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

std::map<int, std::uint64_t> layout_betti(const kary::KaryAlgebra& alg) {
  const int k = alg.arity();
  const int dim = alg.dim();
  auto rank_of = [&](int t) -> std::size_t {
    if (t < k || t > dim) return 0;
    return rank(differential(alg, t));
  };
  std::map<int, std::uint64_t> out;
  out[0] = 1;
  for (int t = 1; t <= dim; t += k - 1) {
    const auto chain = subsets(dim, t).size();
    out[t] = chain - rank_of(t) - rank_of(t + k - 1);
  }
  return out;
}

std::size_t jacobi_violations(const kary::KaryAlgebra& alg) {
  const int k = alg.arity();
  const int dim = alg.dim();
  std::size_t bad = 0;
  std::vector<int> outer(static_cast<std::size_t>(k - 1), 0);
  for (const auto& x : subsets(dim, k)) {
    std::fill(outer.begin(), outer.end(), 0);
    while (true) {
      std::vector<mpq_class> lhs(static_cast<std::size_t>(dim), 0);
      std::vector<mpq_class> rhs(static_cast<std::size_t>(dim), 0);
      const auto inner = bracket(alg, x);
      for (int b = 0; b < dim; ++b) {
        if (inner[static_cast<std::size_t>(b)] == 0) continue;
        std::vector<int> args{b};
        args.insert(args.end(), outer.begin(), outer.end());
        const auto v = bracket(alg, args);
        for (int c = 0; c < dim; ++c) lhs[static_cast<std::size_t>(c)] += inner[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(c)];
      }
      for (int i = 0; i < k; ++i) {
        std::vector<int> args{x[static_cast<std::size_t>(i)]};
        args.insert(args.end(), outer.begin(), outer.end());
        const auto y = bracket(alg, args);
        for (int b = 0; b < dim; ++b) {
          if (y[static_cast<std::size_t>(b)] == 0) continue;
          std::vector<int> replaced = x;
          replaced[static_cast<std::size_t>(i)] = b;
          const auto v = bracket(alg, replaced);
          for (int c = 0; c < dim; ++c) rhs[static_cast<std::size_t>(c)] += y[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(c)];
        }
      }
      if (lhs != rhs) ++bad;
      std::size_t pos = 0;
      while (pos < outer.size() && ++outer[pos] == dim) outer[pos++] = 0;
      if (pos == outer.size()) break;
    }
  }
  return bad;
}

std::map<std::vector<std::int64_t>, std::int64_t> ssyt_weights(const std::vector<int>& lambda, int n) {
  std::map<std::vector<std::int64_t>, std::int64_t> out;
  std::vector<std::vector<int>> tab;
  for (int len : lambda) tab.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < tab.size(); ++r)
    for (std::size_t c = 0; c < tab[r].size(); ++c) cells.emplace_back(r, c);
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
      for (const auto& row : tab)
        for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
      ++out[w];
      return;
    }
    const auto [r, c] = cells[idx];
    for (int v = 1; v <= n; ++v) {
      if (c > 0 && v < tab[r][c - 1]) continue;
      if (r > 0 && v <= tab[r - 1][c]) continue;
      tab[r][c] = v;
      fill(idx + 1);
    }
  };
  fill(0);
  return out;
}

std::int64_t ssyt_count(const std::vector<int>& lambda, int n) {
  std::int64_t s = 0;
  for (const auto& [w, m] : ssyt_weights(lambda, n)) s += m;
  return s;
}

kary::SparseIntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density,
                                    long bound) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<long> val(-bound, bound);
  std::vector<kary::SparseIntMatrix::Column> columns(cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (keep(rng)) columns[c].push_back({r, mpz_class(val(rng))});
  return kary::SparseIntMatrix::from_columns(rows, std::move(columns));
}

kary::KaryAlgebra random_family(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (pick(0, 5)) {
    case 0: {
      const int k = pick(2, 4);
      return kary::heisenberg(k, k == 4 ? 1 : pick(1, 2));
    }
    case 1: return kary::acj(pick(2, 3), pick(1, 2));
    case 2: {
      const int k = pick(2, 3);
      return kary::free_two_step(k, k + pick(0, 1));
    }
    case 3: return kary::free_three_step_small(3);
    case 4: return kary::abelian(pick(2, 4), pick(1, 6));
    default: return kary::current_algebra(kary::heisenberg(pick(2, 3), 1), 2);
  }
}

}  // namespace oracle
