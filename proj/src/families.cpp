#include "kary/families.hpp"

#include <numeric>

#include "kary/combinatorics.hpp"
#include "kary/errors.hpp"

namespace kary {

namespace {

std::string sub(const std::string& base, int j, int i) { return base + std::to_string(j) + "_" + std::to_string(i); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

KaryAlgebra heisenberg(int k, int m) {
  require(k >= 2, "heisenberg: k must be at least 2");
  require(m >= 1, "heisenberg: m must be at least 1");
  std::vector<std::string> labels;
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= m; ++i) labels.push_back(sub("x", j, i));
  labels.push_back("z");
  const int z = k * m;
  KaryAlgebra alg(k, k * m + 1, std::move(labels));
  for (int i = 0; i < m; ++i) {
    IndexTuple args;
    for (int j = 0; j < k; ++j) args.push_back(j * m + i);
    alg.add_bracket(args, {{z, 1}});
  }
  alg.set_name("heisenberg(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")");
  return alg;
}

KaryAlgebra acj(int k, int m) {
  require(k >= 2, "acj: k must be at least 2");
  require(m >= 1, "acj: m must be at least 1");
  std::vector<std::string> labels{"z"};
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= m; ++i) labels.push_back(sub("x", j, i));
  KaryAlgebra alg(k, k * m + 1, std::move(labels));
  for (int i = 0; i < m; ++i) {
    IndexTuple args{0};
    for (int j = 0; j < k - 1; ++j) args.push_back(1 + j * m + i);
    alg.add_bracket(args, {{1 + (k - 1) * m + i, 1}});
  }
  alg.set_name("acj(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")");
  return alg;
}

KaryAlgebra free_two_step(int k, int n) {
  require(k >= 2, "free2: k must be at least 2");
  require(n >= k, "free2: n must be at least k");
  auto subsets = combinations(n, k);
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (int i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    Weight w(static_cast<std::size_t>(n), 0);
    w[static_cast<std::size_t>(i)] = 1;
    weights.push_back(std::move(w));
  }
  for (const auto& s : subsets) {
    std::string name = "w";
    Weight w(static_cast<std::size_t>(n), 0);
    for (int i : s) {
      name += std::to_string(i + 1);
      w[static_cast<std::size_t>(i)] = 1;
    }
    labels.push_back(name);
    weights.push_back(std::move(w));
  }
  KaryAlgebra alg(k, n + static_cast<int>(subsets.size()), std::move(labels));
  for (std::size_t s = 0; s < subsets.size(); ++s) alg.add_bracket(subsets[s], {{n + static_cast<int>(s), 1}});
  alg.set_weights(std::move(weights));
  alg.set_name("free2(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")");
  return alg;
}

KaryAlgebra free_three_step_small(int k) {
  require(k >= 3, "free3small: k must be at least 3");
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("y");
  for (int i = 1; i <= k; ++i) labels.push_back("z" + std::to_string(i));
  const int y = k;
  KaryAlgebra alg(k, 2 * k + 1, std::move(labels));
  IndexTuple all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 0);
  alg.add_bracket(all, {{y, 1}});
  for (int i = 0; i < k; ++i) {
    IndexTuple args;
    for (int j = 0; j < k; ++j)
      if (j != i) args.push_back(j);
    args.push_back(y);
    alg.add_bracket(args, {{k + 1 + i, 1}});
  }
  std::vector<Weight> weights;
  const auto uk = static_cast<std::size_t>(k);
  for (int i = 0; i < k; ++i) {
    Weight w(uk, 0);
    w[static_cast<std::size_t>(i)] = 1;
    weights.push_back(std::move(w));
  }
  weights.push_back(Weight(uk, 1));
  for (int i = 0; i < k; ++i) {
    Weight w(uk, 2);
    w[static_cast<std::size_t>(i)] = 1;
    weights.push_back(std::move(w));
  }
  alg.set_weights(std::move(weights));
  alg.set_name("free3small(k=" + std::to_string(k) + ")");
  return alg;
}

KaryAlgebra abelian(int k, int n) {
  KaryAlgebra alg(k, n);
  alg.set_name("abelian(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")");
  return alg;
}

KaryAlgebra current_algebra(const KaryAlgebra& alg, int j) {
  require(j >= 1, "current: truncation must be at least 1");
  const int d = alg.dim();
  const int k = alg.arity();
  std::vector<std::string> labels;
  for (int p = 0; p < j; ++p)
    for (int b = 0; b < d; ++b) labels.push_back(p == 0 ? alg.label(b) : alg.label(b) + ".t" + std::to_string(p));
  KaryAlgebra out(k, d * j, std::move(labels));
  for (const auto& [key, value] : alg.brackets()) {
    // every assignment of exponents with sum < j
    std::vector<int> exps(static_cast<std::size_t>(k), 0);
    while (true) {
      int total = std::accumulate(exps.begin(), exps.end(), 0);
      if (total < j) {
        IndexTuple args;
        for (int q = 0; q < k; ++q) args.push_back(key[static_cast<std::size_t>(q)] + d * exps[static_cast<std::size_t>(q)]);
        SparseVector v;
        for (const Term& t : value) v.push_back({t.index + d * total, t.coeff});
        out.add_bracket(args, v);
      }
      int q = k - 1;
      while (q >= 0 && exps[static_cast<std::size_t>(q)] == j - 1) exps[static_cast<std::size_t>(q--)] = 0;
      if (q < 0) break;
      ++exps[static_cast<std::size_t>(q)];
    }
  }
  out.set_name("current(" + alg.name() + ",j=" + std::to_string(j) + ")");
  return out;
}

KaryAlgebra build_family(const FamilySpec& spec) {
  const std::string& f = spec.family;
  if (f == "heisenberg") return heisenberg(spec.k, spec.m);
  if (f == "acj") return acj(spec.k, spec.m);
  if (f == "free2") return free_two_step(spec.k, spec.n);
  if (f == "free3small" || f == "free3") return free_three_step_small(spec.k);
  if (f == "abelian") {
    require(spec.k >= 2 && spec.n >= 1, "abelian: need k >= 2 and n >= 1");
    return abelian(spec.k, spec.n);
  }
  if (f == "current") {
    require(spec.inner != nullptr, "current: inner family required");
    return current_algebra(build_family(*spec.inner), spec.j);
  }
  throw InputError("unknown family: " + f);
}

}  // namespace kary
