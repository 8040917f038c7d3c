#include "kary/schur.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>

#include "kary/combinatorics.hpp"
#include "kary/complex.hpp"
#include "kary/errors.hpp"
#include "kary/families.hpp"

namespace kary {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

std::string partition_to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

Partition dominant_of(const Weight& w) {
  Partition p;
  for (auto x : w) {
    if (x < 0) throw InputError("weight with a negative coordinate is not polynomial");
    if (x > 0) p.push_back(static_cast<int>(x));
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

mpz_class schur_dim(const Partition& lambda, int n) {
  if (!is_partition(lambda)) throw InputError("not a partition: " + partition_to_string(lambda));
  if (static_cast<int>(lambda.size()) > n) return 0;
  // conjugate lengths give the hook legs
  std::vector<int> col(lambda.empty() ? 0 : static_cast<std::size_t>(lambda.front()), 0);
  for (int row : lambda)
    for (int c = 0; c < row; ++c) ++col[static_cast<std::size_t>(c)];
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      num *= n + c - static_cast<int>(r);
      den *= (lambda[r] - c - 1) + (col[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
    }
  return num / den;
}

namespace {

// Kostka numbers for a dominant content by stripping horizontal strips from the
// bottom: the last content entry must fill a horizontal strip of lambda.
class KostkaCache {
 public:
  mpz_class get(const Partition& lambda, const Partition& mu) {
    std::lock_guard lock(mutex_);
    return compute(lambda, mu, mu.size());
  }

 private:
  mpz_class compute(const Partition& lambda, const Partition& mu, std::size_t len) {
    if (len == 0) return lambda.empty() ? 1 : 0;
    if (lambda.size() > len) return 0;
    auto key = std::make_tuple(lambda, mu, len);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int strip = mu[len - 1];
    mpz_class total = 0;
    Partition inner(lambda.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
      if (row == lambda.size()) {
        if (left != 0) return;
        Partition trimmed = inner;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += compute(trimmed, mu, len - 1);
        return;
      }
      const int floor = row + 1 < lambda.size() ? lambda[row + 1] : 0;
      for (int take = 0; take <= lambda[row] - floor && take <= left; ++take) {
        inner[row] = lambda[row] - take;
        rec(row + 1, left - take);
      }
    };
    rec(0, strip);
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::mutex mutex_;
  std::map<std::tuple<Partition, Partition, std::size_t>, mpz_class> memo_;
};

KostkaCache& kostka_cache() {
  static KostkaCache cache;
  return cache;
}

// Partitions of `size` with at most `rows` parts, padded with zeros to `rows`.
void dominant_weights(int size, int rows, int max_part, Weight& prefix, std::vector<Weight>& out) {
  if (static_cast<int>(prefix.size()) == rows) {
    if (size == 0) out.push_back(prefix);
    return;
  }
  for (int p = std::min(size, max_part); p >= 0; --p) {
    prefix.push_back(p);
    dominant_weights(size - p, rows, p, prefix, out);
    prefix.pop_back();
  }
}

Weight sorted_desc(Weight w) {
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

}  // namespace

mpz_class kostka(const Partition& lambda, const std::vector<int>& mu) {
  if (!is_partition(lambda)) throw InputError("not a partition: " + partition_to_string(lambda));
  Partition sorted;
  for (int x : mu) {
    if (x < 0) throw InputError("content with a negative entry");
    if (x > 0) sorted.push_back(x);
  }
  if (partition_size(sorted) != partition_size(lambda)) return 0;
  // Kostka numbers are symmetric in the content
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return kostka_cache().get(lambda, sorted);
}

std::int64_t CharacterTable::total() const {
  std::int64_t s = 0;
  for (const auto& [w, m] : mult) s += m;
  return s;
}

std::vector<Weight> CharacterTable::asymmetric_weights() const {
  std::vector<Weight> bad;
  for (const auto& [w, m] : mult) {
    Weight p = w;
    std::sort(p.begin(), p.end());
    do {
      auto it = mult.find(p);
      const std::int64_t other = it == mult.end() ? 0 : it->second;
      if (other != m) {
        bad.push_back(w);
        break;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return bad;
}

CharacterTable schur_character(const Partition& lambda, int n) {
  CharacterTable table;
  table.n = n;
  if (static_cast<int>(lambda.size()) > n) return table;
  const int size = partition_size(lambda);
  std::vector<Weight> dom;
  Weight prefix;
  dominant_weights(size, n, size, prefix, dom);
  for (const Weight& mu : dom) {
    std::vector<int> content(mu.begin(), mu.end());
    const mpz_class k = kostka(lambda, content);
    if (k == 0) continue;
    Weight w = mu;
    std::sort(w.begin(), w.end());
    do {
      table.mult[w] = k.get_si();
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return table;
}

CharacterTable character_by_weights(const KaryAlgebra& alg, int t, const EngineOptions& options) {
  if (!alg.has_weights() || !is_weight_additive(alg))
    throw InputError("character computation needs a weight-additive grading");
  const ChainLayout layout(alg);
  if (!layout.contains(t)) throw InputError("degree " + std::to_string(t) + " is not in the chain layout");
  if (binomial(alg.dim(), t) > mpz_class(static_cast<unsigned long>(options.size_cap)))
    throw ResourceError("chain space of degree " + std::to_string(t) + " exceeds the size cap");
  EngineOptions blocked = options;
  blocked.use_weight_blocks = true;
  const int k = alg.arity();
  const auto ranks = differential_ranks(alg, {t, t + k - 1}, blocked);

  CharacterTable table;
  table.n = alg.weight_rank();
  for (const auto& m : wedge_basis(alg.dim(), t)) ++table.mult[monomial_weight(alg, m)];
  for (int deg : {t, t + k - 1})
    for (const auto& [w, r] : ranks.at(deg).block_rank) table.mult[w] -= static_cast<std::int64_t>(r);
  for (auto it = table.mult.begin(); it != table.mult.end();) {
    if (it->second < 0) throw ConsistencyError("negative weight multiplicity in homology character");
    it = it->second == 0 ? table.mult.erase(it) : std::next(it);
  }
  return table;
}

mpz_class SchurDecomposition::dimension() const {
  mpz_class d = 0;
  for (const auto& s : summands) d += s.multiplicity * schur_dim(s.partition, n);
  return d;
}

std::vector<Partition> SchurDecomposition::partitions() const {
  std::vector<Partition> out;
  for (const auto& s : summands)
    for (std::int64_t i = 0; i < s.multiplicity; ++i) out.push_back(s.partition);
  std::sort(out.begin(), out.end());
  return out;
}

SchurDecomposition decompose_character(const CharacterTable& table) {
  if (!table.asymmetric_weights().empty())
    throw ConsistencyError("character table is not symmetric under permuting weight coordinates");
  const int n = table.n;
  std::map<Weight, std::int64_t, std::greater<>> dominant;
  for (const auto& [w, m] : table.mult) {
    if (static_cast<int>(w.size()) != n) throw InputError("weight length differs from the table rank");
    if (m < 0) throw ConsistencyError("negative multiplicity in character table");
    if (m != 0 && w == sorted_desc(w)) dominant[w] = m;
  }
  SchurDecomposition d;
  d.n = n;
  while (!dominant.empty()) {
    const auto [top, m] = *dominant.begin();
    const Partition lambda = dominant_of(top);
    d.summands.push_back({lambda, m});
    std::vector<Weight> dom;
    Weight prefix;
    const int size = partition_size(lambda);
    dominant_weights(size, n, size, prefix, dom);
    for (const Weight& mu : dom) {
      const mpz_class k = kostka(lambda, std::vector<int>(mu.begin(), mu.end()));
      if (k == 0) continue;
      auto& slot = dominant[mu];
      slot -= m * k.get_si();
      if (slot < 0)
        throw ConsistencyError("peeling " + partition_to_string(lambda) + " drove a multiplicity negative");
      if (slot == 0) dominant.erase(mu);
    }
  }
  return d;
}

CharacterTable expand(const SchurDecomposition& d) {
  CharacterTable out;
  out.n = d.n;
  for (const auto& s : d.summands)
    for (const auto& [w, m] : schur_character(s.partition, d.n).mult) out.mult[w] += s.multiplicity * m;
  return out;
}

nlohmann::json to_json(const SchurDecomposition& d) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : d.summands)
    list.push_back({{"partition", s.partition},
                    {"multiplicity", s.multiplicity},
                    {"dimension", big_to_json(schur_dim(s.partition, d.n))}});
  return {{"schema", kReportSchema}, {"n", d.n}, {"summands", list}, {"total_dimension", big_to_json(d.dimension())}};
}

std::string to_text(const SchurDecomposition& d) {
  std::ostringstream out;
  for (const auto& s : d.summands) {
    out << "S" << partition_to_string(s.partition);
    if (s.multiplicity != 1) out << " x" << s.multiplicity;
    out << "   dim " << schur_dim(s.partition, d.n).get_str() << '\n';
  }
  out << "total dimension " << d.dimension().get_str() << '\n';
  return out.str();
}

mpz_class lower_bound_betti(int n, int k, int i) {
  if (i < 2 || n < k) throw InputError("lower bound needs i >= 2 and n >= k");
  const long alpha = static_cast<long>(i - 1) * (k - 1);
  const mpz_class xz = binomial(n, k);
  const long x = xz.get_si();
  return binomial(n, k) * binomial(x, alpha) - binomial(n, 2 * k) * binomial(x, alpha - 1) - binomial(x, alpha + 1);
}

mpz_class second_homology_bound(int n, int k) {
  if (n < k) throw InputError("second homology bound needs n >= k");
  return binomial(n, k) * binomial(n, k - 1) - binomial(n, 2 * k - 1);
}

double asymptotic_bound(int n, int k, int i) {
  if (i < 2 || n < k) throw InputError("asymptotic bound needs i >= 2 and n >= k");
  const double alpha = static_cast<double>(i - 1) * (k - 1);
  const double x = binomial(n, k).get_d();
  const double pk = std::numbers::pi * k;
  const double lead = std::exp(2.0 * k) * std::pow(static_cast<double>(n), 2.0 * k) / (2.0 * std::pow(k, 2.0 * k));
  const double bracket = 1.0 / pk - (alpha + 1) / (std::sqrt(pk) * std::pow(2.0, 2.0 * k));
  const double tail = binomial(static_cast<long>(x), static_cast<long>(alpha)).get_d() / ((alpha + 1) * (x - alpha + 1));
  return lead * bracket * tail;
}

bool pieri_dimension_check(int x, int alpha) {
  if (x < 1 || alpha < 1) throw InputError("Pieri check needs x >= 1 and alpha >= 1");
  Partition hook{2};
  hook.insert(hook.end(), static_cast<std::size_t>(alpha - 1), 1);
  return x * binomial(x, alpha) == binomial(x, alpha + 1) + schur_dim(hook, x);
}

namespace {
std::vector<Partition> two_one_family(int k, int offset) {
  std::vector<Partition> out;
  for (int j = 1; j <= k - 1; ++j) {
    Partition p(static_cast<std::size_t>(j), 2);
    const int ones = 2 * k - 2 * j + offset;
    if (ones > 0) p.insert(p.end(), static_cast<std::size_t>(ones), 1);
    out.push_back(p);
  }
  return out;
}
}  // namespace

std::vector<Partition> second_homology_summands(int k) { return two_one_family(k, -1); }
std::vector<Partition> second_homology_summands_alt(int k) { return two_one_family(k, +1); }

StabilityReport stability_check(int k, int t, const std::vector<int>& ns, const EngineOptions& options) {
  StabilityReport r;
  r.k = k;
  r.t = t;
  r.ns = ns;
  for (int n : ns) {
    if (n < k) throw InputError("stability check needs n >= k");
    r.decompositions.push_back(decompose_character(character_by_weights(free_two_step(k, n), t, options)));
  }
  if (ns.size() >= 2) {
    const auto last = r.decompositions.back().partitions();
    std::size_t first = ns.size() - 1;
    while (first > 0 && r.decompositions[first - 1].partitions() == last) --first;
    if (first + 1 < ns.size()) r.stable_from = ns[first];
  }
  return r;
}

nlohmann::json to_json(const StabilityReport& r) {
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t i = 0; i < r.ns.size(); ++i) {
    nlohmann::json d = to_json(r.decompositions[i]);
    d.erase("schema");
    runs.push_back(std::move(d));
  }
  nlohmann::json doc{{"schema", kReportSchema}, {"k", r.k}, {"t", r.t}, {"runs", runs}, {"stable", r.stable()}};
  if (r.stable_from) doc["stable_from"] = *r.stable_from;
  return doc;
}

}  // namespace kary
