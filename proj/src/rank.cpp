#include "kary/rank.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include "kary/errors.hpp"

namespace kary {

namespace {

// Elimination is templated on the scalar policy so that the exact and the
// modular paths share pivoting and fill-in bookkeeping.

struct IntegerArith {
  using Value = mpz_class;
  static bool is_zero(const Value& v) { return v == 0; }

  // row <- (p/g) row - (a/g) pivot, then divide by the row content.
  template <class Row>
  static void combine(Row& row, const Row& pivot, const Value& p, const Value& a, Row& scratch) {
    Value g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    Value mr = p / g;
    Value mp = a / g;
    scratch.clear();
    auto x = row.begin();
    auto y = pivot.begin();
    while (x != row.end() || y != pivot.end()) {
      if (y == pivot.end() || (x != row.end() && x->first < y->first)) {
        scratch.emplace_back(x->first, mr * x->second);
        ++x;
      } else if (x == row.end() || y->first < x->first) {
        scratch.emplace_back(y->first, -mp * y->second);
        ++y;
      } else {
        Value v = mr * x->second - mp * y->second;
        if (v != 0) scratch.emplace_back(x->first, std::move(v));
        ++x;
        ++y;
      }
    }
    Value content = 0;
    for (const auto& e : scratch) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
      if (content == 1) break;
    }
    if (content > 1)
      for (auto& e : scratch) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
    row.swap(scratch);
  }
};

struct ModularArith {
  using Value = std::uint64_t;
  std::uint64_t p;

  static bool is_zero(Value v) { return v == 0; }

  Value inverse(Value a) const {
    // a^(p-2) mod p
    Value result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }

  template <class Row>
  void combine(Row& row, const Row& pivot, const Value& pv, const Value& a, Row& scratch) const {
    const Value f = a * inverse(pv) % p;
    scratch.clear();
    auto x = row.begin();
    auto y = pivot.begin();
    while (x != row.end() || y != pivot.end()) {
      if (y == pivot.end() || (x != row.end() && x->first < y->first)) {
        scratch.push_back(*x++);
      } else if (x == row.end() || y->first < x->first) {
        scratch.emplace_back(y->first, (p - f * y->second % p) % p);
        ++y;
      } else {
        Value v = (x->second + p - f * y->second % p) % p;
        if (v != 0) scratch.emplace_back(x->first, v);
        ++x;
        ++y;
      }
    }
    row.swap(scratch);
  }
};

template <class Arith>
std::size_t eliminate(std::vector<std::vector<std::pair<std::uint32_t, typename Arith::Value>>> rows,
                      std::size_t width, const Arith& arith) {
  using Row = std::vector<std::pair<std::uint32_t, typename Arith::Value>>;
  const std::size_t n = rows.size();
  std::vector<std::size_t> count(width, 0);
  std::vector<std::vector<std::uint32_t>> where(width);
  std::vector<bool> active(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].empty()) continue;
    active[i] = true;
    for (const auto& e : rows[i]) {
      ++count[e.first];
      where[e.first].push_back(static_cast<std::uint32_t>(i));
    }
  }
  std::vector<std::uint32_t> live;
  for (std::size_t i = 0; i < n; ++i)
    if (active[i]) live.push_back(static_cast<std::uint32_t>(i));

  Row scratch;
  std::size_t rank = 0;
  while (true) {
    // Markowitz search over live rows (kept in increasing order).
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::uint32_t best_row = 0, best_col = 0;
    bool found = false;
    for (std::uint32_t r : live) {
      const std::size_t len = rows[r].size() - 1;
      for (const auto& e : rows[r]) {
        const std::size_t cost = len * (count[e.first] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = e.first;
          found = true;
          if (cost == 0) break;
        }
      }
      if (found && best_cost == 0) break;
    }
    if (!found) break;
    ++rank;

    const Row& prow = rows[best_row];
    auto pit = std::lower_bound(prow.begin(), prow.end(), best_col,
                                [](const auto& e, std::uint32_t c) { return e.first < c; });
    const typename Arith::Value pval = pit->second;

    auto& targets = where[best_col];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::uint32_t i : targets) {
      if (i == best_row || !active[i]) continue;
      Row& row = rows[i];
      auto it = std::lower_bound(row.begin(), row.end(), best_col,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it == row.end() || it->first != best_col) continue;
      const typename Arith::Value a = it->second;
      for (const auto& e : row) --count[e.first];
      std::vector<std::uint32_t> before;
      before.reserve(row.size());
      for (const auto& e : row) before.push_back(e.first);
      arith.combine(row, prow, pval, a, scratch);
      for (const auto& e : row) {
        ++count[e.first];
        if (!std::binary_search(before.begin(), before.end(), e.first)) where[e.first].push_back(i);
      }
      if (row.empty()) active[i] = false;
    }
    targets.clear();
    targets.shrink_to_fit();
    for (const auto& e : rows[best_row]) --count[e.first];
    active[best_row] = false;
    Row().swap(rows[best_row]);
    std::erase_if(live, [&](std::uint32_t r) { return !active[r]; });
  }
  return rank;
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m) {
  // Columns of m are the elimination rows; rank(m) = rank(m^T).
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> rows(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) rows[c].emplace_back(static_cast<std::uint32_t>(e.row), e.value);
  return eliminate(std::move(rows), m.rows(), IntegerArith{});
}

std::size_t kernel_dim(const SparseIntMatrix& m) { return m.cols() - rank(m); }

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 32)) throw InputError("modulus must be a prime below 2^32");
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows(m.cols());
  mpz_class pz = static_cast<unsigned long>(p);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), e.value.get_mpz_t(), pz.get_mpz_t());
      if (r != 0) rows[c].emplace_back(static_cast<std::uint32_t>(e.row), r.get_ui());
    }
  }
  return eliminate(std::move(rows), m.rows(), ModularArith{p});
}

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
    if (n % small == 0) return n == small;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto powmod = [n](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 r = 1, x = b % n;
    while (e > 0) {
      if (e & 1) r = r * x % n;
      x = x * x % n;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
  };
  // deterministic for n < 4,759,123,141
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist((1ULL << 30) + 1, (1ULL << 31) - 1);
  std::vector<std::uint64_t> out;
  while (out.size() < count) {
    std::uint64_t c = dist(rng) | 1ULL;
    if (is_prime_u32(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace kary
