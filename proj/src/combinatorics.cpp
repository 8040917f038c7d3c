#include "kary/combinatorics.hpp"

#include <numeric>

#include "kary/errors.hpp"

namespace kary {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class b = binomial(n, k);
  if (!b.fits_ulong_p()) throw ResourceError("binomial coefficient exceeds 64 bits");
  return b.get_ui();
}

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  do {
    out.push_back(c);
  } while (next_combination(c, n));
  return out;
}

}  // namespace kary
