#pragma once

#include <memory>
#include <string>

#include "kary/core.hpp"

namespace kary {

/// k-ary Heisenberg algebra: basis x^j_i (j in [1,k], i in [1,m]) then z,
/// with the only brackets [x^1_i, ..., x^k_i] = z.
KaryAlgebra heisenberg(int k, int m);

/// k-ary ACJ algebra: basis z then x^j_i, with [z, x^1_i, ..., x^{k-1}_i] = x^k_i.
KaryAlgebra acj(int k, int m);

/// Free 2-step nilpotent k-ary algebra V + Lambda^k V, dim V = n. Basis e_1..e_n
/// then w_S for the k-subsets S in lexicographic order; [e_S] = w_S. Graded by
/// Z^n with e_i -> eps_i.
KaryAlgebra free_two_step(int k, int n);

/// Free 3-step nilpotent k-ary algebra on k generators: x_1..x_k, y = [x_1..x_k],
/// z_i = [x_1..^x_i..x_k, y]. Graded by Z^k.
KaryAlgebra free_three_step_small(int k);

/// Abelian algebra of the given arity and dimension.
KaryAlgebra abelian(int k, int n);

/// Truncated current algebra g (x) C[t]/t^j; basis b (x) t^p stored at p*dim + b.
KaryAlgebra current_algebra(const KaryAlgebra& alg, int j);

/// CLI-facing parameter carrier.
struct FamilySpec {
  std::string family;  // heisenberg | acj | free2 | free3small | abelian | current
  int k = 0;
  int m = 0;
  int n = 0;
  int j = 0;
  std::shared_ptr<FamilySpec> inner;  // for current
};

KaryAlgebra build_family(const FamilySpec& spec);

}  // namespace kary
