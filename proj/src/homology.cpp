#include "kary/homology.hpp"

#include <algorithm>
#include <sstream>

#include "kary/combinatorics.hpp"
#include "kary/errors.hpp"
#include "kary/families.hpp"
#include "kary/parallel.hpp"
#include "kary/rank.hpp"
#include "kary/toral.hpp"

namespace kary {

namespace {

void check_cap(const KaryAlgebra& alg, int t, const EngineOptions& options) {
  if (t < 0 || t > alg.dim()) return;
  if (binomial(alg.dim(), t) > mpz_class(static_cast<unsigned long>(options.size_cap)))
    throw ResourceError("chain space of degree " + std::to_string(t) + " has " + binomial(alg.dim(), t).get_str() +
                        " monomials, above the size cap of " + std::to_string(options.size_cap));
}

std::uint64_t chain_dim(const KaryAlgebra& alg, int t) { return binomial_u64(alg.dim(), t); }

mpz_class from_u64(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

}  // namespace

std::map<int, DegreeRank> differential_ranks(const KaryAlgebra& alg, const std::vector<int>& degrees,
                                             const EngineOptions& options) {
  std::vector<int> live;
  std::map<int, DegreeRank> out;
  for (int t : degrees) {
    out[t].degree = t;
    if (t >= alg.arity() && t <= alg.dim()) {
      check_cap(alg, t, options);
      check_cap(alg, t - alg.arity() + 1, options);
      live.push_back(t);
    }
  }
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());

  const bool blocked = options.use_weight_blocks && alg.has_weights() && is_weight_additive(alg);
  std::vector<std::vector<WeightBlock>> per_degree(live.size());
  parallel_for(live.size(), options.threads, [&](std::size_t i) {
    const int t = live[i];
    if (blocked) {
      per_degree[i] = weight_blocks(alg, t);
    } else {
      WeightBlock whole;
      whole.matrix = differential_matrix(alg, t);
      per_degree[i].push_back(std::move(whole));
    }
  });

  struct Job {
    std::size_t degree_slot;
    std::size_t block_slot;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < per_degree.size(); ++i)
    for (std::size_t b = 0; b < per_degree[i].size(); ++b) jobs.push_back({i, b});
  // largest eliminations first so stragglers overlap with small ones
  std::stable_sort(jobs.begin(), jobs.end(), [&](const Job& a, const Job& b) {
    return per_degree[a.degree_slot][a.block_slot].matrix.nnz() > per_degree[b.degree_slot][b.block_slot].matrix.nnz();
  });
  std::vector<std::size_t> ranks(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t j) {
    ranks[j] = rank(per_degree[jobs[j].degree_slot][jobs[j].block_slot].matrix);
  });

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const int t = live[jobs[j].degree_slot];
    const WeightBlock& block = per_degree[jobs[j].degree_slot][jobs[j].block_slot];
    DegreeRank& dr = out[t];
    dr.rank += ranks[j];
    if (blocked) {
      dr.block_rank[block.weight] = ranks[j];
      dr.block_cols[block.weight] = block.cols.size();
    }
  }
  return out;
}

Comparison compare(std::string name, const mpz_class& expected, const mpz_class& actual, bool asserted,
                   std::string note) {
  Comparison c{std::move(name), expected, actual, asserted, expected == actual, std::move(note)};
  return c;
}

Comparison compare_at_least(std::string name, const mpz_class& bound, const mpz_class& actual, bool asserted,
                            std::string note) {
  Comparison c{std::move(name), bound, actual, asserted, actual >= bound, std::move(note)};
  return c;
}

const DegreeRecord& HomologyReport::at(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return d;
  throw InputError("degree " + std::to_string(degree) + " is not in the chain layout");
}

bool HomologyReport::all_pass() const {
  if (!euler_holds()) return false;
  return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.asserted || c.pass; });
}

HomologyReport betti_all(const KaryAlgebra& alg, const EngineOptions& options) {
  const ChainLayout layout(alg);
  const int k = alg.arity();
  std::vector<int> needed;
  for (int t : layout.degrees) {
    check_cap(alg, t, options);
    needed.push_back(t);
    needed.push_back(t + k - 1);
  }
  const auto ranks = differential_ranks(alg, needed, options);

  HomologyReport report;
  report.algebra = alg.name();
  report.arity = k;
  report.dim = alg.dim();
  for (std::size_t pos = 0; pos < layout.degrees.size(); ++pos) {
    const int t = layout.degrees[pos];
    DegreeRecord rec;
    rec.degree = t;
    rec.chain_dim = chain_dim(alg, t);
    rec.rank_out = ranks.at(t).rank;
    rec.kernel = rec.chain_dim - rec.rank_out;
    rec.image = ranks.at(t + k - 1).rank;
    if (rec.image > rec.kernel) throw ConsistencyError("image exceeds kernel at degree " + std::to_string(t));
    rec.betti = rec.kernel - rec.image;
    const int sign = pos % 2 == 0 ? 1 : -1;
    report.euler_chain += sign * from_u64(rec.chain_dim);
    report.euler_betti += sign * from_u64(rec.betti);
    report.total += from_u64(rec.betti);
    report.degrees.push_back(rec);
  }
  return report;
}

std::uint64_t betti(const KaryAlgebra& alg, int t, const EngineOptions& options) {
  const ChainLayout layout(alg);
  if (!layout.contains(t)) throw InputError("degree " + std::to_string(t) + " is not in the chain layout");
  if (t == 0) return 1;
  const int k = alg.arity();
  check_cap(alg, t, options);
  const auto ranks = differential_ranks(alg, {t, t + k - 1}, options);
  return chain_dim(alg, t) - ranks.at(t).rank - ranks.at(t + k - 1).rank;
}

ExteriorReport exterior_homology(const KaryAlgebra& alg, const EngineOptions& options) {
  ExteriorReport out;
  const int k = alg.arity();
  std::vector<int> degrees;
  for (int t = 0; t <= alg.dim(); ++t) {
    check_cap(alg, t, options);
    degrees.push_back(t);
  }
  out.d_squared_failures = verify_d_squared(alg, DegreeScope::All);
  out.defined = out.d_squared_failures.empty();
  const auto ranks = differential_ranks(alg, degrees, options);
  for (int t = 0; t <= alg.dim(); ++t) {
    const std::uint64_t in = t + k - 1 <= alg.dim() ? ranks.at(t + k - 1).rank : 0;
    const std::uint64_t kernel = chain_dim(alg, t) - ranks.at(t).rank;
    // without d^2 = 0 the difference is only a formal count; clamp at zero
    const std::uint64_t b = kernel >= in ? kernel - in : 0;
    out.betti.push_back(b);
    out.total += from_u64(b);
  }
  return out;
}

// ---- Heisenberg ----------------------------------------------------------

mpz_class heisenberg_betti_formula(int k, int m, int i) {
  return binomial(k * m, i * (k - 1) + 1) - binomial(k * m, (i - 1) * (k - 1));
}

mpz_class heisenberg_image_formula(int k, int m, int i) { return binomial(k * m, (i - 1) * (k - 1)); }

int heisenberg_valid_max_i(int k, int m) { return ((k * m + 1) / 2 - 1) / (k - 1); }

HomologyReport verify_heisenberg(int k, int m, const EngineOptions& options) {
  const KaryAlgebra alg = heisenberg(k, m);
  HomologyReport report = betti_all(alg, options);
  const int max_i = heisenberg_valid_max_i(k, m);
  for (auto& rec : report.degrees) {
    if (rec.degree < 1) continue;
    if (rec.degree == 1 && k > 2) {
      // i = 0 is not covered by the closed form
      continue;
    }
    const int i = (rec.degree - 1) / (k - 1);
    if (i < 1) continue;
    const bool in_range = i <= max_i;
    const std::string note = in_range ? "" : "outside the stated validity range; report only";
    const mpz_class f = heisenberg_betti_formula(k, m, i);
    rec.formula = f;
    rec.match = f == rec.betti;
    report.comparisons.push_back(
        compare("H^" + std::to_string(rec.degree) + " closed form", f, from_u64(rec.betti), in_range, note));
    report.comparisons.push_back(compare("rank d_" + std::to_string(rec.degree) + " closed form",
                                         heisenberg_image_formula(k, m, i), from_u64(rec.rank_out), in_range, note));
  }
  return report;
}

// ---- ACJ -----------------------------------------------------------------

std::optional<Index> acj_shape(const KaryAlgebra& alg) {
  if (alg.brackets().empty()) return std::nullopt;
  for (Index z = 0; z < alg.dim(); ++z) {
    bool ok = true;
    for (const auto& [key, value] : alg.brackets()) {
      if (std::find(key.begin(), key.end(), z) == key.end()) ok = false;
      for (const Term& t : value)
        if (t.index == z) ok = false;
      if (!ok) break;
    }
    if (ok) return z;
  }
  return std::nullopt;
}

ThetaMap theta_matrix(const KaryAlgebra& alg, int j) {
  const auto z = acj_shape(alg);
  if (!z) throw InputError("algebra has no codimension-one abelian ideal of ACJ shape");
  const int k = alg.arity();
  ThetaMap theta;
  theta.degree = j;
  theta.z = *z;
  for (Index i = 0; i < alg.dim(); ++i)
    if (i != *z) theta.ideal_basis.push_back(i);
  const int a = static_cast<int>(theta.ideal_basis.size());
  std::vector<int> local(static_cast<std::size_t>(alg.dim()), -1);
  for (int i = 0; i < a; ++i) local[static_cast<std::size_t>(theta.ideal_basis[static_cast<std::size_t>(i)])] = i;

  const int target = j - k + 2;
  const std::size_t nrows = target >= 0 && target <= a ? binomial_u64(a, target) : 0;
  if (j < 0 || j > a) {
    theta.matrix = SparseIntMatrix(nrows, 0);
    return theta;
  }
  const auto domain = wedge_basis(a, j);
  std::vector<SparseIntMatrix::Column> cols(domain.size());
  if (j >= k - 1) {
    const ShuffleSet shuffles(j, k - 1);
    for (std::size_t c = 0; c < domain.size(); ++c) {
      const auto idx = domain[c].indices();
      for (const auto& s : shuffles.shuffles()) {
        IndexTuple args{*z};
        for (int p : s.selected) args.push_back(theta.ideal_basis[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])]);
        Mask rest = 0;
        for (int p : s.rest) rest |= Mask{1} << idx[static_cast<std::size_t>(p)];
        for (const Term& t : bracket(alg, args)) {
          const int b = local[static_cast<std::size_t>(t.index)];
          if ((rest >> b) & 1U) continue;
          const int below = std::popcount(rest & ((Mask{1} << b) - 1));
          const long sign = s.sign * (below % 2 == 0 ? 1 : -1);
          cols[c].push_back({lex_rank(WedgeMonomial(rest | (Mask{1} << b)), a), mpz_class(sign * t.coeff)});
        }
      }
    }
  }
  theta.matrix = SparseIntMatrix::from_columns(nrows, std::move(cols));
  return theta;
}

ThetaHomology acj_homology_via_theta(const KaryAlgebra& alg, int alpha) {
  const ChainLayout layout(alg);
  if (!layout.contains(alpha)) throw InputError("alpha is not a chain degree");
  const int k = alg.arity();
  const int a = alg.dim() - 1;
  auto kernel_of = [&](int j) -> std::uint64_t {
    if (j < 0 || j > a) return 0;
    return kernel_dim(theta_matrix(alg, j).matrix);
  };
  ThetaHomology out;
  out.alpha = alpha;
  out.chain_term = binomial(a, alpha) - binomial(a, alpha + k - 2);
  out.kernel_low = kernel_of(alpha - 1);
  out.kernel_high = kernel_of(alpha + k - 2);
  out.value = out.chain_term + from_u64(out.kernel_low) + from_u64(out.kernel_high);
  return out;
}

mpz_class acj_second_homology_formula(int k, int m) {
  return binomial(k * m + 1, k) - m * binomial(k * m - k, k - 1) - binomial(m + 1, 2);
}

mpz_class acj_k2_betti_formula(int m, int i) { return binomial(m + 1, (i + 1) / 2) * binomial(m, i / 2); }

HomologyReport verify_acj(int k, int m, const EngineOptions& options) {
  const KaryAlgebra alg = acj(k, m);
  HomologyReport report = betti_all(alg, options);
  for (auto& rec : report.degrees) {
    const std::string h = "H^" + std::to_string(rec.degree);
    const ThetaHomology th = acj_homology_via_theta(alg, rec.degree);
    report.comparisons.push_back(compare(h + " via theta kernels", th.value, from_u64(rec.betti)));
    if (k == 2) {
      const mpz_class f = acj_k2_betti_formula(m, rec.degree);
      rec.formula = f;
      rec.match = f == rec.betti;
      report.comparisons.push_back(compare(h + " k=2 closed form", f, from_u64(rec.betti)));
    }
    if (rec.degree == k) {
      const mpz_class f = acj_second_homology_formula(k, m);
      if (k != 2) {
        rec.formula = f;
        rec.match = f == rec.betti;
      }
      report.comparisons.push_back(compare(h + " second-homology closed form", f, from_u64(rec.betti)));
    }
  }
  return report;
}

// ---- free 3-step -----------------------------------------------------------

std::vector<mpz_class> free3_betti_formula(int k) {
  if (k == 3) return {3, 24, 14, 1};
  return {k, binomial(2 * k + 1, k) - (3 * k + 2), mpz_class((2 * k + 1) * (k - 1))};
}

HomologyReport verify_free3(int k, const EngineOptions& options) {
  const KaryAlgebra alg = free_three_step_small(k);
  HomologyReport report = betti_all(alg, options);
  const auto f = free3_betti_formula(k);
  std::vector<int> degrees{1, k, 2 * k - 1};
  if (k == 3) degrees.push_back(7);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (auto& rec : report.degrees) {
      if (rec.degree != degrees[i]) continue;
      rec.formula = f[i];
      rec.match = f[i] == rec.betti;
      report.comparisons.push_back(compare("H^" + std::to_string(rec.degree) + " closed form", f[i], from_u64(rec.betti)));
    }
  }
  return report;
}

// ---- property M ------------------------------------------------------------

PropertyMReport property_m_check(const KaryAlgebra& alg, int j, const EngineOptions& options) {
  const KaryAlgebra cur = current_algebra(alg, j);
  PropertyMReport r;
  r.algebra = alg.name();
  r.truncation = j;
  r.current_dim = cur.dim();
  r.current_two_step = is_two_step(cur);
  r.current_center_dim = center(cur).dim();

  r.layout_total_alg = betti_all(alg, options).total;
  r.layout_total_current = betti_all(cur, options).total;
  mpz_pow_ui(r.layout_power.get_mpz_t(), r.layout_total_alg.get_mpz_t(), static_cast<unsigned long>(j));

  const ExteriorReport ea = exterior_homology(alg, options);
  const ExteriorReport ec = exterior_homology(cur, options);
  r.exterior_defined = ea.defined && ec.defined;
  r.exterior_total_alg = ea.total;
  r.exterior_total_current = ec.total;
  mpz_pow_ui(r.exterior_power.get_mpz_t(), r.exterior_total_alg.get_mpz_t(), static_cast<unsigned long>(j));

  r.dimension_bound = refinement_bound(cur.dim(), 0, cur.arity());
  if (r.current_two_step)
    r.center_bound = refinement_bound(cur.dim() - r.current_center_dim, r.current_center_dim, cur.arity());
  r.layout_equal = r.layout_total_current == r.layout_power;
  r.exterior_equal = r.exterior_total_current == r.exterior_power;
  return r;
}

// ---- serialization ---------------------------------------------------------

nlohmann::json big_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json to_json(const Comparison& c) {
  nlohmann::json e{{"name", c.name},
                   {"expected", big_to_json(c.expected)},
                   {"actual", big_to_json(c.actual)},
                   {"asserted", c.asserted},
                   {"pass", c.pass}};
  if (!c.note.empty()) e["note"] = c.note;
  return e;
}

nlohmann::json to_json(const HomologyReport& report) {
  nlohmann::json doc;
  doc["schema"] = kReportSchema;
  doc["algebra"] = report.algebra;
  doc["arity"] = report.arity;
  doc["dim"] = report.dim;
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& d : report.degrees) {
    nlohmann::json e{{"degree", d.degree}, {"chain_dim", d.chain_dim}, {"kernel", d.kernel},
                     {"image", d.image},   {"betti", d.betti}};
    if (d.formula) e["formula"] = big_to_json(*d.formula);
    if (d.match) e["match"] = *d.match;
    degrees.push_back(std::move(e));
  }
  doc["degrees"] = degrees;
  doc["total"] = big_to_json(report.total);
  doc["euler"] = {{"chain", big_to_json(report.euler_chain)},
                  {"betti", big_to_json(report.euler_betti)},
                  {"holds", report.euler_holds()}};
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : report.comparisons) {
    comps.push_back(to_json(c));
  }
  doc["comparisons"] = comps;
  doc["all_pass"] = report.all_pass();
  return doc;
}

nlohmann::json to_json(const PropertyMReport& r) {
  nlohmann::json doc{{"schema", kReportSchema},
                     {"algebra", r.algebra},
                     {"truncation", r.truncation},
                     {"current_dim", r.current_dim},
                     {"current_two_step", r.current_two_step},
                     {"current_center_dim", r.current_center_dim},
                     {"layout", {{"total_alg", big_to_json(r.layout_total_alg)},
                                 {"total_current", big_to_json(r.layout_total_current)},
                                 {"total_power", big_to_json(r.layout_power)},
                                 {"equal", r.layout_equal}}},
                     {"exterior", {{"defined", r.exterior_defined},
                                   {"total_alg", big_to_json(r.exterior_total_alg)},
                                   {"total_current", big_to_json(r.exterior_total_current)},
                                   {"total_power", big_to_json(r.exterior_power)},
                                   {"equal", r.exterior_equal}}},
                     {"dimension_bound", big_to_json(r.dimension_bound)}};
  if (r.center_bound) doc["center_bound"] = big_to_json(*r.center_bound);
  return doc;
}

std::string to_csv(const HomologyReport& report) {
  std::ostringstream out;
  out << "degree,kernel,image,betti,formula,match\n";
  for (const auto& d : report.degrees) {
    out << d.degree << ',' << d.kernel << ',' << d.image << ',' << d.betti << ',';
    if (d.formula) out << d.formula->get_str();
    out << ',';
    if (d.match) out << (*d.match ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

std::string to_text(const HomologyReport& report) {
  std::ostringstream out;
  out << report.algebra << "  (arity " << report.arity << ", dim " << report.dim << ")\n";
  for (const auto& d : report.degrees) {
    out << "  H^" << d.degree << " = " << d.betti << "   [chain " << d.chain_dim << ", kernel " << d.kernel
        << ", image " << d.image << "]";
    if (d.formula) out << "   formula " << d.formula->get_str() << (d.match.value_or(false) ? " ok" : " MISMATCH");
    out << '\n';
  }
  out << "  total = " << report.total.get_str() << "   euler " << report.euler_betti.get_str()
      << (report.euler_holds() ? " ok" : " MISMATCH") << '\n';
  for (const auto& c : report.comparisons) {
    const char* tag = !c.asserted ? "INFO" : (c.pass ? "PASS" : "FAIL");
    out << tag << "  " << c.name << ": expected " << c.expected.get_str() << ", actual " << c.actual.get_str();
    if (!c.note.empty()) out << "  (" << c.note << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace kary
