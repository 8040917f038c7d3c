#include "kary/toral.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "kary/combinatorics.hpp"
#include "kary/errors.hpp"

namespace kary {

mpz_class refinement_bound(int dim_v, int dim_z, int k) {
  if (dim_v < 0 || dim_z < 0 || k < 2) throw InputError("refinement_bound needs dim_v, dim_z >= 0 and k >= 2");
  mpz_class sum = 0;
  for (int i = 0; i < k; ++i) {
    mpz_class inner = 0;
    for (int j = 0; k * j + i <= dim_v; ++j) {
      if (j % 2 == 0)
        inner += binomial(dim_v, k * j + i);
      else
        inner -= binomial(dim_v, k * j + i);
    }
    sum += abs(inner);
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(dim_z));
  return sum * scale;
}

double log2_of(const mpz_class& v) {
  if (v <= 0) throw InputError("log2 of a non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

std::string format_log2(const mpz_class& v) {
  if (v > 0 && mpz_popcount(v.get_mpz_t()) == 1) return std::to_string(mpz_sizeinbase(v.get_mpz_t(), 2) - 1) + ".0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", log2_of(v));
  return buf;
}

const ToralBoundRecord& ToralTable::at(int n, int k) const {
  for (const auto& r : records)
    if (r.dim_v == n && r.k == k) return r;
  throw InputError("no table entry for n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

ToralTable toral_table(int n_max, const std::vector<int>& ks) {
  if (n_max < 1) throw InputError("table needs n_max >= 1");
  if (ks.empty()) throw InputError("table needs at least one arity");
  ToralTable table;
  table.n_max = n_max;
  table.ks = ks;
  for (int n = 1; n <= n_max; ++n)
    for (int k : ks) {
      ToralBoundRecord r;
      r.dim_v = n;
      r.k = k;
      r.bound = refinement_bound(n, 0, k);
      r.log2 = log2_of(r.bound);
      r.log2_text = format_log2(r.bound);
      table.records.push_back(std::move(r));
    }
  return table;
}

std::string to_csv(const ToralTable& table) {
  std::ostringstream out;
  out << "n";
  for (int k : table.ks) out << ",k=" << k << ",log2";
  out << '\n';
  for (int n = 1; n <= table.n_max; ++n) {
    out << n;
    for (int k : table.ks) {
      const auto& r = table.at(n, k);
      out << ',' << r.bound.get_str() << ',' << r.log2_text;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const ToralTable& table) {
  std::ostringstream out;
  out << std::setw(4) << "n";
  for (int k : table.ks) out << std::setw(10) << ("k=" + std::to_string(k)) << std::setw(14) << "log2";
  out << '\n';
  for (int n = 1; n <= table.n_max; ++n) {
    out << std::setw(4) << n;
    for (int k : table.ks) {
      const auto& r = table.at(n, k);
      out << std::setw(10) << r.bound.get_str() << std::setw(14) << r.log2_text;
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ToralTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.records)
    rows.push_back({{"n", r.dim_v}, {"k", r.k}, {"bound", big_to_json(r.bound)}, {"log2", r.log2_text}});
  return {{"schema", kReportSchema}, {"table", "toral"}, {"n_max", table.n_max}, {"ks", table.ks}, {"rows", rows}};
}

bool ToralReport::all_pass() const {
  for (const auto& c : comparisons)
    if (c.asserted && !c.pass) return false;
  return true;
}

ToralReport verify_toral(const KaryAlgebra& alg, const EngineOptions& options) {
  if (!is_nilpotent(alg)) throw InputError("toral rank check needs a nilpotent algebra");
  return verify_toral(alg, betti_all(alg, options).total, options);
}

ToralReport verify_toral(const KaryAlgebra& alg, const mpz_class& layout_total, const EngineOptions& options) {
  if (!is_nilpotent(alg)) throw InputError("toral rank check needs a nilpotent algebra");
  ToralReport r;
  r.algebra = alg.name();
  r.arity = alg.arity();
  r.dim = alg.dim();
  r.center_dim = center(alg).dim();
  r.two_step = is_two_step(alg);
  r.total = layout_total;
  mpz_ui_pow_ui(r.power_of_two.get_mpz_t(), 2, static_cast<unsigned long>(r.center_dim));
  r.comparisons.push_back(compare_at_least("total homology >= 2^dim center", r.power_of_two, r.total));

  if (r.two_step) {
    r.refined_bound = refinement_bound(alg.dim() - r.center_dim, r.center_dim, alg.arity());
    const ExteriorReport ext = exterior_homology(alg, options);
    if (ext.defined) {
      r.exterior_total = ext.total;
      r.comparisons.push_back(compare_at_least("exterior total homology >= refined bound", *r.refined_bound, ext.total));
    } else {
      r.comparisons.push_back(compare_at_least("layout total homology vs refined bound", *r.refined_bound, r.total,
                                               false, "d^2 != 0 off the layout; exterior homology undefined"));
    }
    mpz_class strict = r.power_of_two + 1;
    r.comparisons.push_back(compare_at_least("refined bound > 2^dim center", strict, *r.refined_bound));
  }
  return r;
}

nlohmann::json to_json(const ToralReport& r) {
  nlohmann::json doc{{"schema", kReportSchema},       {"algebra", r.algebra},
                     {"arity", r.arity},              {"dim", r.dim},
                     {"center_dim", r.center_dim},    {"two_step", r.two_step},
                     {"total", big_to_json(r.total)}, {"power_of_two", big_to_json(r.power_of_two)}};
  if (r.refined_bound) doc["refined_bound"] = big_to_json(*r.refined_bound);
  if (r.exterior_total) doc["exterior_total"] = big_to_json(*r.exterior_total);
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.comparisons) {
    comps.push_back(to_json(c));
  }
  doc["comparisons"] = comps;
  doc["all_pass"] = r.all_pass();
  return doc;
}

}  // namespace kary
