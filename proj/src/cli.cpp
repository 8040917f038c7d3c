#include "kary/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kary/algebra_io.hpp"
#include "kary/combinatorics.hpp"
#include "kary/complex.hpp"
#include "kary/errors.hpp"
#include "kary/families.hpp"
#include "kary/homology.hpp"
#include "kary/parallel.hpp"
#include "kary/schur.hpp"
#include "kary/toral.hpp"

namespace kary {

namespace {

struct Request {
  std::string family;
  std::string inner;
  int k = 0;
  int m = 0;
  int n = 0;
  int j = 0;
  std::string input;
  std::optional<int> degree;
  std::string format = "json";
  std::uint64_t size_cap = EngineOptions{}.size_cap;
  unsigned threads = default_threads();
  std::string export_mm;
  bool toral = false;
  int nmax = 20;
  std::vector<int> ks{2, 3, 4, 5};
};

void add_source_options(CLI::App* cmd, Request& r) {
  cmd->add_option("--family", r.family, "heisenberg | acj | free2 | free3small | abelian | current");
  cmd->add_option("--inner", r.inner, "family wrapped by --family current");
  cmd->add_option("--k", r.k, "arity");
  cmd->add_option("--m", r.m, "number of bracket blocks (heisenberg, acj)");
  cmd->add_option("--n", r.n, "generator count (free2) or dimension (abelian)");
  cmd->add_option("--j", r.j, "truncation order (current)");
  cmd->add_option("--input", r.input, "algebra JSON file");
}

void add_engine_options(CLI::App* cmd, Request& r) {
  cmd->add_option("--format", r.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--size-cap", r.size_cap, "largest chain space allowed");
  cmd->add_option("--threads", r.threads, "worker threads")->check(CLI::PositiveNumber);
}

KaryAlgebra build_algebra(const Request& r) {
  const bool from_file = !r.input.empty();
  if (from_file == !r.family.empty()) throw InputError("give exactly one of --family or --input");
  if (from_file) return load_algebra(r.input);
  FamilySpec spec{r.family, r.k, r.m, r.n, r.j, nullptr};
  if (r.family == "current") {
    if (r.inner.empty()) throw InputError("--family current needs --inner");
    spec.inner = std::make_shared<FamilySpec>(FamilySpec{r.inner, r.k, r.m, r.n, 0, nullptr});
  }
  return build_family(spec);
}

EngineOptions engine(const Request& r) {
  EngineOptions o;
  o.size_cap = r.size_cap;
  o.threads = r.threads;
  return o;
}

std::string render(const HomologyReport& report, const std::string& format) {
  if (format == "csv") return to_csv(report);
  if (format == "text") return to_text(report);
  return to_json(report).dump(2) + "\n";
}

HomologyReport single_degree_report(const KaryAlgebra& alg, int t, const EngineOptions& options) {
  const ChainLayout layout(alg);
  if (!layout.contains(t)) throw InputError("degree " + std::to_string(t) + " is not in the chain layout");
  const int k = alg.arity();
  HomologyReport report;
  report.algebra = alg.name();
  report.arity = k;
  report.dim = alg.dim();
  const auto ranks = differential_ranks(alg, {t, t + k - 1}, options);
  DegreeRecord rec;
  rec.degree = t;
  rec.chain_dim = binomial_u64(alg.dim(), t);
  rec.rank_out = ranks.at(t).rank;
  rec.kernel = rec.chain_dim - rec.rank_out;
  rec.image = ranks.at(t + k - 1).rank;
  rec.betti = rec.kernel - rec.image;
  report.total = rec.betti;
  // a single degree carries no Euler information; keep both sides equal
  report.degrees.push_back(rec);
  return report;
}

void export_differentials(const KaryAlgebra& alg, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const ChainLayout layout(alg);
  for (int t : layout.degrees) {
    if (t < alg.arity()) continue;
    std::ofstream f(std::filesystem::path(dir) / ("d" + std::to_string(t) + ".mtx"));
    if (!f) throw InputError("cannot write into " + dir);
    write_matrix_market(f, differential_matrix(alg, t));
  }
}

int cmd_compute(const Request& r, std::ostream& out) {
  const KaryAlgebra alg = build_algebra(r);
  const EngineOptions opts = engine(r);
  if (!r.export_mm.empty()) export_differentials(alg, r.export_mm);
  const HomologyReport report = r.degree ? single_degree_report(alg, *r.degree, opts) : betti_all(alg, opts);
  out << render(report, r.format);
  return kExitOk;
}

void add_free2_bounds(const KaryAlgebra& alg, const Request& r, HomologyReport& report) {
  const int k = alg.arity();
  const int n = r.n;
  for (const auto& rec : report.degrees) {
    if (rec.degree < k) continue;
    const int i = (rec.degree - 1) / (k - 1);
    const std::string h = "H^" + std::to_string(rec.degree);
    if (i >= 2)
      report.comparisons.push_back(compare_at_least(h + " >= lower bound (x = C(n,k))", lower_bound_betti(n, k, i),
                                                    mpz_class(static_cast<unsigned long>(rec.betti))));
    if (rec.degree == k)
      report.comparisons.push_back(compare_at_least(h + " >= second homology bound", second_homology_bound(n, k),
                                                    mpz_class(static_cast<unsigned long>(rec.betti))));
  }
}

int cmd_verify(const Request& r, std::ostream& out) {
  const KaryAlgebra alg = build_algebra(r);
  const EngineOptions opts = engine(r);
  HomologyReport report;
  if (r.family == "heisenberg")
    report = verify_heisenberg(r.k, r.m, opts);
  else if (r.family == "acj")
    report = verify_acj(r.k, r.m, opts);
  else if (r.family == "free3small" || r.family == "free3")
    report = verify_free3(r.k, opts);
  else
    report = betti_all(alg, opts);
  if (r.family == "free2") add_free2_bounds(alg, r, report);

  report.comparisons.push_back(compare("generalized Jacobi violations", 0, check_jacobi(alg).size()));
  report.comparisons.push_back(compare("degrees with d^2 != 0", 0, verify_d_squared(alg).size()));
  report.comparisons.push_back(compare("Euler characteristic", report.euler_chain, report.euler_betti));
  if (is_nilpotent(alg)) {
    const ToralReport toral = verify_toral(alg, report.total, opts);
    for (const auto& c : toral.comparisons) report.comparisons.push_back(c);
  } else {
    report.comparisons.push_back(compare("nilpotent", 1, 0, false, "toral checks skipped"));
  }
  out << render(report, r.format);
  return report.all_pass() ? kExitOk : kExitValidatorFailed;
}

int cmd_table(const Request& r, std::ostream& out) {
  if (!r.toral) throw InputError("table needs --toral (the only table kind)");
  const ToralTable table = toral_table(r.nmax, r.ks);
  if (r.format == "csv")
    out << to_csv(table);
  else if (r.format == "text")
    out << to_text(table);
  else
    out << to_json(table).dump(2) << '\n';
  return kExitOk;
}

int cmd_decompose(const Request& r, std::ostream& out) {
  if (!r.degree) throw InputError("decompose needs --degree");
  const KaryAlgebra alg = build_algebra(r);
  const SchurDecomposition d = decompose_character(character_by_weights(alg, *r.degree, engine(r)));
  if (r.format == "text") {
    out << to_text(d);
  } else if (r.format == "csv") {
    out << "partition,multiplicity,dimension\n";
    for (const auto& s : d.summands)
      out << '"' << partition_to_string(s.partition) << "\"," << s.multiplicity << ','
          << schur_dim(s.partition, d.n).get_str() << '\n';
  } else {
    nlohmann::json doc = to_json(d);
    doc["algebra"] = alg.name();
    doc["degree"] = *r.degree;
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_check(const Request& r, std::ostream& out) {
  const KaryAlgebra alg = build_algebra(r);
  const auto jacobi = check_jacobi(alg);
  const auto layout = verify_d_squared(alg, DegreeScope::Layout);
  const auto all = verify_d_squared(alg, DegreeScope::All);
  const bool ok = jacobi.empty() && layout.empty();
  if (r.format == "json") {
    nlohmann::json doc{{"schema", kReportSchema},
                       {"algebra", alg.name()},
                       {"jacobi_violations", jacobi},
                       {"d_squared_failures", layout},
                       {"d_squared_failures_all_degrees", all},
                       {"pass", ok}};
    out << doc.dump(2) << '\n';
  } else {
    out << (jacobi.empty() ? "PASS" : "FAIL") << "  generalized Jacobi (" << jacobi.size() << " violations)\n";
    out << (layout.empty() ? "PASS" : "FAIL") << "  d^2 = 0 on the chain layout\n";
    out << "INFO  degrees with d^2 != 0 over all exterior degrees: " << all.size() << '\n';
  }
  return ok ? kExitOk : kExitValidatorFailed;
}

int cmd_dump(const Request& r, std::ostream& out) {
  out << algebra_to_json(build_algebra(r)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homology of nilpotent k-ary Lie algebras", "karyhom"};
  app.require_subcommand(1);
  Request r;

  auto* compute = app.add_subcommand("compute", "Betti numbers of one algebra");
  add_source_options(compute, r);
  add_engine_options(compute, r);
  compute->add_option("--degree", r.degree, "single chain degree");
  compute->add_option("--export-mm", r.export_mm, "write each differential as MatrixMarket into this directory");

  auto* verify = app.add_subcommand("verify", "Run every applicable validator");
  add_source_options(verify, r);
  add_engine_options(verify, r);

  auto* table = app.add_subcommand("table", "Refinement bound table");
  table->add_flag("--toral", r.toral, "toral rank bound table");
  table->add_option("--nmax", r.nmax, "largest n")->check(CLI::PositiveNumber);
  table->add_option("--k", r.ks, "arities, comma separated")->delimiter(',');
  table->add_option("--format", r.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* decompose = app.add_subcommand("decompose", "Schur decomposition of one homology group");
  add_source_options(decompose, r);
  add_engine_options(decompose, r);
  decompose->add_option("--degree", r.degree, "chain degree");

  auto* check = app.add_subcommand("check", "Jacobi identity and d^2 = 0 only");
  add_source_options(check, r);
  check->add_option("--format", r.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* dump = app.add_subcommand("dump", "Print the algebra as JSON");
  add_source_options(dump, r);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(r, out);
    if (*verify) return cmd_verify(r, out);
    if (*table) return cmd_table(r, out);
    if (*decompose) return cmd_decompose(r, out);
    if (*check) return cmd_check(r, out);
    if (*dump) return cmd_dump(r, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace kary
