#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kary/cli.hpp"
#include "kary/sparse_matrix.hpp"

using namespace kary;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(KARY_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("karyhom_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("golden reports") {
  CHECK(run({"compute", "--family", "heisenberg", "--k", "3", "--m", "2"}).out == golden("compute_heisenberg_3_2.json"));
  CHECK(run({"verify", "--family", "free2", "--k", "3", "--n", "4"}).out == golden("verify_free2_3_4.json"));
  CHECK(run({"decompose", "--family", "free2", "--k", "3", "--n", "4", "--degree", "3"}).out ==
        golden("decompose_free2_3_4_deg3.json"));
  CHECK(run({"table", "--toral", "--nmax", "20", "--k", "2,3,4,5", "--format", "text"}).out ==
        golden("toral_table.txt"));
  CHECK(run({"dump", "--family", "acj", "--k", "2", "--m", "1"}).out == golden("dump_acj_2_1.json"));
}

TEST_CASE("output is deterministic and independent of the thread count") {
  const auto a = run({"compute", "--family", "free2", "--k", "2", "--n", "4", "--threads", "1"});
  const auto b = run({"compute", "--family", "free2", "--k", "2", "--n", "4", "--threads", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run({"compute", "--family", "free2", "--k", "2", "--n", "4", "--threads", "1"}).out);
}

TEST_CASE("exit status contract") {
  CHECK(run({"verify", "--family", "heisenberg", "--k", "2", "--m", "2"}).code == kExitOk);
  CHECK(run({"verify", "--family", "acj", "--k", "3", "--m", "2"}).code == kExitValidatorFailed);
  CHECK(run({"compute", "--family", "heisenberg", "--k", "3", "--m", "2", "--size-cap", "5"}).code == kExitResource);
  CHECK(run({"compute"}).code == kExitUsage);
  CHECK(run({"compute", "--family", "nonsense"}).code == kExitUsage);
  CHECK(run({"compute", "--family", "heisenberg", "--k", "3", "--m", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"compute", "--family", "heisenberg", "--k", "1", "--m", "2"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"table", "--nmax", "3"}).code == kExitUsage);
  CHECK(run({"decompose", "--family", "heisenberg", "--k", "2", "--m", "1", "--degree", "1"}).code == kExitUsage);
  CHECK(run({"compute", "--family", "heisenberg", "--k", "3", "--m", "2", "--degree", "2"}).code == kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("compute") != std::string::npos);
}

TEST_CASE("dumped algebras load back through --input") {
  const auto dir = scratch_dir("dump");
  const auto path = (dir / "alg.json").string();
  {
    std::ofstream f(path);
    f << run({"dump", "--family", "free3small", "--k", "3"}).out;
  }
  const auto direct = nlohmann::json::parse(run({"compute", "--family", "free3small", "--k", "3"}).out);
  const auto loaded = nlohmann::json::parse(run({"compute", "--input", path}).out);
  CHECK(direct["degrees"] == loaded["degrees"]);
  CHECK(run({"compute", "--input", path, "--family", "heisenberg"}).code == kExitUsage);
  CHECK(run({"compute", "--input", (dir / "missing.json").string()}).code == kExitUsage);
}

TEST_CASE("single degree, csv and text formats") {
  const auto one = nlohmann::json::parse(run({"compute", "--family", "heisenberg", "--k", "3", "--m", "2", "--degree", "3"}).out);
  REQUIRE(one["degrees"].size() == 1);
  CHECK(one["degrees"][0]["betti"] == 28);
  const auto csv = run({"compute", "--family", "heisenberg", "--k", "2", "--m", "1", "--format", "csv"}).out;
  CHECK(csv == "degree,kernel,image,betti,formula,match\n0,1,0,1,,\n1,3,1,2,,\n2,2,0,2,,\n3,1,0,1,,\n");
  const auto text = run({"check", "--family", "heisenberg", "--k", "3", "--m", "1", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("PASS  generalized Jacobi") != std::string::npos);
}

TEST_CASE("MatrixMarket export of the differentials") {
  const auto dir = scratch_dir("mm");
  CHECK(run({"compute", "--family", "heisenberg", "--k", "3", "--m", "1", "--export-mm", dir.string()}).code == 0);
  std::ifstream f(dir / "d3.mtx");
  REQUIRE(f.good());
  const auto m = read_matrix_market(f);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 4);
  CHECK(m.nnz() == 1);
}
