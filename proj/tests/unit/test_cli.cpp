#include <doctest.h>

#include "vpv/audit.hpp"
#include "vpv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run vpv_run(std::vector<std::string> args) {
  args.insert(args.begin(), "vpv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = vpv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute subcommands") {
  CHECK(vpv_run({"compute", "ramanujan", "--k", "2", "--n", "1,1"}).out == "-1\n");
  CHECK(vpv_run({"compute", "ramanujan", "--k", "6", "--n", "-3,6"}).out == "-8\n");
  CHECK(vpv_run({"compute", "jordan", "--m", "2", "--k", "4"}).out == "12\n");
  CHECK(vpv_run({"compute", "phi", "--t", "1", "--m", "2", "--k", "2"}).out == "2\n");  // 1/2 + 1/2 + 1
  CHECK(vpv_run({"compute", "mphi", "--m", "2", "--k", "4"}).out == "2\n");
  CHECK(vpv_run({"compute", "sigma", "--s", "-1", "--n", "6"}).out == "2\n");
  CHECK(vpv_run({"compute", "stirling", "--n", "5", "--j", "2"}).out == "15\n");
  CHECK(vpv_run({"compute", "bernoulli", "--a", "1"}).out == "-1/2\n");
}

TEST_CASE("series subcommand") {
  CHECK(vpv_run({"series", "--product", "partition", "--order", "5"}).out == "1,1,2,3,5,7\n");
  const auto jordan = vpv_run({"series", "--product", "jordan", "--m", "2", "--order", "8"});
  CHECK(jordan.code == 0);
  CHECK(jordan.out == vpv_run({"series", "--exp-sum", "k^1 z^k", "--order", "8"}).out);
  CHECK(vpv_run({"series", "--exp-sum", "nonsense", "--order", "8"}).code == vpv::cli::kUsage);
}

TEST_CASE("lattice subcommand") {
  const auto r = vpv_run({"lattice", "--max", "8"});
  CHECK(r.code == 0);
  const std::string figure =
      "• x • x • x • x\n• • • • • • x •\n• x x x • x • x\n• • • • x • • •\n"
      "• x • x • x • x\n• • x • • x • •\n• x • x • x • x\n• • • • • • • •\n";
  CHECK(r.out == figure);
  CHECK(vpv_run({"lattice", "--dims", "3", "--max", "5"}).out.find("visible=115") != std::string::npos);
  CHECK(vpv_run({"lattice", "--max", "300"}).code == vpv::cli::kUsage);
}

TEST_CASE("exit codes") {
  CHECK(vpv_run({}).code == vpv::cli::kUsage);
  CHECK(vpv_run({"--help"}).code == vpv::cli::kOk);
  CHECK(vpv_run({"audit", "--id", "eq-4.13,eq-2.6"}).code == vpv::cli::kOk);
  CHECK(vpv_run({"audit", "--id", "eq-99.1"}).code == vpv::cli::kUsage);
  CHECK(vpv_run({"audit", "--id", "eq-4.13", "--out", "/nonexistent-dir/report.txt"}).code == vpv::cli::kIo);
  CHECK(vpv_run({"compute", "jordan", "--m", "2"}).code == vpv::cli::kUsage);
}

TEST_CASE("JSON audit output parses with the report schema") {
  const auto r = vpv_run({"audit", "--id", "cor-5.18b,eq-2.6", "--format", "json", "--seed", "4"});
  CHECK(r.code == 0);
  const auto report = vpv::audit::from_json(r.out);
  CHECK(report.seed == 4);
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].id == "cor-5.18b");
  CHECK(report.entries[0].status == vpv::audit::Status::FailsAsPrinted);
  CHECK(r.err.find("unexpected=0") != std::string::npos);

  const std::string path = "vpv_cli_test_report.json";
  const auto w = vpv_run({"audit", "--id", "eq-2.6", "--format", "json", "--out", path});
  CHECK(w.code == 0);
  CHECK(w.out.find("audited 1 identities") != std::string::npos);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(vpv::audit::from_json(ss.str()).entries.size() == 1);
  std::remove(path.c_str());
}
