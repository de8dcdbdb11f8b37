#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "ido/report.hpp"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(IDO_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("classify reports the case-study parameters") {
  CliResult r = run_cli("classify --lambda -rho");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("| X |") != std::string::npos);
  CHECK(r.out.find("| XY2X | 4 |") != std::string::npos);

  r = run_cli("classify --lambda -rho/2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("| XcY | 2 |") != std::string::npos);
  CHECK(r.out.find("(-,-)") != std::string::npos);

  r = run_cli("classify --lambda 1/3,1/5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("No intertwining differential operators") != std::string::npos);
}

TEST_CASE("parse failures name the offending token") {
  CliResult r = run_cli("classify --lambda 1/x,2");
  CHECK(r.exit_code != 0);
  CHECK(r.out.find("1/x") != std::string::npos);
}

TEST_CASE("unknown labels are rejected with the valid choices") {
  CliResult r = run_cli("ktypes --lambda -rho --u W --sigma ++ --nmax 4");
  CHECK(r.exit_code != 0);
  CHECK(r.out.find("valid labels") != std::string::npos);
  CHECK(r.out.find("XY2X") != std::string::npos);

  r = run_cli("ktypes --lambda -rho --u X --sigma ZZ --nmax 4");
  CHECK(r.exit_code != 0);
  CHECK(r.out.find("++, +-, -+, --, H") != std::string::npos);
}

TEST_CASE("ktypes emits the selected table in both formats") {
  CliResult md = run_cli("ktypes --lambda -rho --u X,Y --sigma -- --nmax 8");
  CHECK(md.exit_code == 0);
  CHECK(md.out.find("sigma = (-,-)") != std::string::npos);

  CliResult js = run_cli("ktypes --lambda -rho/2 --u XcY --sigma H --nmax 9 --format json");
  CHECK(js.exit_code == 0);
  auto doc = ido::report::from_json(ido::report::Json::parse(js.out));
  REQUIRE(doc.tables.size() == 1);
  for (const auto& row : doc.tables[0].rows)
    CHECK(row.multiplicity == (row.n % 4 == 1 ? 1 : 0));

  CliResult x20 = run_cli("ktypes --lambda -rho --u X --sigma ++ --nmax 20 --format json");
  CHECK(x20.exit_code == 0);
  auto doc20 = ido::report::from_json(ido::report::Json::parse(x20.out));
  REQUIRE(doc20.tables.size() == 1);
  for (const auto& row : doc20.tables[0].rows)
    CHECK(row.multiplicity == (row.n % 4 == 0 ? 1 : 0));
  REQUIRE(doc20.patterns.size() == 1);
  CHECK(doc20.patterns[0].fits.size() == 1);
  CHECK(doc20.patterns[0].fits[0].residue == 0);
}

TEST_CASE("selftest notices a corrupted character table") {
  CliResult r = run_cli("selftest --corrupt-chartable");
  CHECK(r.exit_code != 0);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
  std::string path = std::string(IDO_OUT_DIR) + "/cli_out_test.json";
  CliResult direct = run_cli("ktypes --lambda -rho --u X --sigma ++ --nmax 6 --format json");
  CliResult filed =
      run_cli("ktypes --lambda -rho --u X --sigma ++ --nmax 6 --format json --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(bytes == direct.out);
}
