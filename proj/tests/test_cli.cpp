#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MATWEIGHT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("verify bogus").code, 2);
  EXPECT_EQ(run("verify exact --nmax -1").code, 2);
  EXPECT_EQ(run("verify exact --k0 abc").code, 2);
  EXPECT_EQ(run("verify exact --tol 0").code, 2);
  EXPECT_EQ(run("table --format xml").code, 2);
  EXPECT_EQ(run("eval-k").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifyExactPasses) {
  const CliRun r = run("verify exact --nmax 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "exact");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["params"]["k0_exact"], "3/10");
  std::string prev;
  for (const auto& c : j["checks"]) {
    const std::string name = c["name"];
    EXPECT_LE(prev, name);
    prev = name;
    for (const char* key : {"expected", "got", "tolerance", "pass"}) EXPECT_TRUE(c.contains(key));
  }
}

TEST(Cli, VerifyQuadPassesAndOutsideRegionFails) {
  EXPECT_EQ(run("verify quad --k0 0.3 --k1 0.1 --nmax 2 --tol 1e-8").code, 0);
  const CliRun bad = run("verify quad --k0 0.3 --k1 0.3");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.out)["pass"], false);
}

TEST(Cli, VerifyJsonIsDeterministicApartFromTiming) {
  auto a = nlohmann::json::parse(run("verify all --nmax 1").out);
  auto b = nlohmann::json::parse(run("verify all --nmax 1").out);
  ASSERT_TRUE(a.contains("elapsed_ms"));
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["pass"], true);
}

TEST(Cli, VerifyCsvAndText) {
  const CliRun csv = run("verify exact --nmax 1 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(first_line(csv.out), "name,expected,got,tolerance,pass");
  const CliRun text = run("verify exact --nmax 1 --format text");
  EXPECT_NE(text.out.find("PASS: "), std::string::npos);
}

TEST(Cli, TableCsv) {
  const CliRun r = run("table --nmax 2 --k0 0 --k1 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,alpha,beta,s_p12,s_p14\n0,1,-1/2,1,-1/2\n1,1/2,-3/8,1/2,-3/8\n2,3/8,-5/16,3/8,-5/16\n");
  const CliRun sym = run("table --nmax 0");
  EXPECT_EQ(first_line(sym.out), "n,alpha,beta,s_p12,s_p14");
  EXPECT_NE(sym.out.find("k0"), std::string::npos);
  const CliRun dec = run("table --nmax 0 --k0 0.3 --k1 0.1");
  EXPECT_NE(dec.out.find("\n0,1,"), std::string::npos);
  EXPECT_NE(dec.out.find(",1.8,"), std::string::npos);
}

TEST(Cli, EvalKJson) {
  const CliRun r = run("eval-k --k0 0.3 --k1 0.1 --theta 0.3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["L"].size(), 4u);
  ASSERT_EQ(j["K"].size(), 3u);
  for (const char* key : {"u", "d1", "d2", "detK"}) EXPECT_TRUE(j.contains(key)) << key;
  const double k11 = j["K"][0], k12 = j["K"][1], k22 = j["K"][2];
  EXPECT_NEAR(j["detK"].get<double>(), k11 * k22 - k12 * k12, 1e-12);
  const double pi = std::numbers::pi;
  EXPECT_NEAR(j["detK"].get<double>(), std::cos(0.4 * pi) * std::cos(0.2 * pi) / (4 * pi * pi), 1e-10);
  EXPECT_DOUBLE_EQ(j["u"].get<double>(), std::tan(0.3));
}

TEST(Cli, EvalKAtZeroParameters) {
  const auto j = nlohmann::json::parse(run("eval-k --k0 0 --k1 0 --theta 0.5").out);
  const double c = 1.0 / (2.0 * std::numbers::pi);
  EXPECT_NEAR(j["K"][0].get<double>(), c, 1e-15);
  EXPECT_EQ(j["K"][1].get<double>(), 0.0);
  EXPECT_NEAR(j["K"][2].get<double>(), c, 1e-15);
}

TEST(Cli, EvalKOutOfRegionExitsOne) {
  EXPECT_EQ(run("eval-k --k0 0.3 --k1 0.3 --theta 0.3").code, 1);
  EXPECT_EQ(run("eval-k --k0 0.1 --k1 0.1 --theta 1.0").code, 1);
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "matweight_cli_test_table.csv";
  std::filesystem::remove(path);
  const CliRun r = run("table --nmax 1 --k0 0 --k1 0 --out " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(first_line(ss.str()), "n,alpha,beta,s_p12,s_p14");
  std::filesystem::remove(path);
}
