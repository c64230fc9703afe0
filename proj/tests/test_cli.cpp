#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hecke/cli.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hecke::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(Cli, Index) {
  EXPECT_EQ(run({"index", "6"}).out, "12\n");
  EXPECT_EQ(run({"index", "1"}).out, "1\n");
  EXPECT_EQ(run({"index", "6"}).code, 0);
}

TEST(Cli, Points) {
  const Invocation r = run({"points", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 [1:0] L_{1/6}\n"), std::string::npos);
  EXPECT_NE(r.out.find("3 [2:1] L_{2/3,1/3}\n"), std::string::npos);
}

TEST(Cli, CuspTable) {
  const Invocation r = run({"cusps", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("Gamma_0(6): index 12, 4 cusps\n", 0), 0u);
  EXPECT_NE(r.out.find("([1:2],[3:2],[5:2]) = (L_{1/6,1/3},L_{3/2},L_{1/6,2/3}) | [1:2] | L_{1/6,1/3} | 3\n"),
            std::string::npos);
}

TEST(Cli, TorsionGenusMorphism) {
  EXPECT_EQ(run({"torsion", "13"}).out, "nu2 closed 2 brute 2\nnu3 closed 2 brute 2\n");
  EXPECT_EQ(run({"genus", "11"}).out, "riemann-hurwitz 1\neuler 1\n");
  const Invocation m = run({"morphism", "6", "2"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(std::count(m.out.begin(), m.out.end(), '\n'), 3);
  EXPECT_EQ(run({"morphism", "6", "4"}).code, 2);
}

TEST(Cli, LSeriesAndZeta) {
  EXPECT_EQ(run({"lseries", "--prime", "2", "--order", "5"}).out, "coefficients 1 2 3 4 6 8\nseries 1 2 3 4 6 8\n");
  EXPECT_EQ(run({"lseries", "--prime", "4", "--order", "5"}).code, 2);
  const Invocation z = run({"zeta-check", "--s", "2", "--prime-bound", "1000"});
  EXPECT_EQ(z.code, 0);
  EXPECT_EQ(z.out.rfind("residual ", 0), 0u);
  EXPECT_NE(z.out.find("e-"), std::string::npos);
}

TEST(Cli, Belyi) {
  const Invocation v = run({"belyi", "18", "--verify"});
  EXPECT_EQ(v.code, 0);
  const auto j = nlohmann::json::parse(v.out);
  EXPECT_EQ(j["N"], 18);
  EXPECT_EQ(run({"belyi", "2"}).out, "(t + 256)^3 / (1728 * t^2)\n");
  EXPECT_EQ(run({"belyi", "11", "--verify"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"index"}).code, 2);
  EXPECT_EQ(run({"index", "0"}).code, 2);
  EXPECT_EQ(run({"index", "x"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"dessin", "4", "--format", "svg"}).code, 2);
  EXPECT_EQ(run({"tabulate"}).code, 2);
  EXPECT_EQ(run({"index", "6", "cusps", "6"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TabulateMatchesGolden) {
  const Invocation r = run({"tabulate", "--genus0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(HECKE_GOLDEN_DIR) + "/tabulate_genus0.txt"));
  EXPECT_TRUE(r.out.size() >= 7 && r.out.substr(r.out.size() - 7) == "56 266\n");
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"tabulate", "--genus0"}, {"dessin", "12"}, {"dessin", "12", "--format", "dot"}, {"belyi", "25", "--verify"}})
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "hecke_cli_test_dessin.json";
  const Invocation r = run({"-o", path.string(), "dessin", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path.string()), run({"dessin", "8"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, ExecutableExitCodes) {
  auto status = [](const std::string& args) {
    const int s = std::system((std::string(HECKE_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("index 6"), 0);
  EXPECT_EQ(status("belyi 11"), 2);
  EXPECT_EQ(status("nonsense"), 2);
}
