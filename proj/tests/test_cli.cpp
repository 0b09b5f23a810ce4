#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ingms/io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(INGMS_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(INGMS_DATA_DIR) + "/" + name; }

std::string files(const std::string& channel, const std::string& factorization) {
  return "--channel " + data(channel) + " --factorization " + data(factorization);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kOrth = files("clean_orthogonal_channel.json", "orthogonal_uniform_factorization.json");

}  // namespace

TEST(Cli, OrthogonalRegionToFiles) {
  const std::string stem = testing::TempDir() + "ingms_orth";
  const auto r = run("region " + kOrth + " --kind orthogonal --out " + stem);
  ASSERT_EQ(r.code, 0) << r.out;
  const auto text = slurp(stem + ".txt");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 8);
  EXPECT_NE(text.find("+1*R10 +1*R11 +1*R20 +1*R21 <= 2  # orth.Y1.12"), std::string::npos);
  const auto constants = ingms::Json::parse(slurp(stem + ".constants.json"));
  ASSERT_EQ(constants.size(), 8u);
  EXPECT_EQ(constants[2]["name"], "orth.Y1.12");
  EXPECT_EQ(constants[2]["value"], 2.0);
}

TEST(Cli, InterferenceFreeRectangle) {
  const auto r = run("region " + files("interference_free_channel.json", "hk_factorization.json") + " --kind hk");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("+1*R1 <= 1"), std::string::npos);
  EXPECT_NE(r.out.find("+1*R2 <= 1"), std::string::npos);
}

TEST(Cli, MembershipAndWitness) {
  auto r = run("member " + kOrth + " --rates R11=1.5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("false\nviolated: ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("R11"), std::string::npos);
  r = run("member " + kOrth + " --rates R11=1,R21=1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run("member " + kOrth + " --kind orthogonal --rates R11=1,R21=1,R12=1");
  EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, AllConstantAuxiliariesAllowOnlyZero) {
  const auto f = files("bsc_pair_channel.json", "all_constant_factorization.json");
  EXPECT_EQ(run("member " + f + " --rates R00=0").out, "true\n");
  EXPECT_EQ(run("member " + f + " --rates R22=0.01").out.rfind("false", 0), 0u);
}

TEST(Cli, MacRows) {
  const auto r = run("region " + files("mac_channel.json", "mac_factorization.json") + " --kind mac");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("mac."), std::string::npos);
}

TEST(Cli, SimulationIsReproducible) {
  const std::string a = testing::TempDir() + "ingms_sim_a", b = testing::TempDir() + "ingms_sim_b";
  const std::string args = "simulate " + files("p2p_channel.json", "p2p_factorization.json") +
                           " --rates R11=0.5 --n 8 --epsilon 0.25 --trials 40 --seed 7 --out ";
  ASSERT_EQ(run(args + a).code, 0);
  ASSERT_EQ(run(args + b).code, 0);
  const auto csv = slurp(a + ".csv");
  EXPECT_EQ(csv, slurp(b + ".csv"));
  EXPECT_EQ(csv.rfind("trial,E1e,E2e,E3e,E4e,rx1_label,rx2_label\r\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 41);
  const auto summary = ingms::Json::parse(slurp(a + ".summary.json"));
  EXPECT_EQ(summary["trials"], 40);
  EXPECT_EQ(summary["seed"], 7);
  EXPECT_EQ(summary["rates"]["R11"], 0.5);
}

TEST(Cli, Covering) {
  const std::string stem = testing::TempDir() + "ingms_cover";
  const auto r = run("covering --factorization " + data("covering_factorization.json") +
                     " --bins B10=1.2,B11=1.2 --n 10 --epsilon 0.2 --trials 50 --seed 3 --out " + stem);
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = ingms::Json::parse(slurp(stem + ".json"));
  EXPECT_EQ(j["trials"], 50);
  EXPECT_EQ(j["thresholds"][0], 1.0);
  EXPECT_LT(j["no_cover_rate"].get<double>(), 0.3);
}

TEST(Cli, CheckSubset) {
  const auto r = run("check --only orthogonal");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("PASS ", 0), 0u) << r.out;
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("member " + kOrth + " --rates R99=1").code, 1);
  EXPECT_EQ(run("member --channel /nonexistent.json --factorization " + data("p2p_factorization.json")).code, 1);
  EXPECT_EQ(run("region " + kOrth + " --kind nonsense").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("simulate " + files("p2p_channel.json", "p2p_factorization.json") + " --epsilon 0.6").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}
