#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gammaspace/io.hpp"

namespace fs = std::filesystem;
using gammaspace::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GAMMASPACE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(GAMMASPACE_FIXTURES) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gammaspace-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildWritesPresheaf) {
  const auto r = run("build --input " + fixture("z3.json") + " --levels 3 --out " + path("z3.json"));
  ASSERT_EQ(r.code, 0);
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["result"]["level_sizes"], json({1, 3, 9, 27}));
  EXPECT_EQ(report["status"], "pass");
  const auto p = json::parse(slurp(path("z3.json")));
  EXPECT_EQ(p["format"], "gammaspace-presheaf");
  EXPECT_EQ(p["elements"][3].size(), 27u);
}

TEST_F(Cli, BuildFromActionFile) {
  const auto r = run("build -i " + fixture("z2_inv_on_z3.json") + " -N 2 -o " + path("p.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["result"]["group_order"], 2);
  EXPECT_EQ(json::parse(slurp(path("p.json")))["group"]["elements"].size(), 2u);
}

TEST_F(Cli, NonAssociativeTableIsAnAlgebraError) {
  const auto r = run("build -i " + fixture("nonassoc.json"));
  EXPECT_EQ(r.code, 3);
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["result"]["axiom"], "associativity");
  EXPECT_EQ(report["result"]["witness"].size(), 3u);
}

TEST_F(Cli, InputErrors) {
  std::ofstream(path("broken.json")) << "{ not json";
  EXPECT_EQ(run("build -i " + path("broken.json")).code, 2);
  std::ofstream(path("missing.json")) << R"({"elements": ["a"], "table": [["a"]]})";
  EXPECT_EQ(run("build -i " + path("missing.json")).code, 2);
  EXPECT_EQ(run("build -i " + path("does-not-exist.json")).code, 2);
  EXPECT_EQ(run("build --bogus-flag").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, CheckConditions) {
  ASSERT_EQ(run("build -i " + fixture("z3.json") + " -o " + path("z3.json")).code, 0);
  ASSERT_EQ(run("build -i " + fixture("max.json") + " -o " + path("max.json")).code, 0);
  EXPECT_EQ(run("check -i " + path("z3.json") + " --bousfield").code, 0);
  const auto fail = run("check -i " + path("max.json") + " --bousfield");
  EXPECT_EQ(fail.code, 1);
  const auto cond = json::parse(fail.out)["result"]["conditions"][0];
  EXPECT_EQ(cond["failure"], "not injective");
  EXPECT_EQ(cond["witness"].size(), 2u);
  EXPECT_EQ(run("check -i " + path("max.json") + " --bousfield --upto 1").code, 0);
  EXPECT_EQ(run("check -i " + path("max.json") + " --segal --upto 3").code, 0);
  EXPECT_EQ(run("check -i " + path("max.json") + " --segal --upto 4").code, 4);
  const auto fr = json::parse(run("check -i " + fixture("klein.json") + " --upto 4").out);
  EXPECT_EQ(fr["result"]["functoriality"]["pairs_checked"], 200);
}

TEST_F(Cli, RoundtripFixtures) {
  for (const auto* name : {"z2.json", "z3.json", "z4.json", "klein.json", "max.json", "trivial.json",
                           "z2_trivial_on_z2.json", "z2_inv_on_z3.json", "z2_swap_on_klein.json"}) {
    const auto r = run("roundtrip -i " + fixture(name));
    EXPECT_EQ(r.code, 0) << name;
  }
  ASSERT_EQ(run("build -i " + fixture("z2_swap_on_klein.json") + " -o " + path("swap.json")).code, 0);
  EXPECT_EQ(run("roundtrip -i " + path("swap.json")).code, 0);
}

TEST_F(Cli, CorruptedPresheafIsRefused) {
  const auto r = run("roundtrip -i " + fixture("z2_corrupted_presheaf.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(json::parse(r.out)["result"]["error"].get<std::string>().find("segal"), std::string::npos);
  EXPECT_EQ(run("classify -i " + fixture("z2_corrupted_presheaf.json")).code, 3);
}

TEST_F(Cli, ClassifyInversionFixture) {
  const auto r = run("classify -i " + fixture("z2_inv_on_z3.json") + " --iterate 1 --dim 4 --homology 2");
  ASSERT_EQ(r.code, 0);
  const auto res = json::parse(r.out)["result"];
  EXPECT_EQ(res["delooping"]["homology"][1]["group"], "Z/3");
  EXPECT_EQ(res["delooping"]["g_action_on_H"][0]["matrix"], json::parse("[[2]]"));
  EXPECT_EQ(res["structure_map"]["isomorphism"], true);
  EXPECT_EQ(res["structure_map"]["equivariant"], true);
  EXPECT_EQ(res["bx0_is_point"], true);
}

TEST_F(Cli, ClassifyExtendsStoredPresheaf) {
  ASSERT_EQ(run("build -i " + fixture("z2_inv_on_z3.json") + " -N 2 -o " + path("p.json")).code, 0);
  const auto r = run("classify -i " + path("p.json") + " -d 4 -q 2");
  ASSERT_EQ(r.code, 0);
  const auto res = json::parse(r.out)["result"];
  EXPECT_EQ(res["extended"]["to"], 4);
  EXPECT_EQ(res["delooping"]["homology"][1]["group"], "Z/3");
}

TEST_F(Cli, ClassifyZeroObject) {
  const auto r = run("classify -i " + fixture("z3.json") + " --object 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["result"]["delooping"]["levels"], json({1, 1, 1, 1, 1}));
}

TEST_F(Cli, ClassifySecondDelooping) {
  const auto r = run("classify -i " + fixture("z2.json") + " -k 2 -d 4 -q 2");
  ASSERT_EQ(r.code, 0);
  const auto h = json::parse(r.out)["result"]["delooping"]["homology"];
  EXPECT_EQ(h[1]["group"], "0");
  EXPECT_EQ(h[2]["group"], "Z/2");
}

TEST_F(Cli, ResourceErrors) {
  EXPECT_EQ(run("classify -i " + fixture("z2.json") + " -k 2 -d 4 --budget 1000").code, 4);
  EXPECT_EQ(run("classify -i " + fixture("z2.json") + " -d 2 -q 2").code, 4);
  const auto r = run("classify -i " + fixture("z3.json") + " -d 8 --budget 100");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(json::parse(r.out)["result"]["budget"], 100);
}

TEST_F(Cli, BudgetFromEnvironment) {
  const std::string cmd = "env GAMMASPACE_BUDGET=50 " + std::string(GAMMASPACE_CLI) + " classify -i " +
                          fixture("z3.json") + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 4);
}

TEST_F(Cli, ReportsAreDeterministic) {
  for (const auto& args : {"classify -i " + fixture("z2_inv_on_z3.json") + " --seed 9",
                           "check -i " + fixture("z4.json") + " --bousfield --seed 123",
                           "roundtrip -i " + fixture("klein.json")}) {
    ASSERT_EQ(run(args + " --out " + path("a.json")).code, 0);
    ASSERT_EQ(run(args + " --out " + path("b.json")).code, 0);
    const auto a = slurp(path("a.json")), b = slurp(path("b.json"));
    EXPECT_EQ(a, b);
    const auto j = json::parse(a);
    EXPECT_EQ(j["artifact"]["name"], "gammaspace");
    EXPECT_TRUE(j.contains("seed"));
    EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  }
  EXPECT_FALSE(fs::exists(path("a.json.tmp")));
}

TEST_F(Cli, TextFormat) {
  const auto r = run("classify -i " + fixture("z2_inv_on_z3.json") + " --format text");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H_1 = Z/3"), std::string::npos);
}
