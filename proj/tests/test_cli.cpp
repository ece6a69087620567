#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with the given argument string; stderr is discarded.
Run run(const std::string& args) {
  std::string cmd = std::string(ONION_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("onion_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateThenMu) {
  auto g = path("star.txt");
  ASSERT_EQ(run("generate --kind onion-star --t 2 -o " + g).status, 0);
  auto r = run("mu " + g + " --from 0 --to 1");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mu"], 2);
  EXPECT_EQ(j["mu_reverse"], 1);
  EXPECT_EQ(j["schema"], 1);
}

TEST_F(Cli, GenerateCounterexampleArcCount) {
  auto r = run("generate --kind counterexample --k 2");
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line) && (line.empty() || line[0] == '#')) {}
  EXPECT_EQ(line, "10 16");
}

TEST_F(Cli, Bounds) {
  auto r = run("bounds --name b --args 3");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "17");
  EXPECT_EQ(j["overflow"], false);

  r = run("bounds --name F --args 1");
  ASSERT_EQ(r.status, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["value"].is_null());
  EXPECT_EQ(j["overflow"], true);
}

TEST_F(Cli, EmbedTriangle) {
  auto h = file("tri.txt", "3 3\n0 1\n1 2\n2 0\n");
  auto dot = path("tri.dot");
  auto r = run("embed --pattern " + h + " --t 3 --dot " + dot);
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["arc_map"].size(), 3u);
  EXPECT_TRUE(std::filesystem::exists(dot));
}

TEST_F(Cli, NoCutInconclusiveExitsTwo) {
  auto g = file("g.txt", "3 2\n0 1\n1 0\n");
  auto r = run("nocut " + g + " --X 0,1,2 --t 1 --budget 2");
  EXPECT_EQ(r.status, 2);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "inconclusive");
  EXPECT_EQ(j["stage"], "flow");
}

TEST_F(Cli, OracleOpposite) {
  auto g = path("cx.txt");
  ASSERT_EQ(run("generate --kind counterexample --k 1 -o " + g).status, 0);
  auto r = run("oracle opposite " + g + " --from 0 --to 1");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["found"], false);
}

TEST_F(Cli, DotOutput) {
  auto g = file("o.txt", "2 3\n0 1\n0 1\n1 0\n");
  auto r = run("dot " + g);
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("label=\"a2\""), std::string::npos);
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("mu " + path("missing.txt") + " --from 0 --to 1").status, 1);
  auto bad = file("bad.txt", "2 1\n0 0\n");
  EXPECT_EQ(run("mu " + bad + " --from 0 --to 1").status, 1);
  EXPECT_EQ(run("bounds --name zeta --args 1").status, 1);
}
