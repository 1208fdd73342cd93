// Runs the built command-line tool as a subprocess.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(SLHASH_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Everything except the '#' metadata lines.
std::string body_of(const fs::path& path) {
  std::istringstream in(slurp(path));
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out += line + "\n";
  }
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("slhash_cli_test_" + std::string(::testing::UnitTest::GetInstance()
                                                 ->current_test_info()
                                                 ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string out(const std::string& file) const { return (dir_ / file).string(); }

  fs::path dir_;
};

TEST_F(CliTest, VersionAndHelp) {
  const auto v = run_cli("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("slhash 0.3.0"), std::string::npos);
  const auto none = run_cli("");
  EXPECT_NE(none.code, 0);
}

TEST_F(CliTest, Collide3WritesFiles) {
  const auto r = run_cli("collide3 --p 101 --m 8 --x 4 --y 9 --z 30 --out " + out("c3.csv"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("canonical-count-equal"), std::string::npos);
  EXPECT_NE(r.out.find("wrote " + out("c3.csv")), std::string::npos);
  const std::string csv = slurp(out("c3.csv"));
  EXPECT_EQ(csv.rfind("# tool: slhash 0.3.0", 0), 0u);
  EXPECT_NE(csv.find("# experiment: collide3"), std::string::npos);
  EXPECT_TRUE(fs::exists(out("c3.report.csv")));
  EXPECT_NE(slurp(out("c3.report.csv")).find("overall"), std::string::npos);
}

TEST_F(CliTest, DomainErrorsExitTwo) {
  const auto r = run_cli("collide3 --p 100 --m 8 --out " + out("bad.csv"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("domain error"), std::string::npos);
  EXPECT_FALSE(fs::exists(out("bad.csv")));
}

TEST_F(CliTest, BudgetRefusalPrintsHint) {
  const auto r = run_cli("figure1 --p 1031 --m 32 --budget 1000 --out " + out("f.csv"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("--budget"), std::string::npos);
}

TEST_F(CliTest, BadFlagValueRejected) {
  const auto r = run_cli("maxload-exact --b-mode sometimes --out " + out("x.csv"));
  EXPECT_NE(r.code, 0);
  EXPECT_NE(run_cli("no-such-command").code, 0);
}

TEST_F(CliTest, WorkerCountDoesNotChangeResults) {
  const std::pair<const char*, const char*> cases[] = {
      {"figure1", "--p 257 --m 16"},
      {"interval-collide", "--p 197 --m 8"},
      {"maxload-exact", "--p 101 --m 8 --b-mode zero"},
      {"maxload-mc", "--p 257 --m 16 --samples 3000 --seed 5"},
      {"transform", "--p 257 --m 16 --samples 3000"},
      {"scaling", "--m-values 4,8,16 --samples 2000"},
  };
  for (const auto& [name, args] : cases) {
    const std::string base = std::string(name) + " " + args;
    const auto one = run_cli(base + " --workers 1 --out " + out(std::string(name) + "_1.csv"));
    const auto three = run_cli(base + " --workers 3 --out " + out(std::string(name) + "_3.csv"));
    EXPECT_EQ(one.code, three.code) << name;
    EXPECT_NE(one.code, 2) << name << ": " << one.out;
    const std::string a = body_of(out(std::string(name) + "_1.csv"));
    EXPECT_FALSE(a.empty()) << name;
    EXPECT_EQ(a, body_of(out(std::string(name) + "_3.csv"))) << name;
  }
}

}  // namespace
