#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(LCINTERP_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int data_rows(const std::string& csv) {
  std::istringstream in(csv);
  int n = -1;
  for (std::string l; std::getline(in, l);) n += !l.empty() && l[0] != '#';
  return n;
}

}  // namespace

TEST(Cli, NodesSevenFive) {
  const auto r = run("nodes --pair 7,5");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(data_rows(r.out), 24);
}

TEST(Cli, NodesRejectsNonCoprime) {
  const auto r = run("nodes --pair 4,2");
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("CoprimalityError"), std::string::npos) << r.out;
}

TEST(Cli, OutputFile) {
  const auto dir = std::filesystem::temp_directory_path() / "lcinterp_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "nodes.csv";
  ASSERT_EQ(run("nodes --pair 3,2 --out " + path.string()).status, 0);
  const auto csv = slurp(path);
  EXPECT_EQ(csv.rfind("i,j,x,y,class,weight\n", 0), 0u);
  EXPECT_EQ(data_rows(csv), 6);
  const auto bad = run("nodes --pair 3,2 --out " + (dir / "missing" / "x.csv").string());
  EXPECT_NE(bad.status, 0);
  EXPECT_NE(bad.out.find("missing"), std::string::npos);
}

TEST(Cli, MzRerunIdentical) {
  const auto a = run("mz --pair 7,5 --p 2 --trials 200 --seed 42");
  const auto b = run("mz --pair 7,5 --p 2 --trials 200 --seed 42 --threads 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("7,5,2,"), std::string::npos);
}

TEST(Cli, Lemma56) {
  const auto r = run("vdv --check-lemma56 --n 16");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("\n16,63,"), std::string::npos) << r.out;
}

TEST(Cli, FailedCheckExitCode) {
  EXPECT_EQ(run("lebesgue --seq padua:2..8 --grid 64 --expect-trend-max 0.01").status, 1);
  EXPECT_EQ(run("lebesgue --seq padua:2..8 --grid 64 --expect-trend-max 2").status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run("").status, 0);
  EXPECT_NE(run("frobnicate").status, 0);
  EXPECT_NE(run("converge --func nope --pair 3,2").status, 0);
  const auto v = run("--version");
  EXPECT_EQ(v.status, 0);
  EXPECT_NE(v.out.find(LCINTERP_VERSION), std::string::npos);
}
