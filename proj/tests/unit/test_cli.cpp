#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KNOTSLOPE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("knotslope_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, InvariantsTrefoilJson) {
  const auto r = run(std::string("invariants --json \"") + fixtures::kLeftTrefoil + "\"");
  ASSERT_EQ(r.code, 0);
  const auto j = knotslope::Json::parse(r.out);
  EXPECT_EQ(j["sigma"], 2);
  EXPECT_EQ(j["slope_max"], 0);
  EXPECT_EQ(j["slope_min"], -6);
  EXPECT_EQ(knotslope::jones_from_json(j["jones"]).to_string(), "-1*t^-4 + 1*t^-3 + 1*t^-1");
}

TEST(Cli, InvariantsEmptyIsUnknot) {
  const auto r = run("invariants --json \"\"");
  ASSERT_EQ(r.code, 0);
  const auto j = knotslope::Json::parse(r.out);
  EXPECT_EQ(j["crossings"], 0);
  EXPECT_EQ(j["sigma"], 0);
  EXPECT_EQ(j["jones"]["terms"].size(), 1U);
  EXPECT_EQ(j["jones"]["terms"][0]["exp"], 0);
}

TEST(Cli, InvariantsFromStdin) {
  const auto r = run(std::string("invariants < ") + temp_file("stdin.txt", fixtures::kFigureEight));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1*t^-2 - 1*t^-1 + 1*t^0 - 1*t^1 + 1*t^2"), std::string::npos);
}

TEST(Cli, OuterFaceOption) {
  const auto r = run(std::string("invariants --json --outer-face 3 \"") + fixtures::kFigureEight + "\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(knotslope::Json::parse(r.out)["sigma"], 0);
  EXPECT_EQ(run(std::string("invariants --outer-face 9 \"") + fixtures::kFigureEight + "\"").code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("invariants \"X(1,2,3)\"").code, 2);
  EXPECT_EQ(run("invariants \"X(1,2,2,3)\"").code, 2);
  EXPECT_EQ(run(std::string("invariants \"") + fixtures::kNonPlanar + "\"").code, 3);
  EXPECT_EQ(run("invariants \"X(4,1,3,2) X(2,3,1,4)\"").code, 3);
  EXPECT_EQ(run("verify /nonexistent/table.txt").code, 4);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, VerifyCorruptLineIsolated) {
  const auto path = temp_file("corrupt.txt", std::string("3_1: ") + fixtures::kLeftTrefoil + "\nbad: X(1,2,3)\n4_1: " +
                                                 fixtures::kFigureEight + "\n");
  const auto lenient = run("verify " + path);
  EXPECT_EQ(lenient.code, 0);
  EXPECT_NE(lenient.out.find("bad: not-applicable error: line 2"), std::string::npos);
  EXPECT_EQ(run("verify --strict " + path).code, 1);
}

TEST(Cli, VerifyDuplicateNames) {
  const auto path = temp_file("dup.txt", "a: X(1,2,2,1)\na: X(1,1,2,2)\n");
  EXPECT_EQ(run("verify " + path).code, 2);
}

TEST(Cli, VerifyFormats) {
  const auto path = temp_file("formats.txt", std::string("3_1: ") + fixtures::kLeftTrefoil + "\n4_1: " +
                                                 fixtures::kFigureEight + "\n");
  const auto json = run("verify --json " + path);
  ASSERT_EQ(json.code, 0);
  const auto j = knotslope::Json::parse(json.out);
  EXPECT_EQ(j["summary"]["holds"], 2);
  EXPECT_EQ(j["knots"].size(), 2U);
  const auto csv = run("verify --csv " + path);
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("name,crossings,", 0), 0U);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3);
  EXPECT_EQ(run("verify --csv --json " + path).code, 2);
  const auto gated = run("verify --json --max-crossings 3 " + path);
  EXPECT_EQ(knotslope::Json::parse(gated.out)["knots"][1]["skipped"], true);
}

TEST(Cli, VerifyOutputIsReproducible) {
  const std::string table = KNOTSLOPE_TABLE;
  const auto a = run("verify --json --max-crossings 8 " + table);
  const auto b = run("verify --json --threads 1 --max-crossings 8 " + table);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RandomCheck) {
  const auto r = run("random-check --count 20 --seed 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("20 random diagrams, 0 disagreements"), std::string::npos);
}
