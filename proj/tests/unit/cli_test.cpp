// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "adasort/measures.hpp"
#include "adasort/sequence_io.hpp"
#include "cli/cli.hpp"
#include "sample_sequences.hpp"

namespace adasort {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ("adasort_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_keys(const std::string& name, const std::vector<Key>& keys) const {
    std::ofstream f(path(name));
    write_sequence(f, make_sequence(keys));
    return path(name);
  }

  std::vector<Key> read_keys(const std::string& name) const {
    std::ifstream f(path(name));
    return keys_of(read_sequence(f));
  }

  std::filesystem::path dir_;
};

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

TEST_F(CliTest, GenTransposeWritesFile) {
  const Result r = invoke({"gen", "--family", "transpose", "--n", "8", "--out", path("t.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_keys("t.txt"), (std::vector<Key>{5, 6, 7, 8, 1, 2, 3, 4}));
}

TEST_F(CliTest, GenSortedTypeRealizesRequestedType) {
  const Result r = invoke({"gen", "--family", "sorted-type", "--type", "3,2", "--seed", "7",
                           "--out", path("s.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "n=5"));
  const std::vector<Key> keys = read_keys("s.txt");
  EXPECT_EQ(decompose_maximal(make_sequence(keys)).sizes, (std::vector<std::size_t>{3, 2}));
}

TEST_F(CliTest, GenRejectsBadArguments) {
  EXPECT_EQ(invoke({"gen", "--family", "bogus", "--n", "4", "--out", path("x")}).code, 1);
  EXPECT_EQ(invoke({"gen", "--family", "displacement", "--n", "4", "--out", path("x")}).code, 1);
  EXPECT_EQ(invoke({"gen", "--family", "sorted-type", "--type", "3,x", "--out", path("x")}).code, 1);
  EXPECT_EQ(invoke({"gen", "--family", "sorted", "--n", "4"}).code, 1);
  EXPECT_EQ(invoke({"gen", "--family", "sorted", "--n", "4", "--out",
                    path("missing/dir/x.txt")}).code,
            2);
}

TEST_F(CliTest, MeasureReportsBlocks) {
  const std::string file = write_keys("f.txt", testing::kEightBlocks);
  const Result r = invoke({"measure", "--in", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "k=8"));
  EXPECT_TRUE(has_line(r.out, "sizes=6,2,2,2,1,1,1,1"));
}

TEST_F(CliTest, MeasureReverseInversions) {
  const std::string file = write_keys("r.txt", {4, 3, 2, 1});
  const Result r = invoke({"measure", "--in", file, "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "inversions=6"));
  EXPECT_TRUE(has_line(r.out, cli::kProfileHeader));
}

TEST_F(CliTest, MeasureBadInputIsDataError) {
  std::ofstream(path("bad.txt")) << "1\n2\nthree\n";
  const Result r = invoke({"measure", "--in", path("bad.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(invoke({"measure", "--in", path("absent.txt")}).code, 2);
}

TEST_F(CliTest, SortSortedInputUsesOneCheck) {
  ASSERT_EQ(invoke({"gen", "--family", "sorted", "--n", "1000", "--out", path("s.txt")}).code, 0);
  for (const char* pivot : {"median", "randmid", "fr"}) {
    const Result r = invoke({"sort", "--algo", "psort", "--pivot", pivot, "--in", path("s.txt")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "comparisons=999")) << pivot;
    EXPECT_TRUE(has_line(r.out, "sorted=true"));
  }
}

TEST_F(CliTest, SortWritesOutputAndChecksPreconditions) {
  const std::string file = write_keys("a.txt", testing::kAdjacentSwaps);
  const Result r = invoke({"sort", "--algo", "blocked", "--k", "1", "--in", file, "--out",
                           path("o.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_keys("o.txt"), testing::kSortedSixteen);

  EXPECT_EQ(invoke({"sort", "--algo", "blocked", "--in", file}).code, 1);
  EXPECT_EQ(invoke({"sort", "--algo", "blocked", "--k", "17", "--in", file}).code, 1);
  EXPECT_EQ(invoke({"sort", "--algo", "psort", "--pivot", "best", "--in", file}).code, 1);
  EXPECT_EQ(invoke({"sort", "--algo", "natmerge", "--in", path("none.txt")}).code, 2);
}

TEST_F(CliTest, CensusSmall) {
  const Result r = invoke({"census", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], cli::kCensusHeader);
  std::uint64_t total = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t a = lines[i].find(',');
    const std::size_t b = lines[i].find(',', a + 1);
    total += std::stoull(lines[i].substr(a + 1, b - a - 1));
  }
  EXPECT_EQ(total, 6u);
  EXPECT_TRUE(has_line(r.out, "3,1,0.333333333,true,0.000000,"));
  EXPECT_TRUE(has_line(r.out, "1-1-1,1,,false,0.000000,"));
}

TEST_F(CliTest, CensusWorstCaseColumnAndBounds) {
  const Result r = invoke({"census", "--n", "1", "--worstcase", "psort-median"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], cli::kCensusHeader);
  EXPECT_EQ(lines[1], "1,1,,false,0.000000,0");
  EXPECT_EQ(invoke({"census", "--n", "11"}).code, 1);
  EXPECT_EQ(invoke({"census", "--n", "0"}).code, 1);
  EXPECT_EQ(invoke({"census", "--n", "9", "--worstcase", "psort-fr"}).code, 1);
}

std::string strip_elapsed(const std::string& csv) {
  std::string result;
  for (const std::string& line : lines_of(csv)) {
    result += line.substr(0, line.rfind(',')) + '\n';
  }
  return result;
}

TEST_F(CliTest, BenchIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> base{
      "bench",   "--family", "random,displacement,multiset", "--n", "64,128", "--algo",
      "psort,blocked,natmerge", "--pivot", "median,randmid,fr", "--k", "4", "--h", "3",
      "--trials", "2", "--seed", "11"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto three = base;
  three.insert(three.end(), {"--threads", "3", "--out", path("b.csv")});

  const Result a = invoke(one);
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(invoke(three).code, 0);
  std::ifstream f(path("b.csv"));
  const std::string b((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());

  EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(b));
  const auto lines = lines_of(a.out);
  EXPECT_EQ(lines.front(), cli::kBenchHeader);
  // 3 families x 2 sizes x 2 trials x (3 pivots + 2 other algorithms)
  EXPECT_EQ(lines.size(), 1u + 3 * 2 * 2 * 5);
}

TEST_F(CliTest, BenchRowsCarryParameters) {
  const Result r = invoke({"bench", "--family", "sorted-type", "--n", "5", "--type", "3,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1].rfind("sorted-type,5,3-2,psort,median,0,", 0), 0u) << lines[1];
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"shuffle"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"bench", "--family", "random"}).code, 1);
}

}  // namespace
}  // namespace adasort
