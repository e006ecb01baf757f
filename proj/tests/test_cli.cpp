#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "irrdecomp/cli.hpp"
#include "irrdecomp/io.hpp"

namespace irrdecomp {
namespace {

namespace fs = std::filesystem;

const char* kExample = "ideal 3 x y z\n4 0 0\n0 4 0\n3 2 2\n1 3 2\n2 1 3\nend\n";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("irrdecomp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, DecomposeExampleEveryEngine) {
  const auto in = write("ex.ideal", kExample);
  std::string first;
  for (const char* algo : {"incremental", "recursive", "oracle"}) {
    const auto r = run({"decompose", "--algo", algo, in});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::parse_components(r.out).size(), 6u);
    if (first.empty()) first = r.out;
    EXPECT_EQ(r.out, first) << algo;
  }
}

TEST_F(CliTest, VerifyAcceptsAndRejects) {
  const auto in = write("ex.ideal", kExample);
  const auto comps = path("ex.irr");
  ASSERT_EQ(run({"decompose", in, comps}).code, 0);
  const auto ok = run({"verify", comps, in});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "ok\n");

  const auto short_file = write("short.irr", "components 3 5\n4 4 2\n4 2 3\n3 3 3\n4 1 inf\n2 3 inf\nend\n");
  const auto bad = run({"verify", short_file, in});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.rfind("FAIL:", 0), 0u);

  const auto not_antichain =
      write("chain.irr", "components 3 2\n4 4 2\n4 4 3\nend\n");
  EXPECT_EQ(run({"verify", not_antichain, in}).code, 1);
}

TEST_F(CliTest, UsageAndFormatErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"decompose", "--algo", "fast", "x"}).code, 2);
  EXPECT_EQ(run({"decompose", path("missing.ideal")}).code, 2);
  const auto bad = write("bad.ideal", "ideal 2\n1 inf\nend\n");
  const auto r = run({"decompose", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  const auto in = write("ex.ideal", kExample);
  EXPECT_EQ(run({"decompose", "--algo", "recursive", "--trace", in}).code, 2);
}

TEST_F(CliTest, BudgetExceeded) {
  const auto in = write("big.ideal", "ideal 3\n300 300 300\nend\n");
  EXPECT_EQ(run({"decompose", "--algo", "oracle", "--budget", "1000", in}).code, 3);
  EXPECT_EQ(run({"decompose", "--algo", "incremental", in}).code, 0);
}

TEST_F(CliTest, TraceAndStatsGoToStderr) {
  const auto in = write("ex.ideal", kExample);
  const auto r = run({"decompose", "--trace", "--stats", in});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.err);
  std::string line;
  int trace_lines = 0;
  bool stats = false;
  while (std::getline(lines, line)) {
    if (line.rfind("{\"step\":", 0) == 0) ++trace_lines;
    if (line.rfind("algo=incremental n=3 p=5 ell=6 ops=", 0) == 0) stats = true;
  }
  EXPECT_EQ(trace_lines, 3);
  EXPECT_TRUE(stats) << r.err;
  EXPECT_EQ(io::parse_components(r.out).size(), 6u);
}

TEST_F(CliTest, GenIsDeterministic) {
  const auto a = run({"gen", "--vars", "3", "--gens", "6", "--maxdeg", "8", "--seed", "7", "--generic", "-"});
  const auto b = run({"gen", "--vars", "3", "--gens", "6", "--maxdeg", "8", "--seed", "7", "--generic", "-"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::parse_ideal(a.out).n, 3u);
  EXPECT_EQ(run({"gen", "--vars", "2", "--gens", "9", "--maxdeg", "3", "--seed", "1", "--generic", "-"}).code, 2);
}

TEST_F(CliTest, BatchMode) {
  const auto in_dir = dir_ / "in";
  fs::create_directories(in_dir);
  for (int seed = 0; seed < 6; ++seed) {
    ASSERT_EQ(run({"gen", "--vars", "3", "--gens", "5", "--maxdeg", "5", "--seed", std::to_string(seed),
                   (in_dir / ("g" + std::to_string(seed) + ".ideal")).string()})
                  .code,
              0);
  }
  const auto out_dir = (dir_ / "out").string();
  EXPECT_EQ(run({"decompose", in_dir.string()}).code, 2);
  ASSERT_EQ(run({"decompose", in_dir.string(), out_dir}).code, 0);
  for (int seed = 0; seed < 6; ++seed) {
    const auto stem = "g" + std::to_string(seed);
    const auto irr = (fs::path(out_dir) / (stem + ".irr")).string();
    ASSERT_TRUE(fs::exists(irr));
    EXPECT_EQ(run({"verify", irr, (in_dir / (stem + ".ideal")).string()}).code, 0);
  }
}

TEST_F(CliTest, RecursiveMatchesIncrementalOnGeneratedInputs) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto in = path("r" + std::to_string(seed) + ".ideal");
    ASSERT_EQ(run({"gen", "--vars", "4", "--gens", "7", "--maxdeg", "5", "--seed", std::to_string(seed), in}).code, 0);
    EXPECT_EQ(run({"decompose", "--algo", "recursive", in}).out,
              run({"decompose", "--algo", "incremental", in}).out);
  }
}

}  // namespace
}  // namespace irrdecomp
