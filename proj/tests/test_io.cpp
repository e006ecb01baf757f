#include <gtest/gtest.h>

#include <json.hpp>
#include <map>

#include "checks.hpp"
#include "irrdecomp/errors.hpp"
#include "irrdecomp/incremental.hpp"
#include "irrdecomp/io.hpp"
#include "irrdecomp/random_ideal.hpp"

namespace irrdecomp {
namespace {

using testing::example_components;
using testing::example_ideal;

const char* kExampleIdeal =
    "# the running example\n"
    "ideal 3 x y z\n"
    "4 0 0\n"
    "0 4 0\n"
    "\n"
    "3 2 2\n"
    "1 3 2\n"
    "2 1 3\n"
    "end\n";

const char* kExampleComponents =
    "components 3 6\n"
    "4 4 2\n"
    "4 2 3\n"
    "3 3 3\n"
    "4 1 inf\n"
    "2 3 inf\n"
    "1 4 inf\n"
    "end\n";

std::size_t format_error_line(std::string_view text, bool components) {
  try {
    if (components) {
      (void)io::parse_components(text);
    } else {
      (void)io::parse_ideal(text);
    }
  } catch (const FormatError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no FormatError for:\n" << text;
  return 0;
}

TEST(IdealFile, ParseExample) {
  const auto g = io::parse_ideal(kExampleIdeal);
  EXPECT_EQ(g.n, 3u);
  EXPECT_EQ(g.gens, example_ideal().gens);
  EXPECT_EQ(g.names, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(IdealFile, RoundTrip) {
  const auto g = io::parse_ideal(kExampleIdeal);
  const auto text = io::emit_ideal(g);
  EXPECT_EQ(text, "ideal 3 x y z\n4 0 0\n0 4 0\n3 2 2\n1 3 2\n2 1 3\nend\n");
  EXPECT_EQ(io::parse_ideal(text).gens, g.gens);
}

TEST(IdealFile, EmptyBodyIsZeroIdeal) {
  const auto g = io::parse_ideal("ideal 2\nend\n");
  EXPECT_TRUE(g.gens.empty());
  EXPECT_EQ(io::emit_components(incremental::decompose(g)), "components 2 1\ninf inf\nend\n");
}

TEST(IdealFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(format_error_line("ideal 2\n1 2\n1 2 3\nend\n", false), 3u);
  EXPECT_EQ(format_error_line("ideal 2\n1 inf\nend\n", false), 2u);
  EXPECT_EQ(format_error_line("ideal 2\n\n# c\n1 -2\nend\n", false), 4u);
  EXPECT_EQ(format_error_line("ideal 2\n1 4294967297\nend\n", false), 2u);
  EXPECT_EQ(format_error_line("ideal 2\n1 99999999999999999999999\nend\n", false), 2u);
  EXPECT_EQ(format_error_line("ideal 2\n1 x\nend\n", false), 2u);
  EXPECT_EQ(format_error_line("ideals 2\nend\n", false), 1u);
  EXPECT_EQ(format_error_line("ideal 2\nend\n1 1\n", false), 3u);
  EXPECT_EQ(format_error_line("ideal 2 x\nend\n", false), 1u);
  EXPECT_THROW((void)io::parse_ideal("ideal 2\n1 1\n"), FormatError);
  EXPECT_NO_THROW((void)io::parse_ideal("ideal 1\n4294967296\nend\n"));
}

TEST(ComponentFile, ParseAndEmitExample) {
  const auto c = io::parse_components(kExampleComponents);
  EXPECT_EQ(c, example_components());
  EXPECT_EQ(io::emit_components(c), kExampleComponents);
  EXPECT_EQ(io::emit_components(incremental::decompose(example_ideal())), kExampleComponents);
}

TEST(ComponentFile, EmitSortsRows) {
  const ComponentSet c(2, {{1, kInf}, {3, 1}});
  EXPECT_EQ(io::emit_components(c), "components 2 2\n3 1\n1 inf\nend\n");
}

TEST(ComponentFile, Errors) {
  EXPECT_EQ(format_error_line("components 2 2\n1 1\nend\n", true), 3u);
  EXPECT_EQ(format_error_line("components 2 1\n1 1\n2 2\nend\n", true), 3u);
  EXPECT_EQ(format_error_line("components 2\n", true), 1u);
  EXPECT_EQ(format_error_line("components 2 1\n1 0.5\nend\n", true), 2u);
}

TEST(Files, RoundTripRandomIdeals) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gen_random(1 + seed % 5, 1 + seed % 9, 1 + seed % 7, seed, false);
    EXPECT_EQ(io::parse_ideal(io::emit_ideal(g)).gens, g.gens);
    const auto c = incremental::decompose(g);
    EXPECT_EQ(io::parse_components(io::emit_components(c)), c);
  }
}

TEST(Trace, ExampleFirstStepGolden) {
  std::vector<std::string> lines;
  incremental::Options opt;
  const auto a = artinianize(example_ideal());
  opt.on_step = [&](const incremental::StepRecord& r) { lines.push_back(io::trace_line(r, a)); };
  (void)incremental::incremental_decompose(example_ideal(), opt);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0],
            R"({"step":1,"alpha":[3,2,2],"t1_size":0,"t2_size":1,"kept":[)"
            R"({"beta":[4,4,"inf"],"u":1,"d":0,"component":[3,4,"inf"]},)"
            R"({"beta":[4,4,"inf"],"u":2,"d":0,"component":[4,2,"inf"]},)"
            R"({"beta":[4,4,"inf"],"u":3,"d":0,"component":[4,4,2]}],"rejected":[]})");

  const auto step2 = nlohmann::json::parse(lines[1]);
  EXPECT_EQ(step2["t1_size"], 2);
  EXPECT_EQ(step2["t2_size"], 1);
  ASSERT_EQ(step2["rejected"].size(), 1u);
  EXPECT_EQ(step2["rejected"][0]["u"], 3);
  EXPECT_EQ(step2["rejected"][0]["d"], 2);

  const auto step3 = nlohmann::json::parse(lines[2]);
  const auto beta = nlohmann::json::parse(R"([4,2,"inf"])");
  std::map<int, std::pair<int, bool>> by_u;  // u -> (d, kept)
  for (const char* key : {"kept", "rejected"}) {
    for (const auto& e : step3[key]) {
      if (e["beta"] == beta) by_u[e["u"].get<int>()] = {e["d"].get<int>(), std::string(key) == "kept"};
    }
  }
  const std::map<int, std::pair<int, bool>> expected{{1, {3, false}}, {2, {0, true}}, {3, {2, true}}};
  EXPECT_EQ(by_u, expected);
}

}  // namespace
}  // namespace irrdecomp
