#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordmetric/cli.hpp"
#include "ordmetric/codec.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ordmetric::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ORDMETRIC_TEST_DATA) + "/" + name; }

ordmetric::codec::Json json_of(const Result& r) { return ordmetric::codec::parse_json(r.out); }

}  // namespace

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run({"validate", data("three_point.json")}).code, 0);
  EXPECT_EQ(run({"validate", data("path_as_metric.json")}).code, 0);
  const auto bad = run({"validate", data("path_as_ultrametric.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json_of(bad)["violations"][0]["axiom"], "U4");
  EXPECT_EQ(run({"validate", data("lex_metric.json")}).code, 0);
  EXPECT_EQ(run({"validate", data("ordered_values.json")}).code, 0);
  EXPECT_EQ(run({"validate", data("bad_rational.json")}).code, 2);
  EXPECT_EQ(run({"validate", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, Retract) {
  const auto r = run({"retract", data("three_point.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["mapping"]["x"], "a");
  EXPECT_EQ(j["certificate"]["holds"], true);
  EXPECT_EQ(run({"retract", "--tau", "1", data("three_point.json")}).code, 1);
  EXPECT_EQ(run({"retract", "--tau", "x", data("three_point.json")}).code, 2);
  const auto s = run({"retract", "--search", data("three_point.json")});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json_of(s)["certificate"]["factor"], "1");
  EXPECT_EQ(run({"retract", "--search", "--bound", "2", data("three_point.json")}).code, 1);
  EXPECT_EQ(run({"retract", data("path_as_metric.json")}).code, 1);
  EXPECT_EQ(run({"retract", data("ordered_values.json")}).code, 0);
}

TEST(Cli, ExtendWorkedPipeline) {
  const auto r = run({"extend", data("worked_extend.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["k"][0][1], "1/2");
  EXPECT_EQ(j["output"][0][2], "1/2");
  EXPECT_EQ(j["output"][1][2], "2");
  EXPECT_EQ(j["certificates"]["restriction"], true);
  EXPECT_EQ(run({"extend", "--chain", "8,2,1/2", data("worked_extend.json")}).code, 1);
}

TEST(Cli, ExtendOtherInputs) {
  EXPECT_EQ(run({"extend", data("extend_metric.json")}).code, 1);
  const auto lex = run({"extend", data("extend_lex.json")});
  ASSERT_EQ(lex.code, 0) << lex.err;
  const auto j = json_of(lex);
  EXPECT_EQ(j["d_flavor"], "metric");
  EXPECT_EQ(j["output"][0][1], ordmetric::codec::Json::array({"0", "1", "0"}));
  EXPECT_EQ(j["chain"].size(), 3u);
}

TEST(Cli, Ud) {
  const auto self = run({"ud", data("three_point.json"), data("three_point.json")});
  EXPECT_EQ(self.code, 0);
  EXPECT_EQ(self.out, "0\n");
  EXPECT_EQ(run({"ud", data("three_point.json"), data("three_point_far.json")}).out, "2\n");
  EXPECT_EQ(run({"ud", data("ordered_values.json"), data("ordered_values.json")}).out, "bot\n");
  EXPECT_EQ(run({"ud", data("three_point.json"), data("path_as_metric.json")}).code, 1);
  EXPECT_EQ(run({"ud", data("three_point.json")}).code, 2);
}

TEST(Cli, GenIsDeterministicAndValid) {
  const auto a = run({"gen", "--points", "6", "--depth", "3", "--seed", "42"});
  const auto b = run({"gen", "--points", "6", "--depth", "3", "--seed", "42"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"gen", "--points", "6", "--depth", "3", "--seed", "43"}).out);

  const auto path = std::filesystem::temp_directory_path() / "ordmetric_cli_gen.json";
  ASSERT_EQ(run({"--out", path.string(), "gen", "--points", "6", "--seed", "42"}).code, 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run({"gen", "--points", "6", "--seed", "42"}).out);
  EXPECT_EQ(run({"validate", path.string()}).code, 0);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"gen", "--points", "0"}).code, 1);
}

TEST(Cli, Crosscheck) {
  const auto r = run({"crosscheck", "--count", "200", "--seed", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "200/200 equal\n");
}
