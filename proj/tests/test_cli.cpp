#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"
#include "sdraw/json_io.hpp"

using namespace sdraw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json result(const Run& r) { return Json::parse(r.out).at("result"); }

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / ("sdraw_cli_" + name)) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  [[nodiscard]] std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

// Canonical C_{2,2} as a pattern: the one crossing pair u0v1 x u1v0.
std::string canonical_c22() {
  return R"({"vertices": ["u0", "u1", "v0", "v1"],
             "edges": [["u0","v0"], ["u0","v1"], ["u1","v0"], ["u1","v1"]],
             "crossings": [[["u0","v1"], ["u1","v0"]]]})";
}

}  // namespace

TEST(Cli, C6AuditReportsNothingRealizable) {
  const auto r = run({"c6-audit", "--jobs", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json j = result(r);
  EXPECT_EQ(j["tested"], 6400);
  EXPECT_EQ(j["realizable"], 0);
  EXPECT_GE(j["control"]["realizable"].get<int>(), 1);
}

TEST(Cli, CanonicalC22IsNotALocalThrackle) {
  TempFile f("c22.json", canonical_c22());
  const auto r = run({"verify", "local-thrackle", "--pattern", f.path()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json j = result(r);
  EXPECT_EQ(j["holds"], false);
  ASSERT_TRUE(j.contains("plane_path"));
  const Json& path = j["plane_path"];
  const Json& vs = path.contains("vertices") ? path["vertices"] : path;
  EXPECT_EQ(vs.size(), 4u);
}

TEST(Cli, PlanarRejectsK33WithWitness) {
  TempFile f("k33.json", to_json(complete_bipartite(3, 3)).dump());
  const auto r = run({"planar", "--graph", f.path()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json j = result(r);
  EXPECT_EQ(j["planar"], false);
  EXPECT_EQ(j["kuratowski"]["kind"], "K3,3");
  EXPECT_EQ(j["kuratowski"]["edges"].size(), 9u);
}

TEST(Cli, ReportCarriesProvenance) {
  TempFile f("k4.json", to_json(complete_graph(4)).dump());
  const auto r = run({"planar", "--graph", f.path()});
  ASSERT_EQ(r.code, cli::kExitOk);
  const Json j = Json::parse(r.out);
  for (auto key : {"tool", "version", "command", "params", "inputs", "result", "result_digest",
                   "duration_seconds"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["command"], "planar");
  EXPECT_EQ(j["inputs"].size(), 1u);
  EXPECT_EQ(j["result_digest"], cli::digest(j["result"].dump()));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"planar", "--graph", "/nonexistent/g.json"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"planar", "--bogus"}).code, cli::kExitInputError);
  EXPECT_EQ(run({}).code, cli::kExitInputError);
  TempFile bad("bad.json", "{not json");
  EXPECT_EQ(run({"planar", "--graph", bad.path()}).code, cli::kExitInputError);
  // Adjacent edges may not cross in a simple drawing.
  TempFile adj("adj.json", R"({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]],
                               "crossings": [[["a","b"],["b","c"]]]})");
  EXPECT_EQ(run({"verify", "thrackle", "--pattern", adj.path()}).code, cli::kExitInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, TransitivityViolationIsReported) {
  // Type 1 on (0,2) alone breaks the type-3 chain 0 < 1 < 2; this is a
  // finding, not an error.
  TypeTable t = uniform_type_table(3, 2, OrderType::kType3);
  t.set(0, 2, 0, 1, OrderType::kType1);
  TempFile f("tt.json", to_json(t).dump());
  const auto r = run({"transitivity", "--table", f.path()});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(result(r)["transitive"], false);
}

TEST(Cli, PairCrossingTwiceExitsTwo) {
  // u0v0 bends over u1v1 and crosses it twice, so the K_{2,2} has no order type.
  const std::string doc = R"({
    "vertices": ["u0","u1","v0","v1"],
    "points": {"u0": [0,1,0,1], "u1": [0,1,1,1], "v0": [4,1,0,1], "v1": [4,1,1,1]},
    "edges": [["u0","v0"],["u0","v1"],["u1","v0"],["u1","v1"]],
    "polylines": {"u0|v0": [[2,1,2,1]]}})";
  TempFile f("twice.json", doc);
  const auto r = run({"typetable", "--drawing", f.path(), "--u", "u0,u1", "--v", "v0,v1"});
  EXPECT_EQ(r.code, cli::kExitInconsistency) << r.out << r.err;
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"halfcircle", "mc", "--n", "6", "--k", "2", "--trials",
                                      "500", "--seed", "9"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(Json::parse(a.out)["result_digest"], Json::parse(b.out)["result_digest"]);
  auto c = args;
  c.push_back("--jobs");
  c.push_back("3");
  EXPECT_EQ(Json::parse(run(c).out)["result"], result(a));
}

TEST(Cli, WritesSvg) {
  const auto path = (std::filesystem::temp_directory_path() / "sdraw_cli_ngon.svg").string();
  const auto r = run({"ngon", "--n", "8", "--spikes", "1", "--svg", path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::ifstream in(path);
  std::string head;
  std::getline(in, head);
  EXPECT_NE(head.find("<svg"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(result(r)["local_thrackle"], true);
  EXPECT_EQ(result(r)["thrackle"], false);
}

TEST(Cli, TwolinesFeedsFindCkk) {
  const auto tl = run({"twolines", "--s", "4", "--t", "4"});
  ASSERT_EQ(tl.code, cli::kExitOk);
  TempFile f("tl.json", tl.out);
  const auto r = run({"find-ckk", "--table", f.path(), "--k", "4"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(result(r)["outcome"], "success");
  EXPECT_EQ(result(r)["revalidated"], true);
}
