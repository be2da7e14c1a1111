#include <sstream>

#include "chordal/cli.hpp"
#include "chordal/gamma.hpp"
#include "chordal/graph.hpp"
#include "chordal/pure_braid.hpp"
#include "chordal/trees.hpp"
#include "doctest.h"

using namespace chordal;
using nlohmann::json;

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

std::string data(const std::string& name) { return std::string(CHORDAL_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("chordal prints a certificate") {
  const Run r = run({"chordal", data("p3.json")});
  REQUIRE(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["chordal"] == true);
  const Graph g = parse_graph(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})");
  CHECK(is_peo(g, vertices_of(g, j["peo"].get<std::vector<std::string>>())));
}

TEST_CASE("negative verdicts exit 1") {
  CHECK(run({"chordal", data("c4.edges")}).code == cli::kNegative);
  CHECK(run({"chordal", "a b;b c;c d;d a"}).code == cli::kNegative);

  const Run r = run({"braid", "eq", "A[1,2] A[1,3]", "A[1,3] A[1,2]", "--strands", "3"});
  CHECK(r.code == cli::kNegative);
  CHECK(json::parse(r.out)["equal"] == false);

  // A12 commutes with A13 A23 (the full twist of strands 1..3 is central).
  CHECK(run({"braid", "eq", "A[1,2] A[1,3] A[2,3]", "A[1,3] A[2,3] A[1,2]", "--strands", "3"}).code == cli::kOk);
  CHECK(run({"braid", "eq", "A[1,2] A[1,3]", "A[1,3] A[1,2]", "--strands", "3", "--comb"}).code ==
        cli::kNegative);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"chordal", data("p3.json"), "--bogus"}).code == cli::kUsage);
  CHECK(run({"chordal", data("missing.json")}).code == cli::kUsage);
  CHECK(run({"braid", "nf", "A[1,5]", "--strands", "3"}).code == cli::kUsage);
  CHECK(run({"braid", "sideways", "A[1,2]", "--strands", "3"}).code == cli::kUsage);
  CHECK(run({"gamma", "nf", data("p3.json"), "E[a,c]"}).code == cli::kUsage);
  const Run r = run({"gamma", "nf", data("c4.edges"), "E[a,b]"});
  CHECK(r.code == cli::kNegative);
  CHECK(!r.err.empty());
}

TEST_CASE("selftest with a seed") {
  const Run a = run({"selftest", "--seed", "7", "--cases", "200"});
  REQUIRE(a.code == cli::kOk);
  const json j = json::parse(a.out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"].size() == 9);
  for (const auto& s : j["suites"]) CHECK(s["passed"] == s["cases"]);

  const Run b = run({"selftest", "--seed", "7", "--cases", "200"});
  json ja = j, jb = json::parse(b.out);
  for (auto* x : {&ja, &jb})
    for (auto& s : (*x)["suites"]) s.erase("seconds");
  CHECK(ja == jb);
}

TEST_CASE("JSON outputs round-trip through the parsers") {
  const Graph p3 = parse_graph(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]})");

  const Run tg = run({"tree", "graph", data("tree.nwk")});
  REQUIRE(tg.code == cli::kOk);
  const Graph comparability = graph_from_json(json::parse(tg.out));
  CHECK(comparability == comparability_graph(parse_tree(std::string_view("(((x,y)u,v)w,(z)s)r"))));

  const IndexSet s3 = IndexSet::range(3);
  const Run bf = run({"braid", "forget", "A[1,3] A[1,2] A[2,3]^-1", "--strands", "3", "--keep", "1,3"});
  REQUIRE(bf.code == cli::kOk);
  const json jf = json::parse(bf.out);
  const IndexSet kept(jf["index"].get<std::vector<std::string>>());
  CHECK(equal(braid_word_from_json(kept, jf["word"]), forget(parse_braid_word(s3, "A[1,3] A[1,2] A[2,3]^-1"), kept)));
  CHECK(equal(parse_braid_word(kept, jf["text"].get<std::string>()), parse_braid_word(kept, "A[1,3]")));

  const std::string w = "E[a,b] E[b,c]^-1 E[a,b]^2";
  const Run gn = run({"gamma", "nf", data("p3.json"), w});
  REQUIRE(gn.code == cli::kOk);
  const json jn = json::parse(gn.out);
  std::string joined;
  for (const auto& layer : jn["layers"]) joined += layer["word"].get<std::string>() + " ";
  CHECK(equal(from_edge_word(p3, joined), from_edge_word(p3, w)));

  const Run gi = run({"invariants", data("p3.json"), "--oracle"});
  REQUIRE(gi.code == cli::kOk);
  const json ji = json::parse(gi.out);
  CHECK(ji["regions"] == 4);
  CHECK(ji["chromatic"]["coefficients"] == json::array({0, 1, -2, 1}));
}

TEST_CASE("pretty and dot output") {
  const Run c = run({"cliques", data("p3.json"), "--dot"});
  CHECK(c.code == cli::kOk);
  CHECK(c.out.find("graph") != std::string::npos);
  const Run p = run({"--pretty", "invariants", "a b;b c;c a"});
  CHECK(p.code == cli::kOk);
  CHECK(p.out.find("regions: 6") != std::string::npos);
  CHECK(run({"gamma", "pullback-check", data("p3.json"), "E[a,b] E[b,c]"}).code == cli::kOk);
}
