#include "chordal/errors.hpp"
#include "chordal/random.hpp"
#include "chordal/trees.hpp"
#include "doctest.h"

using namespace chordal;

namespace {

std::vector<std::string> names(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<std::string> out;
  for (const auto& [u, v] : edges) out.push_back(g.label(u) + g.label(v));
  return out;
}

// u <= v in the tree order, found by walking down from u.
bool below(const RootedTree& t, Vertex u, Vertex v) {
  std::vector<Vertex> stack{u};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (Vertex c : t.children(x)) stack.push_back(c);
  }
  return false;
}

}  // namespace

TEST_CASE("parsing trees") {
  const RootedTree a = parse_tree("(a(c),b)r;");
  const RootedTree b = parse_tree("((c)a,b)r;");
  const RootedTree c = parse_tree(R"({"root": "r", "parent": {"a": "r", "c": "a", "b": "r"}})");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.labels() == std::vector<std::string>{"r", "a", "c", "b"});
  CHECK(a.label(a.parent(a.vertex("c"))) == "a");
  CHECK(to_newick(a) == "((c)a,b)r;");
  CHECK(parse_tree(to_newick(a)) == a);
  CHECK(tree_from_json(to_json(a)) == a);
  CHECK(to_json(a).dump() == R"({"root":"r","parent":{"a":"r","c":"a","b":"r"}})");
  CHECK(parse_tree("r;").order() == 1);

  CHECK_THROWS_AS(parse_tree("(a,a)r;"), ParseError);
  CHECK_THROWS_AS(parse_tree("(a,b"), ParseError);
  CHECK_THROWS_AS(parse_tree(R"({"root": "r", "parent": {"a": "b", "b": "a"}})"), ParseError);
  CHECK_THROWS_AS(parse_tree(R"({"root": "r", "parent": {"a": "z"}})"), ParseError);
}

TEST_CASE("comparability graphs") {
  const Graph line = comparability_graph(parse_tree("((b)a)r;"));
  CHECK(line.size() == 3);
  CHECK(is_complete(line));

  const Graph star = comparability_graph(parse_tree("(a,b)r;"));
  CHECK(names(star, star.edges()) == std::vector<std::string>{"ra", "rb"});

  const RootedTree cat = parse_tree("(a(c),b)r;");
  const Graph g = comparability_graph(cat);
  CHECK(names(g, g.edges()) == std::vector<std::string>{"ra", "rc", "rb", "ac"});
  CHECK(maximal_simplices_via_leaves(cat) == maximal_simplices(g));
  CHECK(maximal_simplices_via_leaves(cat).size() == 2);
}

TEST_CASE("heights and profiles") {
  const RootedTree line = parse_tree("(((c)b)a)r;");
  using Profile = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(semidirect_profile(line) == Profile{{1, 1}, {2, 1}, {3, 1}});
  CHECK(semidirect_profile(parse_tree("(a,b,c)r;")) == Profile{{1, 3}});
  CHECK(semidirect_profile(parse_tree("r;")).empty());
  CHECK(height(line, line.vertex("c")) == 3);
  CHECK(height(line, line.root()) == 0);

  const RootedTree cat = parse_tree("(a(c),b)r;");
  CHECK(labels_of(comparability_graph(cat), leaves_first_peo(cat).order) ==
        std::vector<std::string>{"c", "a", "b", "r"});
}

TEST_CASE("random trees") {
  Rng rng(9);
  for (int round = 0; round < 100; ++round) {
    const RootedTree t = random_tree(rng, 1 + uniform_index(rng, 9));
    const Graph g = comparability_graph(t);
    CHECK(is_chordal(g));
    CHECK(is_chordal_by_cycle_search(g));
    for (Vertex u = 0; u < t.order(); ++u)
      for (Vertex v = u + 1; v < t.order(); ++v) CHECK(g.adjacent(u, v) == (below(t, u, v) || below(t, v, u)));
    CHECK(maximal_simplices_via_leaves(t) == maximal_simplices(g));

    const Peo peo = leaves_first_peo(t);
    CHECK(is_peo(g, peo.order));
    for (std::size_t i = 0; i < t.order(); ++i) {
      CHECK(later_neighbors(g, peo, i).size() == height(t, peo.order[i]));
    }
  }
}

TEST_CASE("projection to a chain sees only its own layers") {
  const RootedTree cat = parse_tree("(a(c),b)r;");
  const Graph g = comparability_graph(cat);
  for (Vertex w = 0; w < cat.order(); ++w) CHECK(projection_kills_layers(cat, LimitElement::identity(g), w));

  const LimitElement inside = edge_generator(g, "a", "c");
  CHECK(to_string(project(inside, cat.chain(cat.vertex("c")))) == "A[a,c]");
  CHECK(project(edge_generator(g, "r", "b"), cat.chain(cat.vertex("c"))).empty());

  Rng rng(14);
  for (int round = 0; round < 25; ++round) {
    const RootedTree t = random_tree(rng, 1 + uniform_index(rng, 7));
    const Graph tg = comparability_graph(t);
    if (tg.size() == 0) continue;
    const AlphabetPtr edges = edge_alphabet(tg);
    std::vector<Letter> letters;
    for (std::size_t k = uniform_index(rng, 9); k-- > 0;) {
      letters.push_back({uniform_index(rng, edges->size()), uniform_index(rng, 2) ? 1 : -1});
    }
    const LimitElement x = from_edge_word(tg, reduce(edges, letters));
    for (Vertex w = 0; w < t.order(); ++w) CHECK(projection_kills_layers(t, x, w));
  }
  CHECK_THROWS_AS(projection_kills_layers(cat, LimitElement::identity(comparability_graph(parse_tree("(a)r;"))), 0),
                  GraphMismatch);
}
