#include <algorithm>
#include <set>

#include "chordal/errors.hpp"
#include "chordal/graph.hpp"
#include "chordal/random.hpp"
#include "doctest.h"

using namespace chordal;

namespace {

Graph p3() { return Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Graph complete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(std::string(1, static_cast<char>('a' + k)));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(labels[u], labels[v]);
  }
  return Graph::from_edges(labels, edges);
}

Graph c4() {
  return Graph::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

Graph star(std::vector<std::string> leaves) {
  std::vector<std::string> labels{"r"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& l : leaves) {
    labels.push_back(l);
    edges.emplace_back("r", l);
  }
  return Graph::from_edges(labels, edges);
}

std::set<std::string> labels_set(const Graph& g, const VertexSet& s) {
  std::set<std::string> out;
  for (Vertex v : s) out.insert(g.label(v));
  return out;
}

// Every pair of consecutive vertices along the cycle through all of `cycle`.
bool is_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (!g.adjacent(cycle[k], cycle[(k + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("from_edges builds canonical graphs") {
  const Graph g = p3();
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const Graph single = Graph::from_edges({"a"}, {});
  CHECK(single.order() == 1);
  CHECK(single.size() == 0);

  CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{"a", "a"}}), SelfLoop);
  CHECK_THROWS_AS(Graph::from_edges({"a", "b"}, {{"a", "z"}}), UnknownVertex);

  const Graph dup = Graph::from_edges({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(dup.size() == 1);
}

TEST_CASE("neighbors and simplicial vertices") {
  const Graph g = p3();
  CHECK(labels_set(g, neighbors(g, "b")) == std::set<std::string>{"a", "c"});
  CHECK(labels_set(g, neighbors(g, "a")) == std::set<std::string>{"b"});
  CHECK_THROWS_AS(neighbors(g, "z"), UnknownVertex);

  const Graph k4 = complete(4);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(neighbors(k4, v).size() == 3);
    CHECK(is_simplicial(k4, v));
  }
  CHECK(is_simplicial(g, "a"));
  CHECK_FALSE(is_simplicial(g, "b"));
  CHECK_THROWS_AS(is_simplicial(g, "q"), UnknownVertex);
}

TEST_CASE("is_chordal on named graphs") {
  CHECK_FALSE(is_chordal(c4()));
  CHECK(is_chordal(star({"x", "y", "z"})));
  CHECK(is_chordal(p3()));
  CHECK(is_chordal(Graph{}));
  CHECK(is_chordal(Graph::from_edges({"a"}, {})));

  // K4 minus an edge: the only 4-cycle a-c-b-d has the chord c-d.
  const Graph diamond = Graph::from_edges(
      {"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(is_chordal(diamond));
  CHECK(is_chordal_by_cycle_search(diamond));
  CHECK(is_cycle(diamond, {0, 2, 1, 3}));
  CHECK(diamond.adjacent(2, 3));
}

TEST_CASE("find_peo and peo_with_suffix") {
  const Graph g = p3();
  const Peo peo = find_peo(g);
  CHECK(is_peo(g, peo.order));
  CHECK(peo.order.size() == 3);
  CHECK(is_peo(g, std::vector<Vertex>{0, 2, 1}));  // [a, c, b]
  CHECK_FALSE(is_peo(g, std::vector<Vertex>{1, 0, 2}));

  const Graph k3 = Graph::from_edges({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  std::vector<Vertex> perm{0, 1, 2};
  do {
    CHECK(is_peo(k3, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));

  CHECK_THROWS_AS(find_peo(c4()), NotChordal);

  const Vertex bc[] = {1, 2};
  CHECK(peo_with_suffix(g, bc).order == std::vector<Vertex>{0, 1, 2});
  const Vertex xy[] = {0, 1};
  CHECK(peo_with_suffix(k3, xy).order == std::vector<Vertex>{2, 0, 1});
  const Vertex ab[] = {0, 1};
  CHECK_THROWS_AS(peo_with_suffix(c4(), ab), NotChordal);
  const Vertex ac[] = {0, 2};
  CHECK_THROWS_AS(peo_with_suffix(g, ac), NotASimplex);
}

TEST_CASE("maximal simplices") {
  const Graph g = p3();
  CHECK(maximal_simplices(g) == std::vector<Simplex>{{0, 1}, {1, 2}});
  CHECK(maximal_simplices(complete(3)) == std::vector<Simplex>{{0, 1, 2}});
  const Graph s = star({"x", "y"});
  CHECK(maximal_simplices(s) == std::vector<Simplex>{{0, 1}, {0, 2}});
  CHECK_THROWS_AS(maximal_simplices(c4()), NotChordal);
  CHECK(maximal_simplices(Graph::from_edges({"a", "b"}, {})) == std::vector<Simplex>{{0}, {1}});
}

TEST_CASE("s_zero") {
  const Graph g = p3();
  auto sz = s_zero(g, g.vertex("a"));
  CHECK(labels_set(g, sz.simplex) == std::set<std::string>{"a", "b"});
  CHECK(labels_set(g, sz.core) == std::set<std::string>{"a"});

  const Graph k4 = complete(4);
  sz = s_zero(k4, 2);
  CHECK(sz.simplex == VertexSet{0, 1, 2, 3});
  CHECK(sz.core == VertexSet{0, 1, 2, 3});

  const Graph s = star({"x", "y", "z"});
  sz = s_zero(s, s.vertex("x"));
  CHECK(labels_set(s, sz.simplex) == std::set<std::string>{"r", "x"});
  CHECK(labels_set(s, sz.core) == std::set<std::string>{"x"});

  CHECK_THROWS_AS(s_zero(g, g.vertex("b")), NotSimplicial);
}

TEST_CASE("induced subgraphs") {
  const Graph k4 = complete(4);
  const Vertex three[] = {0, 1, 3};
  const Graph k3 = induced(k4, three);
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(k3.labels() == std::vector<std::string>{"a", "b", "d"});

  const std::string ac[] = {"a", "c"};
  const Graph two = induced(p3(), ac);
  CHECK(two.order() == 2);
  CHECK(two.size() == 0);

  const Graph path = delete_vertex(c4(), 0);
  CHECK(path.size() == 2);
  CHECK(is_chordal(path));

  const std::string bad[] = {"a", "zz"};
  CHECK_THROWS_AS(induced(p3(), bad), UnknownVertex);
}

TEST_CASE("chordality agrees with cycle search on all graphs up to 5 vertices") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - (n ? 1 : 0)) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      REQUIRE(is_chordal(g) == is_chordal_by_cycle_search(g));
    }
  }
}

TEST_CASE("chordal graph properties on random instances") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_chordal_graph(rng, 1 + uniform_index(rng, 8));
    REQUIRE(is_chordal(g));
    CHECK(is_chordal_by_cycle_search(g));
    const Peo peo = find_peo(g);
    CHECK(is_peo(g, peo.order));

    // induced subgraphs stay chordal
    VertexSet subset;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (uniform_index(rng, 2)) subset.push_back(v);
    }
    CHECK(is_chordal(induced(g, subset)));

    // two nonadjacent simplicial vertices unless complete
    const auto simp = simplicial_vertices(g);
    if (!is_complete(g)) {
      bool found = false;
      for (Vertex a : simp) {
        for (Vertex b : simp) found = found || (a != b && !g.adjacent(a, b));
      }
      CHECK(found);
    }

    const auto cliques = maximal_simplices(g);
    CHECK(cliques.size() <= g.order());
    for (const auto& c : cliques) {
      CHECK(is_simplex(g, c));
      for (const auto& d : cliques) {
        if (&c != &d) CHECK_FALSE(std::includes(d.begin(), d.end(), c.begin(), c.end()));
      }
    }
    for (auto [u, v] : g.edges()) {
      CHECK(std::any_of(cliques.begin(), cliques.end(), [&](const Simplex& c) {
        return std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v);
      }));
    }

    for (Vertex v : simp) {
      const auto sz = s_zero(g, v);
      CHECK(std::binary_search(sz.core.begin(), sz.core.end(), v));
      for (Vertex s : sz.core) CHECK(is_simplicial(g, s));
      // every maximal simplex meeting the core lies inside the simplex
      for (const auto& c : cliques) {
        const bool meets = std::any_of(c.begin(), c.end(), [&](Vertex x) {
          return std::binary_search(sz.core.begin(), sz.core.end(), x);
        });
        if (meets) CHECK(std::includes(sz.simplex.begin(), sz.simplex.end(), c.begin(), c.end()));
      }
    }

    // suffix PEOs for every maximal simplex
    for (const auto& c : cliques) {
      const Peo p = peo_with_suffix(g, c);
      CHECK(is_peo(g, p.order));
      CHECK(std::equal(c.begin(), c.end(), p.order.end() - static_cast<std::ptrdiff_t>(c.size())));
    }
  }
}

TEST_CASE("edge-list and JSON formats") {
  const Graph g = parse_edge_list("# path\nvertices a b c d\na b\nb c  # middle\n\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.labels() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(parse_edge_list(to_edge_list(g)) == g);

  const Graph inferred = parse_edge_list("x y\ny z\n");
  CHECK(inferred.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS_AS(parse_edge_list("a b c\n"), ParseError);

  const Graph j = parse_graph(R"({"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]})");
  CHECK(j.labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(j.size() == 2);
  CHECK(graph_from_json(to_json(j)) == j);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a"], "edges": [["a", "b"]]})"), UnknownVertex);
  CHECK(g.fingerprint() == parse_edge_list(to_edge_list(g)).fingerprint());
  CHECK(g.fingerprint() != inferred.fingerprint());
}

TEST_CASE("DOT export") {
  const Graph g = p3();
  const std::string dot = to_dot(g);
  CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
  const std::string cd = clique_intersection_dot(g);
  CHECK(cd.find("C0 -- C1 [label=\"{b}\"]") != std::string::npos);
}
