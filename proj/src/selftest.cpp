#include "chordal/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "chordal/errors.hpp"
#include "chordal/gamma.hpp"
#include "chordal/graph.hpp"
#include "chordal/invariants.hpp"
#include "chordal/pure_braid.hpp"
#include "chordal/random.hpp"
#include "chordal/trees.hpp"

namespace chordal {

namespace {

using Clock = std::chrono::steady_clock;

class Suite {
 public:
  Suite(int id, std::string name, double limit) : start_(Clock::now()) {
    result_.id = id;
    result_.name = std::move(name);
    result_.limit_seconds = limit;
  }

  // Runs one case; an exception counts as a failure.
  void check(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    ++result_.cases;
    std::string why;
    try {
      if (body()) {
        ++result_.passed;
        return;
      }
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    if (result_.failure.empty()) result_.failure = describe() + why;
  }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  Clock::time_point start_;
};

std::size_t count_or(const SelftestOptions& opt, std::size_t fallback) { return opt.cases.value_or(fallback); }

Rng suite_rng(const SelftestOptions& opt, int id) { return Rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

FreeWord random_word(Rng& rng, const AlphabetPtr& a, std::size_t max_len) {
  if (a->size() == 0) return FreeWord(a);
  std::vector<Letter> letters;
  for (std::size_t k = uniform_index(rng, max_len + 1); k-- > 0;) {
    letters.push_back({uniform_index(rng, a->size()), uniform_index(rng, 2) ? 1 : -1});
  }
  return reduce(a, letters);
}

LimitElement random_element(Rng& rng, const Graph& g, std::size_t max_len) {
  return from_edge_word(g, random_word(rng, edge_alphabet(g), max_len));
}

IndexSet random_subset(Rng& rng, const IndexSet& from) {
  std::vector<std::string> keep;
  for (const auto& l : from.labels()) {
    if (uniform_index(rng, 2)) keep.push_back(l);
  }
  return IndexSet(keep);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_index_edges(default_labels(n), edges);
}

std::string describe_graph(const Graph& g) { return "graph " + to_json(g).dump(); }

}  // namespace

SuiteResult check_chordality(const SelftestOptions& opt) {
  Suite suite(1, "chordality oracle equivalence", 60);
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::size_t pairs = n * (n - (n > 0)) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      suite.check([&] { return is_chordal(g) == is_chordal_by_cycle_search(g); },
                  [&] { return describe_graph(g); });
    }
  }
  Rng rng = suite_rng(opt, 1);
  const std::size_t total = count_or(opt, 500);
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t n = 7 + uniform_index(rng, 2);
    const Graph g = k % 2 ? random_chordal_graph(rng, n)
                          : random_graph(rng, n, std::uniform_real_distribution<double>(0.15, 0.85)(rng));
    suite.check(
        [&] {
          const bool chordal = is_chordal(g);
          if (chordal && !is_peo(g, find_peo(g).order)) return false;
          return chordal == is_chordal_by_cycle_search(g);
        },
        [&] { return describe_graph(g); });
  }
  return suite.finish();
}

SuiteResult check_chromatic(const SelftestOptions& opt) {
  Suite suite(2, "chromatic agreement", 60);
  Rng rng = suite_rng(opt, 2);
  const std::size_t total = count_or(opt, 200);
  for (std::size_t k = 0; k < total; ++k) {
    const Graph g = random_chordal_graph(rng, 1 + uniform_index(rng, 8));
    suite.check(
        [&] {
          const Peo first = find_peo(g);
          Peo second = random_peo(rng, g);
          for (int tries = 0; tries < 32 && second == first && g.order() > 1; ++tries) second = random_peo(rng, g);
          if (g.order() > 1 && second == first) return false;
          const IntPolynomial chi = chromatic_polynomial(g, first);
          if (!(chromatic_polynomial(g, second) == chi)) return false;
          for (std::int64_t q = 0; q <= 5; ++q) {
            if (chi.evaluate(q) != brute_force_coloring_count(g, q)) return false;
          }
          return true;
        },
        [&] { return describe_graph(g); });
  }
  return suite.finish();
}

SuiteResult check_regions(const SelftestOptions& opt) {
  Suite suite(3, "region count", 0);
  Rng rng = suite_rng(opt, 3);
  const std::size_t total = count_or(opt, 100);
  for (std::size_t k = 0; k < total; ++k) {
    const Graph g = random_chordal_graph_max_edges(rng, 1 + uniform_index(rng, 10), 12);
    suite.check(
        [&] {
          const std::int64_t regions = region_count(g);
          return regions == brute_force_acyclic_orientations(g) &&
                 regions == std::llabs(chromatic_polynomial(g).evaluate(-1));
        },
        [&] { return describe_graph(g); });
  }
  return suite.finish();
}

SuiteResult check_functoriality(const SelftestOptions& opt) {
  Suite suite(4, "braid functoriality", 0);
  Rng rng = suite_rng(opt, 4);
  const std::size_t total = count_or(opt, 500);
  for (std::size_t k = 0; k < total; ++k) {
    const IndexSet i = IndexSet::range(1 + uniform_index(rng, 4));
    const IndexSet j = random_subset(rng, i);
    const IndexSet kk = random_subset(rng, j);
    const BraidWord w = random_braid_word(rng, i, uniform_index(rng, 13));
    const BraidWord u = random_braid_word(rng, j, uniform_index(rng, 13));
    suite.check(
        [&] {
          return equal(forget(forget(w, j), kk), forget(w, kk)) && equal(forget(include(u, i), j), u);
        },
        [&] { return "word " + to_string(w) + " over " + std::to_string(i.size()) + " strands"; });
  }
  return suite.finish();
}

SuiteResult check_combing(const SelftestOptions& opt) {
  Suite suite(5, "comb round trip", 300);
  Rng rng = suite_rng(opt, 5);
  const std::size_t round_trips = count_or(opt, 1000);
  for (std::size_t k = 0; k < round_trips; ++k) {
    const IndexSet s = IndexSet::range(1 + uniform_index(rng, 4));
    const BraidWord w = random_braid_word(rng, s, uniform_index(rng, 13));
    suite.check([&] { return equal(uncomb(comb(w)), w); }, [&] { return "round trip of " + to_string(w); });
  }
  const std::size_t pairs = count_or(opt, 500);
  for (std::size_t k = 0; k < pairs; ++k) {
    const IndexSet s = IndexSet::range(1 + uniform_index(rng, 4));
    const BraidWord u = random_braid_word(rng, s, uniform_index(rng, 13));
    BraidWord v = k % 2 ? random_braid_word(rng, s, uniform_index(rng, 13)) : uncomb(comb(u));
    if (k % 4 == 2 && s.size() >= 2) v *= generator(s, s.label(0), s.label(1));
    suite.check([&] { return comb_equal(u, v) == equal(u, v); },
                [&] { return "pair " + to_string(u) + " / " + to_string(v); });
  }
  return suite.finish();
}

SuiteResult check_tower(const SelftestOptions& opt) {
  Suite suite(6, "tower exactness", 0);
  Rng rng = suite_rng(opt, 6);
  const std::size_t total = count_or(opt, 300);
  for (std::size_t k = 0; k < total; ++k) {
    const Graph g = random_chordal_graph(rng, 1 + uniform_index(rng, 7));
    const LimitElement x = random_element(rng, g, 10);
    suite.check(
        [&] {
          for (Vertex v : simplicial_vertices(g)) {
            const LimitElement down = delete_simplicial_vertex(x, v);
            const LimitElement sec = section(down, g, v);
            const LimitElement kappa = x * sec.inverse();
            if (!equal(from_edge_word(g, kernel_word(kappa, v)) * sec, x)) return false;
            bool succeeded = true;
            try {
              (void)kernel_word(x, v);
            } catch (const NotInKernel&) {
              succeeded = false;
            }
            if (succeeded != is_identity(down)) return false;
          }
          return true;
        },
        [&] { return describe_graph(g); });
  }
  return suite.finish();
}

SuiteResult check_limit(const SelftestOptions& opt) {
  Suite suite(7, "normal forms and pull-back square", 0);
  Rng rng = suite_rng(opt, 7);
  const std::size_t trips = count_or(opt, 300);
  for (std::size_t k = 0; k < trips; ++k) {
    const Graph g = random_chordal_graph(rng, 1 + uniform_index(rng, 7));
    const Peo peo = random_peo(rng, g);
    GammaNormalForm nf{g, peo, {}};
    for (std::size_t i = 0; i < g.order(); ++i) nf.layers.push_back(random_word(rng, layer_alphabet(g, peo, i), 3));
    suite.check([&] { return normal_form(from_normal_form(nf), peo) == nf; },
                [&] { return "normal form round trip on " + describe_graph(g); });
  }

  const std::size_t pairs = count_or(opt, 300);
  for (std::size_t k = 0; k < pairs; ++k) {
    const Graph g = random_chordal_graph(rng, 1 + uniform_index(rng, 7));
    const LimitElement x = random_element(rng, g, 8);
    const LimitElement y = k % 2 ? random_element(rng, g, 8) : from_normal_form(normal_form(x, random_peo(rng, g)));
    const Peo p = random_peo(rng, g);
    suite.check(
        [&] {
          if ((normal_form(x, p) == normal_form(y, p)) != equal(x, y)) return false;
          for (Vertex v : simplicial_vertices(g)) {
            if (!verify_pullback_square(x, v) || !verify_pullback_square(y, v)) return false;
          }
          return true;
        },
        [&] { return "pair on " + describe_graph(g); });
  }

  // corrupt one clique along a pair of strands it shares with another clique
  const std::size_t corrupted = count_or(opt, 100);
  for (std::size_t k = 0; k < corrupted;) {
    const Graph g = random_chordal_graph(rng, 4 + uniform_index(rng, 4));
    const auto cliques = maximal_simplices(g);
    std::vector<std::pair<std::size_t, Edge>> spots;
    for (std::size_t a = 0; a < cliques.size(); ++a) {
      for (std::size_t b = 0; b < cliques.size(); ++b) {
        if (a == b) continue;
        Simplex meet;
        std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(), cliques[b].end(),
                              std::back_inserter(meet));
        for (std::size_t i = 0; i < meet.size(); ++i)
          for (std::size_t j = i + 1; j < meet.size(); ++j) spots.push_back({a, Edge{meet[i], meet[j]}});
      }
    }
    if (spots.empty()) continue;
    ++k;
    const auto& [slot, edge] = spots[uniform_index(rng, spots.size())];
    const LimitElement x = random_element(rng, g, 8);
    Components bad = x.components();
    const Simplex& s = cliques[slot];
    bad[s] = bad[s] * generator(simplex_index_set(g, s), g.label(edge.first), g.label(edge.second),
                                uniform_index(rng, 2) ? 1 : -1);
    const auto simp = simplicial_vertices(g);
    const Vertex v = simp[uniform_index(rng, simp.size())];
    suite.check([&] { return !is_compatible(g, bad) && !verify_pullback_square(g, v, bad); },
                [&] { return "corrupted tuple on " + describe_graph(g); });
  }
  return suite.finish();
}

SuiteResult check_complete_graphs(const SelftestOptions& opt) {
  Suite suite(8, "complete-graph degeneration", 0);
  Rng rng = suite_rng(opt, 8);
  const std::size_t total = count_or(opt, 200);
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t n = 2 + uniform_index(rng, 3);
    const Graph g = complete_graph(n);
    const LimitElement x = random_element(rng, g, 10);
    const LimitElement y = k % 2 ? random_element(rng, g, 10) : from_normal_form(normal_form(x, random_peo(rng, g)));
    suite.check(
        [&] {
          const BraidWord& bx = x.words()[0];
          const BraidWord& by = y.words()[0];
          if (equal(x, y) != equal(bx, by)) return false;
          if (!((x * y).words()[0] == bx * by) || !(x.inverse().words()[0] == bx.inverse())) return false;
          if (!(comb(from_normal_form(normal_form(x)).words()[0]) == comb(bx))) return false;
          const Vertex v = uniform_index(rng, n);
          const BraidWord down = delete_simplicial_vertex(x, v).words()[0];
          return down == forget(bx, bx.index_set().without(v));
        },
        [&] { return "K" + std::to_string(n) + " word " + to_string(x.words()[0]); });
  }
  return suite.finish();
}

SuiteResult check_trees(const SelftestOptions& opt) {
  Suite suite(9, "rooted trees", 0);
  Rng rng = suite_rng(opt, 9);
  const std::size_t total = count_or(opt, 100);
  for (std::size_t k = 0; k < total; ++k) {
    const RootedTree t = random_tree(rng, 1 + uniform_index(rng, 9));
    suite.check(
        [&] {
          const Graph g = comparability_graph(t);
          if (!is_chordal(g)) return false;
          if (maximal_simplices_via_leaves(t) != maximal_simplices(g)) return false;
          const LimitElement x = random_element(rng, g, 8);
          const Peo peo = leaves_first_peo(t);
          const GammaNormalForm nf = normal_form(x, peo);
          std::vector<std::size_t> per_height;
          for (std::size_t i = 0; i < nf.layers.size(); ++i) {
            const std::size_t h = height(t, peo.order[i]);
            if (nf.layers[i].alphabet()->size() != h) return false;
            if (h == 0) continue;
            if (per_height.size() < h) per_height.resize(h, 0);
            ++per_height[h - 1];
          }
          const auto profile = semidirect_profile(t);
          if (profile.size() != per_height.size()) return false;
          for (std::size_t h = 0; h < profile.size(); ++h) {
            if (profile[h].second != per_height[h]) return false;
          }
          for (Vertex w = 0; w < t.order(); ++w) {
            if (!projection_kills_layers(t, x, w)) return false;
          }
          return true;
        },
        [&] { return "tree " + to_newick(t); });
  }
  return suite.finish();
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
  return {check_chordality(opt), check_chromatic(opt), check_regions(opt),
          check_functoriality(opt), check_combing(opt), check_tower(opt),
          check_limit(opt), check_complete_graphs(opt), check_trees(opt)};
}

std::string summary_line(const SuiteResult& r) {
  char timing[64];
  if (r.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2fs (limit %.0fs)", r.seconds, r.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
  }
  std::string line = std::string(r.ok() ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + " " + r.name + ": " +
                     std::to_string(r.passed) + "/" + std::to_string(r.cases) + " cases, " + timing;
  if (!r.failure.empty()) line += "; first failure: " + r.failure;
  return line;
}

}  // namespace chordal
