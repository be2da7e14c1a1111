#include "chordal/random.hpp"

#include <algorithm>
#include <numeric>

#include "chordal/errors.hpp"

namespace chordal {

std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("v" + std::to_string(k));
  return labels;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph::from_index_edges(default_labels(n), edges);
}

Graph random_graph(Rng& rng, std::size_t n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_index_edges(default_labels(n), edges);
}

namespace {

Graph chordal_with_limit(Rng& rng, std::size_t n, std::size_t max_edges) {
  // Build by reverse elimination: vertex k attaches to a simplex of 0..k-1.
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::size_t edge_count = 0;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::size_t> simplex;
    if (std::bernoulli_distribution(0.85)(rng)) {
      simplex.push_back(uniform_index(rng, k));
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::bernoulli_distribution take(0.5);
      for (std::size_t w : order) {
        if (w == simplex.front() || !take(rng)) continue;
        const bool fits = std::all_of(simplex.begin(), simplex.end(),
                                      [&](std::size_t s) { return adj[s][w]; });
        if (fits) simplex.push_back(w);
      }
    }
    for (std::size_t s : simplex) {
      if (edge_count >= max_edges) break;
      adj[k][s] = adj[s][k] = true;
      ++edge_count;
    }
  }
  // A prefix of a simplex is a simplex, so truncation keeps chordality.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    }
  }
  return Graph::from_index_edges(default_labels(n), edges);
}

}  // namespace

Graph random_chordal_graph(Rng& rng, std::size_t n) {
  return chordal_with_limit(rng, n, static_cast<std::size_t>(-1));
}

Graph random_chordal_graph_max_edges(Rng& rng, std::size_t n, std::size_t max_edges) {
  return chordal_with_limit(rng, n, max_edges);
}

Peo random_peo(Rng& rng, const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> gone(n, false);
  Peo peo;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      bool simplicial = true;
      const auto& nb = g.neighbors(v);
      for (std::size_t a = 0; a < nb.size() && simplicial; ++a) {
        for (std::size_t b = a + 1; b < nb.size() && simplicial; ++b) {
          if (!gone[nb[a]] && !gone[nb[b]] && !g.adjacent(nb[a], nb[b])) simplicial = false;
        }
      }
      if (simplicial) candidates.push_back(v);
    }
    if (candidates.empty()) throw NotChordal("no simplicial vertex left");
    const Vertex v = candidates[uniform_index(rng, candidates.size())];
    gone[v] = true;
    peo.order.push_back(v);
  }
  return peo;
}

RootedTree random_tree(Rng& rng, std::size_t n) {
  std::vector<std::pair<std::string, std::string>> parents;
  for (std::size_t k = 1; k < n; ++k) {
    parents.emplace_back("t" + std::to_string(k), "t" + std::to_string(uniform_index(rng, k)));
  }
  return RootedTree("t0", parents);
}

BraidWord random_braid_word(Rng& rng, const IndexSet& index_set, std::size_t length) {
  const std::size_t n = index_set.size();
  BraidWord w(index_set);
  if (n < 2) return w;
  std::bernoulli_distribution sign(0.5);
  // Raw letters; free cancellation may shorten the result.
  std::vector<BraidLetter> letters;
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t i = uniform_index(rng, n);
    std::size_t j = uniform_index(rng, n - 1);
    if (j >= i) ++j;
    letters.push_back({std::min(i, j), std::max(i, j), sign(rng) ? 1 : -1});
  }
  return BraidWord(index_set, letters);
}

}  // namespace chordal
