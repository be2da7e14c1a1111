#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/pure_braid.hpp"
#include "chordal/trees.hpp"

namespace chordal {

// Random instance generators for property checks. Deterministic for a given
// engine state.
using Rng = std::mt19937_64;

// Labels "v0", "v1", ...
std::vector<std::string> default_labels(std::size_t n);

// Graph on n vertices whose edge set is read from the bits of `mask`, in the
// order (0,1), (0,2), ..., (1,2), ...
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

Graph random_graph(Rng& rng, std::size_t n, double edge_probability);

// Each new vertex is joined to a random simplex of the graph so far, which
// yields every chordal graph with positive probability. Labels are shuffled
// so the insertion order is not itself a PEO.
Graph random_chordal_graph(Rng& rng, std::size_t n);

// Chordal graph with at most `max_edges` edges.
Graph random_chordal_graph_max_edges(Rng& rng, std::size_t n, std::size_t max_edges);

// Uniformly picks a simplicial vertex of what remains, until empty.
Peo random_peo(Rng& rng, const Graph& g);  // throws NotChordal

// Vertex k attaches to a uniformly chosen earlier vertex; root "t0".
RootedTree random_tree(Rng& rng, std::size_t n);

BraidWord random_braid_word(Rng& rng, const IndexSet& index_set, std::size_t length);

std::size_t uniform_index(Rng& rng, std::size_t bound);  // [0, bound)

}  // namespace chordal
