#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace chordal {

// Vertices are identified by their position in the graph's vertex order
// (insertion order of the labels). Every ordered output of this module
// (neighbour lists, edges, simplices, tie-breaking) follows that order.
using Vertex = std::size_t;

// Sorted, duplicate-free set of vertices.
using VertexSet = std::vector<Vertex>;

// A vertex set whose induced subgraph is complete.
using Simplex = VertexSet;

using Edge = std::pair<Vertex, Vertex>;  // first < second

// Finite simple undirected graph over labelled vertices. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws UnknownVertex for an endpoint that is not declared, SelfLoop for
  // a pair (v, v), ParseError for duplicate labels. Duplicate edges collapse.
  static Graph from_edges(std::vector<std::string> vertices,
                          std::span<const std::pair<std::string, std::string>> edges);
  static Graph from_edges(std::vector<std::string> vertices,
                          std::initializer_list<std::pair<std::string, std::string>> edges) {
    return from_edges(std::move(vertices),
                      std::span<const std::pair<std::string, std::string>>(edges.begin(), edges.size()));
  }
  // Same, with endpoints given as vertex indices.
  static Graph from_index_edges(std::vector<std::string> vertices, std::span<const Edge> edges);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex vertex(std::string_view label) const;  // throws UnknownVertex

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[u * labels_.size() + v] != 0;
  }
  // Sorted neighbour list; throws UnknownVertex.
  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Canonical edge list, each edge (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  // Content hash over labels and edges, stable across runs.
  std::string fingerprint() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<unsigned char> adjacency_;
  std::vector<VertexSet> neighbors_;
  std::size_t edge_count_ = 0;
};

// Perfect elimination ordering: order[i] is simplicial in the subgraph
// induced on order[i], order[i+1], ...
struct Peo {
  std::vector<Vertex> order;

  friend bool operator==(const Peo&, const Peo&) = default;
};

VertexSet neighbors(const Graph& g, Vertex v);
VertexSet neighbors(const Graph& g, std::string_view v);

bool is_simplex(const Graph& g, std::span<const Vertex> members);
bool is_complete(const Graph& g);
bool is_simplicial(const Graph& g, Vertex v);
bool is_simplicial(const Graph& g, std::string_view v);
std::vector<Vertex> simplicial_vertices(const Graph& g);

// Visit order of a lexicographic breadth-first search. Ties go to the vertex
// lowest in the vertex order; each component starts at its lowest vertex.
std::vector<Vertex> lex_bfs(const Graph& g);

// Independent PEO verifier: every vertex is simplicial among its successors.
bool is_peo(const Graph& g, std::span<const Vertex> order);
// Throws InvalidPeo unless `peo` is a PEO of g.
void require_peo(const Graph& g, const Peo& peo);

// Lexicographic BFS, reversed, then verified.
bool is_chordal(const Graph& g);
// Reference check: walks every cycle of length >= 4 and looks for a chord.
// Exponential; meant for small graphs.
bool is_chordal_by_cycle_search(const Graph& g);

Peo find_peo(const Graph& g);  // throws NotChordal
// PEO whose last |s| entries are exactly s (in vertex order). Throws
// NotChordal, NotASimplex.
Peo peo_with_suffix(const Graph& g, std::span<const Vertex> s);

// Later-neighbour set of order[i] along a PEO.
VertexSet later_neighbors(const Graph& g, const Peo& peo, std::size_t position);

// All inclusion-maximal simplices, each sorted, list sorted. Throws NotChordal.
std::vector<Simplex> maximal_simplices(const Graph& g);

struct SZero {
  Simplex simplex;   // N(v) + v, the unique maximal simplex containing v
  VertexSet core;    // members all of whose neighbours stay inside `simplex`
};
// Throws NotSimplicial.
SZero s_zero(const Graph& g, Vertex v);

// Subgraph induced on `subset`; vertex order and labels are inherited.
Graph induced(const Graph& g, std::span<const Vertex> subset);
Graph induced(const Graph& g, std::span<const std::string> subset);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

// Maps vertices of g that survive in `sub` (an induced subgraph of g) to their
// index in `sub`.
std::optional<Vertex> map_vertex(const Graph& g, const Graph& sub, Vertex v);
VertexSet map_vertices(const Graph& from, const Graph& to, std::span<const Vertex> vs);

std::vector<std::string> labels_of(const Graph& g, std::span<const Vertex> vs);
VertexSet vertices_of(const Graph& g, std::span<const std::string> labels);

// ---- text formats ----------------------------------------------------------

// One `u v` pair per line; `#` starts a comment; a line with a single label
// declares an isolated vertex; an optional `vertices a b c` line fixes the
// vertex order up front.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// {"vertices": [...], "edges": [[u, v], ...]}; integer labels are accepted.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Graph& g);

// Either format, sniffed from the first non-blank character.
Graph parse_graph(std::string_view text);

std::string to_dot(const Graph& g);
// Nodes are maximal simplices; an edge joins two simplices with non-empty
// intersection and is labelled by it.
std::string clique_intersection_dot(const Graph& g);

}  // namespace chordal
