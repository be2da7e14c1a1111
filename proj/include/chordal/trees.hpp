#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "chordal/gamma.hpp"
#include "chordal/graph.hpp"

namespace chordal {

// Finite rooted tree. Vertex 0 is the root; the remaining vertices follow
// the order in which they were declared. Comparability graphs use the same
// vertex order, so tree vertices and graph vertices share indices.
class RootedTree {
 public:
  RootedTree() = default;

  // `parents` lists (child, parent) pairs. Throws ParseError when a vertex
  // is declared twice, a parent is unknown, or some vertex cannot reach
  // the root.
  RootedTree(std::string root, std::span<const std::pair<std::string, std::string>> parents);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  Vertex vertex(std::string_view label) const;  // throws UnknownVertex
  Vertex root() const noexcept { return 0; }
  Vertex parent(Vertex v) const { return parent_.at(v); }  // root -> itself
  const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }
  bool is_leaf(Vertex v) const { return children(v).empty(); }

  // Ancestors of v and v itself, sorted.
  VertexSet chain(Vertex v) const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.labels_ == b.labels_ && a.parent_ == b.parent_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
};

Graph comparability_graph(const RootedTree& t);

// One simplex per leaf: the leaf and its ancestors. Sorted like
// maximal_simplices().
std::vector<Simplex> maximal_simplices_via_leaves(const RootedTree& t);

std::size_t height(const RootedTree& t, Vertex s);  // number of proper ancestors

// (h, number of vertices of height h) for h = 1 .. max height.
std::vector<std::pair<std::size_t, std::size_t>> semidirect_profile(const RootedTree& t);

// Repeatedly removes a deepest remaining vertex (ties by vertex order).
Peo leaves_first_peo(const RootedTree& t);

// Zeroes every normal-form layer (leaves-first order) outside the chain of w
// and checks that the projection to that chain is unchanged.
bool projection_kills_layers(const RootedTree& t, const LimitElement& a, Vertex w);

// {"root": r, "parent": {"a": "r", ...}}; key order is preserved.
RootedTree tree_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const RootedTree& t);

// Newick-style text. A node is an optional parenthesised child list, its
// label and optionally another child list: "(a(c),b)r;" and "((c)a,b)r;"
// describe the same tree.
RootedTree parse_newick(std::string_view text);
std::string to_newick(const RootedTree& t);

// JSON when the text starts with '{', Newick otherwise.
RootedTree parse_tree(std::string_view text);

}  // namespace chordal
