#include "chordal/trees.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "chordal/errors.hpp"

namespace chordal {

RootedTree::RootedTree(std::string root, std::span<const std::pair<std::string, std::string>> parents) {
  std::unordered_map<std::string, Vertex> index;
  labels_.push_back(root);
  index.emplace(std::move(root), 0);
  for (const auto& [child, parent] : parents) {
    if (!index.emplace(child, labels_.size()).second) {
      throw ParseError("vertex '" + child + "' declared twice");
    }
    labels_.push_back(child);
  }
  parent_.assign(labels_.size(), 0);
  children_.assign(labels_.size(), {});
  for (std::size_t k = 0; k < parents.size(); ++k) {
    auto it = index.find(parents[k].second);
    if (it == index.end()) throw ParseError("unknown parent '" + parents[k].second + "'");
    parent_[k + 1] = it->second;
    children_[it->second].push_back(k + 1);
  }
  // every vertex must reach the root
  for (Vertex v = 1; v < labels_.size(); ++v) {
    Vertex u = v;
    for (std::size_t steps = 0; u != 0; ++steps) {
      if (steps > labels_.size()) throw ParseError("parent map has a cycle through '" + labels_[v] + "'");
      u = parent_[u];
    }
  }
}

Vertex RootedTree::vertex(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownVertex("unknown tree vertex '" + std::string(label) + "'");
  return static_cast<Vertex>(it - labels_.begin());
}

VertexSet RootedTree::chain(Vertex v) const {
  VertexSet out{v};
  while (v != 0) {
    v = parent_.at(v);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph comparability_graph(const RootedTree& t) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < t.order(); ++v) {
    for (Vertex u : t.chain(v)) {
      if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph::from_index_edges(t.labels(), edges);
}

std::vector<Simplex> maximal_simplices_via_leaves(const RootedTree& t) {
  std::vector<Simplex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_leaf(v)) out.push_back(t.chain(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t height(const RootedTree& t, Vertex s) { return t.chain(s).size() - 1; }

std::vector<std::pair<std::size_t, std::size_t>> semidirect_profile(const RootedTree& t) {
  std::vector<std::size_t> count;
  for (Vertex v = 1; v < t.order(); ++v) {
    const std::size_t h = height(t, v);
    if (count.size() < h) count.resize(h, 0);
    ++count[h - 1];
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t h = 0; h < count.size(); ++h) out.emplace_back(h + 1, count[h]);
  return out;
}

Peo leaves_first_peo(const RootedTree& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> depth(n);
  for (Vertex v = 0; v < n; ++v) depth[v] = height(t, v);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  // a deepest remaining vertex has no remaining children
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return depth[a] > depth[b]; });
  return Peo{order};
}

bool projection_kills_layers(const RootedTree& t, const LimitElement& a, Vertex w) {
  const Graph g = comparability_graph(t);
  if (!(g == a.graph())) throw GraphMismatch("element is not over the comparability graph");
  const Peo peo = leaves_first_peo(t);
  GammaNormalForm nf = normal_form(a, peo);
  const VertexSet keep = t.chain(w);
  for (std::size_t i = 0; i < nf.layers.size(); ++i) {
    if (!std::binary_search(keep.begin(), keep.end(), peo.order[i])) {
      nf.layers[i] = FreeWord(nf.layers[i].alphabet());
    }
  }
  return comb_equal(project(a, keep), project(from_normal_form(nf), keep));
}

// ---- formats ---------------------------------------------------------------

RootedTree tree_from_json(const nlohmann::ordered_json& j) {
  try {
    std::vector<std::pair<std::string, std::string>> parents;
    for (const auto& [child, parent] : j.at("parent").items()) {
      parents.emplace_back(child, parent.get<std::string>());
    }
    return RootedTree(j.at("root").get<std::string>(), parents);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const RootedTree& t) {
  nlohmann::ordered_json parent = nlohmann::ordered_json::object();
  for (Vertex v = 1; v < t.order(); ++v) parent[t.label(v)] = t.label(t.parent(v));
  return {{"root", t.label(t.root())}, {"parent", parent}};
}

namespace {

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  RootedTree parse() {
    std::vector<Node> nodes;
    const std::size_t root = node(nodes);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ';') ++pos_;
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    // preorder, children in listed order
    std::vector<std::pair<std::string, std::string>> parents;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      for (auto it = nodes[k].children.rbegin(); it != nodes[k].children.rend(); ++it) stack.push_back(*it);
      if (k != root) parents.emplace_back(nodes[k].label, nodes[nodes[k].parent].label);
    }
    return RootedTree(nodes[root].label, parents);
  }

 private:
  struct Node {
    std::string label;
    std::size_t parent = 0;
    std::vector<std::size_t> children;
  };

  std::size_t node(std::vector<Node>& nodes) {
    const std::size_t k = nodes.size();
    nodes.emplace_back();
    skip_space();
    if (peek('(')) children(nodes, k);
    nodes[k].label = label();
    skip_space();
    if (peek('(')) children(nodes, k);
    return k;
  }

  void children(std::vector<Node>& nodes, std::size_t k) {
    ++pos_;  // '('
    for (;;) {
      const std::size_t c = node(nodes);
      nodes[c].parent = k;
      nodes[k].children.push_back(c);
      skip_space();
      if (peek(',')) {
        ++pos_;
      } else if (peek(')')) {
        ++pos_;
        return;
      } else {
        fail("expected ',' or ')'");
      }
    }
  }

  std::string label() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::string_view("(),;").find(text_[pos_]) == std::string_view::npos &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("missing vertex label");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("newick: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void newick_node(const RootedTree& t, Vertex v, std::string& out) {
  if (!t.is_leaf(v)) {
    out += '(';
    for (std::size_t k = 0; k < t.children(v).size(); ++k) {
      if (k) out += ',';
      newick_node(t, t.children(v)[k], out);
    }
    out += ')';
  }
  out += t.label(v);
}

}  // namespace

RootedTree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

std::string to_newick(const RootedTree& t) {
  std::string out;
  if (t.order()) newick_node(t, t.root(), out);
  return out + ";";
}

RootedTree parse_tree(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("tree JSON: ") + e.what());
    }
    return tree_from_json(j);
  }
  return parse_newick(text);
}

}  // namespace chordal
