#include "chordal/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <set>
#include <sstream>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

Graph Graph::from_index_edges(std::vector<std::string> vertices, std::span<const Edge> edges) {
  Graph g;
  g.labels_ = std::move(vertices);
  const std::size_t n = g.labels_.size();
  for (Vertex v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second) {
      throw ParseError("duplicate vertex label '" + g.labels_[v] + "'");
    }
  }
  g.adjacency_.assign(n * n, 0);
  g.neighbors_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw UnknownVertex("edge endpoint out of range");
    if (u == v) throw SelfLoop("self-loop at '" + g.labels_[u] + "'");
    if (g.adjacency_[u * n + v]) continue;
    g.adjacency_[u * n + v] = g.adjacency_[v * n + u] = 1;
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

Graph Graph::from_edges(std::vector<std::string> vertices,
                        std::span<const std::pair<std::string, std::string>> edges) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < vertices.size(); ++v) index.emplace(vertices[v], v);
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw UnknownVertex("edge endpoint '" + s + "' is not a declared vertex");
    return it->second;
  };
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const Vertex u = lookup(a);
    const Vertex v = lookup(b);
    if (u == v) throw SelfLoop("self-loop at '" + a + "'");
    idx.emplace_back(std::min(u, v), std::max(u, v));
  }
  return from_index_edges(std::move(vertices), idx);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::vertex(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw UnknownVertex("unknown vertex '" + std::string(label) + "'");
}

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v >= neighbors_.size()) throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
  return neighbors_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& l : labels_) {
    h = fnv1a(h, l);
    h = fnv1a(h, std::string_view("\0", 1));
  }
  for (auto [u, v] : edges()) {
    h = fnv1a(h, std::to_string(u) + "-" + std::to_string(v) + ";");
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

VertexSet neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet neighbors(const Graph& g, std::string_view v) { return g.neighbors(g.vertex(v)); }

bool is_simplex(const Graph& g, std::span<const Vertex> members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    check_vertex(g, members[a]);
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a] == members[b] || !g.adjacent(members[a], members[b])) return false;
    }
  }
  return true;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n == 0 || g.size() == n * (n - 1) / 2;
}

bool is_simplicial(const Graph& g, Vertex v) { return is_simplex(g, g.neighbors(v)); }

bool is_simplicial(const Graph& g, std::string_view v) { return is_simplicial(g, g.vertex(v)); }

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v)) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> lex_bfs(const Graph& g) {
  const std::size_t n = g.order();
  // Labels are the decreasing sequence of visit times of visited neighbours;
  // lexicographically larger labels win.
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<Vertex> best;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!best || label[v] > label[*best]) best = v;
    }
    visited[*best] = true;
    order.push_back(*best);
    const std::size_t stamp = n - step;
    for (Vertex w : g.neighbors(*best)) {
      if (!visited[w]) label[w].push_back(stamp);
    }
  }
  return order;
}

bool is_peo(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) return false;
    position[order[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(order[i])) {
      if (position[w] > i) later.push_back(w);
    }
    if (!is_simplex(g, later)) return false;
  }
  return true;
}

void require_peo(const Graph& g, const Peo& peo) {
  if (!is_peo(g, peo.order)) throw InvalidPeo("ordering is not a perfect elimination ordering");
}

bool is_chordal(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  return is_peo(g, order);
}

bool is_chordal_by_cycle_search(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);

  auto has_chord = [&]() {
    const std::size_t k = path.size();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 2; b < k; ++b) {
        if (a == 0 && b == k - 1) continue;  // the closing edge
        if (g.adjacent(path[a], path[b])) return true;
      }
    }
    return false;
  };

  // Cycles are enumerated from their smallest vertex; returns false as soon as
  // a cycle of length >= 4 without a chord is closed.
  auto extend = [&](auto&& self, Vertex start) -> bool {
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w == start && path.size() >= 4 && !has_chord()) return false;
      if (w <= start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      const bool ok = self(self, start);
      on_path[w] = false;
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    const bool ok = extend(extend, s);
    on_path[s] = false;
    if (!ok) return false;
  }
  return true;
}

Peo find_peo(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  if (!is_peo(g, order)) throw NotChordal("graph is not chordal");
  return Peo{std::move(order)};
}

Peo peo_with_suffix(const Graph& g, std::span<const Vertex> s) {
  if (!is_chordal(g)) throw NotChordal("graph is not chordal");
  VertexSet suffix(s.begin(), s.end());
  std::sort(suffix.begin(), suffix.end());
  suffix.erase(std::unique(suffix.begin(), suffix.end()), suffix.end());
  if (!is_simplex(g, suffix)) throw NotASimplex("suffix set is not a simplex");

  const std::size_t n = g.order();
  std::vector<bool> removed(n, false);
  std::vector<bool> in_suffix(n, false);
  for (Vertex v : suffix) in_suffix[v] = true;

  auto simplicial_in_rest = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) nb.push_back(w);
    }
    return is_simplex(g, nb);
  };

  Peo peo;
  peo.order.reserve(n);
  for (std::size_t step = suffix.size(); step < n; ++step) {
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < n && !pick; ++v) {
      if (!removed[v] && !in_suffix[v] && simplicial_in_rest(v)) pick = v;
    }
    if (!pick) throw InvariantViolation("no simplicial vertex outside the suffix simplex");
    removed[*pick] = true;
    peo.order.push_back(*pick);
  }
  peo.order.insert(peo.order.end(), suffix.begin(), suffix.end());
  return peo;
}

VertexSet later_neighbors(const Graph& g, const Peo& peo, std::size_t position) {
  std::vector<bool> later(g.order(), false);
  for (std::size_t k = position + 1; k < peo.order.size(); ++k) later[peo.order[k]] = true;
  VertexSet out;
  for (Vertex w : g.neighbors(peo.order.at(position))) {
    if (later[w]) out.push_back(w);
  }
  return out;
}

std::vector<Simplex> maximal_simplices(const Graph& g) {
  const Peo peo = find_peo(g);
  const std::size_t n = g.order();
  std::vector<Simplex> candidates;
  candidates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Simplex c = later_neighbors(g, peo, i);
    c.push_back(peo.order[i]);
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i != j && candidates[j].size() > candidates[i].size() &&
          subset_of(candidates[i], candidates[j])) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(candidates[i]);
  }
  return out;
}

SZero s_zero(const Graph& g, Vertex v) {
  if (!is_simplicial(g, v)) {
    throw NotSimplicial("vertex '" + g.label(v) + "' is not simplicial");
  }
  SZero out;
  out.simplex = g.neighbors(v);
  out.simplex.push_back(v);
  std::sort(out.simplex.begin(), out.simplex.end());
  for (Vertex s : out.simplex) {
    if (subset_of(g.neighbors(s), out.simplex)) out.core.push_back(s);
  }
  return out;
}

Graph induced(const Graph& g, std::span<const Vertex> subset) {
  VertexSet keep(subset.begin(), subset.end());
  for (Vertex v : keep) check_vertex(g, v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::size_t> new_index(g.order(), g.order());
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    new_index[keep[k]] = k;
    labels.push_back(g.label(keep[k]));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (new_index[u] < g.order() && new_index[v] < g.order()) {
      edges.emplace_back(new_index[u], new_index[v]);
    }
  }
  return Graph::from_index_edges(std::move(labels), edges);
}

Graph induced(const Graph& g, std::span<const std::string> subset) {
  return induced(g, vertices_of(g, subset));
}

Graph delete_vertex(const Graph& g, Vertex v) {
  const Vertex removed[] = {v};
  return delete_vertices(g, removed);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    check_vertex(g, v);
    gone[v] = true;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced(g, keep);
}

std::optional<Vertex> map_vertex(const Graph& g, const Graph& sub, Vertex v) {
  return sub.find(g.label(v));
}

VertexSet map_vertices(const Graph& from, const Graph& to, std::span<const Vertex> vs) {
  VertexSet out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(to.vertex(from.label(v)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> labels_of(const Graph& g, std::span<const Vertex> vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

VertexSet vertices_of(const Graph& g, std::span<const std::string> labels) {
  VertexSet out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(g.vertex(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- text formats ----------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::string>> edges;
  auto declare = [&](const std::string& v) {
    if (seen.insert(v).second) vertices.push_back(v);
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.front() == "vertices") {
      for (std::size_t k = 1; k < tokens.size(); ++k) declare(tokens[k]);
    } else if (tokens.size() == 1) {
      declare(tokens[0]);
    } else if (tokens.size() == 2) {
      declare(tokens[0]);
      declare(tokens[1]);
      edges.emplace_back(tokens[0], tokens[1]);
    } else {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
  }
  return Graph::from_edges(std::move(vertices), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "vertices";
  for (const auto& l : g.labels()) out += " " + l;
  out += "\n";
  for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

namespace {

std::string json_label(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("vertex labels must be strings or integers");
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges")) {
    throw ParseError("graph JSON needs an \"edges\" array");
  }
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  if (j.contains("vertices")) {
    for (const auto& v : j.at("vertices")) {
      auto l = json_label(v);
      if (!seen.insert(l).second) throw ParseError("duplicate vertex label '" + l + "'");
      vertices.push_back(std::move(l));
    }
  }
  const bool declared = j.contains("vertices");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
    auto a = json_label(e[0]);
    auto b = json_label(e[1]);
    if (!declared) {
      for (const auto& l : {a, b}) {
        if (seen.insert(l).second) vertices.push_back(l);
      }
    }
    edges.emplace_back(std::move(a), std::move(b));
  }
  return Graph::from_edges(std::move(vertices), edges);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_label(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += g.label(s[k]);
  }
  return out + "}";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& l : g.labels()) out += "  " + dot_id(l) + ";\n";
  for (auto [u, v] : g.edges()) {
    out += "  " + dot_id(g.label(u)) + " -- " + dot_id(g.label(v)) + ";\n";
  }
  return out + "}\n";
}

std::string clique_intersection_dot(const Graph& g) {
  const auto cliques = maximal_simplices(g);
  std::string out = "graph cliques {\n";
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    out += "  C" + std::to_string(k) + " [label=" + dot_id(set_label(g, cliques[k])) + "];\n";
  }
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      VertexSet meet;
      std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(),
                            cliques[b].end(), std::back_inserter(meet));
      if (meet.empty()) continue;
      out += "  C" + std::to_string(a) + " -- C" + std::to_string(b) +
             " [label=" + dot_id(set_label(g, meet)) + "];\n";
    }
  }
  return out + "}\n";
}

}  // namespace chordal
