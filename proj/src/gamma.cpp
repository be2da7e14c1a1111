#include "chordal/gamma.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

bool contains_all(const Simplex& big, std::span<const Vertex> small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Simplex intersect(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex without(const Simplex& a, std::span<const Vertex> drop) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), drop.begin(), drop.end(), std::back_inserter(out));
  return out;
}

std::size_t clique_slot(const std::vector<Simplex>& cliques, const Simplex& s) {
  auto it = std::lower_bound(cliques.begin(), cliques.end(), s);
  if (it == cliques.end() || *it != s) return cliques.size();
  return static_cast<std::size_t>(it - cliques.begin());
}

void require_same_graph(const Graph& a, const Graph& b) {
  if (!(a == b)) throw GraphMismatch("elements live over different graphs");
}

std::string set_string(const Graph& g, std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + g.label(s[k]);
  return out + "}";
}

// Indexed candidate tuple, after checking the keys.
std::vector<BraidWord> indexed_words(const Graph& g, const std::vector<Simplex>& cliques,
                                     const Components& components) {
  if (components.size() != cliques.size()) {
    throw WrongIndexing("expected one component per maximal simplex");
  }
  std::vector<BraidWord> words;
  for (const Simplex& s : cliques) {
    auto it = components.find(s);
    if (it == components.end()) {
      throw WrongIndexing("no component for maximal simplex " + set_string(g, s));
    }
    if (!(it->second.index_set() == simplex_index_set(g, s))) {
      throw WrongIndexing("component at " + set_string(g, s) + " is over the wrong strands");
    }
    words.push_back(it->second);
  }
  return words;
}

bool pairwise_compatible(const Graph& g, const std::vector<Simplex>& cliques,
                         const std::vector<BraidWord>& words) {
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      const Simplex meet = intersect(cliques[a], cliques[b]);
      if (meet.size() < 2) continue;  // P on at most one strand is trivial
      const IndexSet keep = simplex_index_set(g, meet);
      if (!comb_equal(forget(words[a], keep), forget(words[b], keep))) return false;
    }
  }
  return true;
}

BraidWord project_unchecked(const LimitElement& a, std::span<const Vertex> s) {
  const auto& cliques = a.cliques();
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    if (contains_all(cliques[k], s)) {
      return forget(a.words()[k], simplex_index_set(a.graph(), s));
    }
  }
  throw NotASimplex("no maximal simplex contains " + set_string(a.graph(), s));
}

// Symbol -> edge, for both endpoint orders.
class EdgeLookup {
 public:
  explicit EdgeLookup(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
      table_.emplace(edge_symbol(g, u, v), Edge{u, v});
      table_.emplace("E[" + g.label(v) + "," + g.label(u) + "]", Edge{u, v});
    }
  }
  std::optional<Edge> find(const std::string& symbol) const {
    auto it = table_.find(symbol);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::unordered_map<std::string, Edge> table_;
};

// Splits "E[a,b]" at the comma that names two vertices of g.
std::optional<Edge> parse_edge_token(const Graph& g, std::string_view core) {
  if (core.size() < 5 || core.substr(0, 2) != "E[" || core.back() != ']') return std::nullopt;
  const std::string_view inner = core.substr(2, core.size() - 3);
  for (std::size_t c = inner.find(','); c != std::string_view::npos; c = inner.find(',', c + 1)) {
    auto u = g.find(inner.substr(0, c));
    auto v = g.find(inner.substr(c + 1));
    if (u && v) {
      if (!g.adjacent(*u, *v)) {
        throw NotAnEdge("'" + std::string(core) + "' is not an edge");
      }
      return Edge{std::min(*u, *v), std::max(*u, *v)};
    }
  }
  throw UnknownVertex("unknown endpoint in '" + std::string(core) + "'");
}

}  // namespace

LimitElement make_limit_element(Graph g, std::vector<Simplex> cliques, std::vector<BraidWord> words) {
  LimitElement out;
  out.graph_ = std::move(g);
  out.cliques_ = std::move(cliques);
  out.words_ = std::move(words);
  return out;
}

IndexSet simplex_index_set(const Graph& g, std::span<const Vertex> s) {
  Simplex sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  return IndexSet(labels_of(g, sorted));
}

LimitElement LimitElement::identity(const Graph& g) {
  std::vector<Simplex> cliques = maximal_simplices(g);
  std::vector<BraidWord> words;
  for (const Simplex& s : cliques) words.emplace_back(simplex_index_set(g, s));
  return make_limit_element(g, std::move(cliques), std::move(words));
}

LimitElement LimitElement::from_components(const Graph& g, Components components) {
  std::vector<Simplex> cliques = maximal_simplices(g);
  std::vector<BraidWord> words = indexed_words(g, cliques, components);
  if (!pairwise_compatible(g, cliques, words)) {
    throw InvariantViolation("components are not compatible");
  }
  return make_limit_element(g, std::move(cliques), std::move(words));
}

const BraidWord& LimitElement::component(const Simplex& s) const {
  const std::size_t k = clique_slot(cliques_, s);
  if (k == cliques_.size()) throw WrongIndexing(set_string(graph_, s) + " is not a maximal simplex");
  return words_[k];
}

Components LimitElement::components() const {
  Components out;
  for (std::size_t k = 0; k < cliques_.size(); ++k) out.emplace(cliques_[k], words_[k]);
  return out;
}

LimitElement& LimitElement::operator*=(const LimitElement& rhs) {
  require_same_graph(graph_, rhs.graph_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] *= rhs.words_[k];
  return *this;
}

LimitElement LimitElement::inverse() const {
  LimitElement out = *this;
  for (auto& w : out.words_) w = w.inverse();
  return out;
}

// ---- edge generators --------------------------------------------------------

std::string edge_symbol(const Graph& g, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return "E[" + g.label(u) + "," + g.label(v) + "]";
}

AlphabetPtr edge_alphabet(const Graph& g) {
  std::vector<std::string> symbols;
  for (const auto& [u, v] : g.edges()) symbols.push_back(edge_symbol(g, u, v));
  return make_alphabet(std::move(symbols));
}

AlphabetPtr star_alphabet(const Graph& g, Vertex v, std::span<const Vertex> others) {
  std::vector<std::string> symbols;
  for (Vertex u : others) symbols.push_back(edge_symbol(g, u, v));
  return make_alphabet(std::move(symbols));
}

LimitElement edge_generator(const Graph& g, Vertex u, Vertex v, int exponent) {
  if (u >= g.order() || v >= g.order()) throw UnknownVertex("vertex out of range");
  if (u == v || !g.adjacent(u, v)) {
    throw NotAnEdge("{" + g.label(u) + "," + g.label(v) + "} is not an edge");
  }
  const AlphabetPtr a = make_alphabet({edge_symbol(g, u, v)});
  FreeWord w(a);
  const int step = exponent > 0 ? 1 : -1;
  for (int k = 0; k != exponent; k += step) w *= FreeWord::generator(a, 0, step);
  return from_edge_word(g, w);
}

LimitElement edge_generator(const Graph& g, std::string_view u, std::string_view v, int exponent) {
  return edge_generator(g, g.vertex(u), g.vertex(v), exponent);
}

LimitElement from_edge_word(const Graph& g, const FreeWord& w) {
  LimitElement out = LimitElement::identity(g);
  if (w.empty()) return out;
  const EdgeLookup lookup(g);
  const Alphabet& alphabet = *w.alphabet();
  std::vector<std::optional<Edge>> resolved(alphabet.size());
  for (std::size_t s = 0; s < alphabet.size(); ++s) resolved[s] = lookup.find(alphabet.symbol(s));

  const auto& cliques = out.cliques();
  // position of each vertex inside each clique, npos when absent
  std::vector<std::vector<std::size_t>> slot(cliques.size(), std::vector<std::size_t>(g.order(), std::string::npos));
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    for (std::size_t p = 0; p < cliques[k].size(); ++p) slot[k][cliques[k][p]] = p;
  }
  std::vector<BraidWord> words(out.words().begin(), out.words().end());
  for (const Letter& l : w.letters()) {
    const auto& e = resolved[l.symbol];
    if (!e) throw NotAnEdge("'" + alphabet.symbol(l.symbol) + "' is not an edge of the graph");
    for (std::size_t k = 0; k < cliques.size(); ++k) {
      const std::size_t i = slot[k][e->first];
      const std::size_t j = slot[k][e->second];
      if (i != std::string::npos && j != std::string::npos) words[k].push_back({i, j, l.exponent});
    }
  }
  return make_limit_element(g, cliques, std::move(words));
}

FreeWord parse_edge_word(const Graph& g, std::string_view text) {
  const AlphabetPtr alphabet = edge_alphabet(g);
  FreeWord out(alphabet);
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    std::string_view core = token;
    long power = 1;
    if (auto caret = core.rfind('^'); caret != std::string_view::npos && core.back() != ']') {
      try {
        std::size_t used = 0;
        const std::string digits(core.substr(caret + 1));
        power = std::stol(digits, &used);
        if (used != digits.size()) throw ParseError("bad exponent");
      } catch (const std::logic_error&) {
        throw ParseError("bad exponent in '" + token + "'");
      }
      core = core.substr(0, caret);
    }
    auto e = parse_edge_token(g, core);
    if (!e) throw ParseError("expected E[u,v], got '" + token + "'");
    const std::size_t symbol = alphabet->index_of(edge_symbol(g, e->first, e->second));
    const int sign = power < 0 ? -1 : 1;
    for (long k = 0; k < std::labs(power); ++k) out *= FreeWord::generator(alphabet, symbol, sign);
  }
  return out;
}

LimitElement from_edge_word(const Graph& g, std::string_view text) {
  return from_edge_word(g, parse_edge_word(g, text));
}

// ---- group structure -------------------------------------------------------

bool is_compatible(const Graph& g, const Components& components) {
  const std::vector<Simplex> cliques = maximal_simplices(g);
  return pairwise_compatible(g, cliques, indexed_words(g, cliques, components));
}

bool equal(const LimitElement& a, const LimitElement& b) {
  require_same_graph(a.graph(), b.graph());
  for (std::size_t k = 0; k < a.words().size(); ++k) {
    if (!comb_equal(a.words()[k], b.words()[k])) return false;
  }
  return true;
}

bool is_identity(const LimitElement& a) {
  return std::all_of(a.words().begin(), a.words().end(),
                     [](const BraidWord& w) { return comb_trivial(w); });
}

BraidWord project(const LimitElement& a, std::span<const Vertex> s) {
  Simplex sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (!is_simplex(a.graph(), sorted)) {
    throw NotASimplex(set_string(a.graph(), sorted) + " is not a simplex");
  }
  const auto& cliques = a.cliques();
  const IndexSet keep = simplex_index_set(a.graph(), sorted);
  std::optional<BraidWord> first;
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    if (!contains_all(cliques[k], sorted)) continue;
    BraidWord reading = forget(a.words()[k], keep);
    if (!first) {
      first = std::move(reading);
    } else {
      if (!comb_equal(*first, reading)) throw InvariantViolation("projection is not well defined");
      break;
    }
  }
  return *first;
}

LimitElement delete_simplicial_vertex(const LimitElement& a, Vertex v) {
  const Graph& g = a.graph();
  if (!is_simplicial(g, v)) throw NotSimplicial("'" + g.label(v) + "' is not simplicial");
  Graph rest = delete_vertex(g, v);
  std::vector<Simplex> cliques = maximal_simplices(rest);
  std::vector<BraidWord> words;
  for (const Simplex& s : cliques) words.push_back(project_unchecked(a, map_vertices(rest, g, s)));
  return make_limit_element(std::move(rest), std::move(cliques), std::move(words));
}

LimitElement delete_simplicial_vertex(const LimitElement& a, std::string_view v) {
  return delete_simplicial_vertex(a, a.graph().vertex(v));
}

LimitElement section(const LimitElement& delta, const Graph& g, Vertex v) {
  if (!is_simplicial(g, v)) throw NotSimplicial("'" + g.label(v) + "' is not simplicial");
  require_same_graph(delta.graph(), delete_vertex(g, v));
  return from_edge_word(g, edge_word(normal_form(delta)));
}

FreeWord kernel_word(const LimitElement& a, Vertex v) {
  const Graph& g = a.graph();
  const Simplex s = s_zero(g, v).simplex;
  const std::size_t home = clique_slot(a.cliques(), s);
  if (home == a.cliques().size()) throw InvariantViolation("closed neighbourhood is not a stored clique");
  for (std::size_t k = 0; k < a.cliques().size(); ++k) {
    if (k != home && !comb_trivial(a.words()[k])) {
      throw NotInKernel("component at " + set_string(g, a.cliques()[k]) + " is not trivial");
    }
  }
  const std::size_t m = static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
  const FreeWord coords = kernel_coordinates(a.words()[home], m);
  return FreeWord::from_codes(star_alphabet(g, v, without(s, std::span<const Vertex>(&v, 1))), coords.codes());
}

// ---- normal forms ----------------------------------------------------------

AlphabetPtr layer_alphabet(const Graph& g, const Peo& peo, std::size_t position) {
  return star_alphabet(g, peo.order.at(position), later_neighbors(g, peo, position));
}

GammaNormalForm normal_form(const LimitElement& a, const Peo& peo) {
  const Graph& g = a.graph();
  require_peo(g, peo);
  const std::size_t n = g.order();

  // tower: element i lives on g minus the first i vertices of the PEO
  std::vector<LimitElement> tower{a};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const LimitElement& top = tower.back();
    tower.push_back(delete_simplicial_vertex(top, top.graph().vertex(g.label(peo.order[i]))));
  }

  GammaNormalForm out{g, peo, std::vector<FreeWord>(n)};
  for (std::size_t i = n; i-- > 0;) {
    const LimitElement& here = tower[i];
    const Graph& gi = here.graph();
    LimitElement lifted = LimitElement::identity(gi);
    for (std::size_t j = i + 1; j < n; ++j) lifted *= from_edge_word(gi, out.layers[j]);
    const LimitElement kappa = here * lifted.inverse();
    const FreeWord k = kernel_word(kappa, gi.vertex(g.label(peo.order[i])));
    out.layers[i] = FreeWord::from_codes(layer_alphabet(g, peo, i), k.codes());
  }
  return out;
}

GammaNormalForm normal_form(const LimitElement& a) { return normal_form(a, find_peo(a.graph())); }

LimitElement from_normal_form(const GammaNormalForm& nf) {
  require_peo(nf.graph, nf.peo);
  if (nf.layers.size() != nf.graph.order()) throw AlphabetMismatch("one layer per vertex expected");
  for (std::size_t i = 0; i < nf.layers.size(); ++i) {
    if (!same_alphabet(nf.layers[i].alphabet(), layer_alphabet(nf.graph, nf.peo, i))) {
      throw AlphabetMismatch("layer " + std::to_string(i) + " is over the wrong alphabet");
    }
  }
  return from_edge_word(nf.graph, edge_word(nf));
}

FreeWord edge_word(const GammaNormalForm& nf) {
  const AlphabetPtr alphabet = edge_alphabet(nf.graph);
  std::vector<int> codes;
  for (const FreeWord& layer : nf.layers) {
    for (const Letter& l : layer.letters()) {
      const std::size_t s = alphabet->index_of(layer.alphabet()->symbol(l.symbol));
      detail::push_reduced(codes, detail::letter_code(s, l.exponent));
    }
  }
  return FreeWord::from_codes(alphabet, codes);
}

bool verify_pullback_square(const Graph& g, Vertex v, const Components& components) {
  const std::vector<Simplex> cliques = maximal_simplices(g);
  const std::vector<BraidWord> words = indexed_words(g, cliques, components);
  const SZero sz = s_zero(g, v);
  const BraidWord& top = words[clique_slot(cliques, sz.simplex)];
  const Simplex rest = without(sz.simplex, sz.core);
  const IndexSet rest_strands = simplex_index_set(g, rest);
  const BraidWord top_image = forget(top, rest_strands);

  // restriction to g \ S0: maximal simplices there are old cliques, except
  // possibly S \ S0 itself, which is read off the S component
  const Graph outside = delete_vertices(g, sz.core);
  std::vector<Simplex> side;
  std::vector<BraidWord> side_words;
  for (const Simplex& s : maximal_simplices(outside)) {
    Simplex in_g = map_vertices(outside, g, s);
    if (in_g == rest) {
      side_words.push_back(top_image);
    } else {
      const std::size_t k = clique_slot(cliques, in_g);
      if (k == cliques.size()) throw InvariantViolation("unexpected clique after removing S0");
      side_words.push_back(words[k]);
    }
    side.push_back(std::move(in_g));
  }
  if (!pairwise_compatible(g, side, side_words)) return false;
  if (rest.size() < 2) return true;
  for (std::size_t k = 0; k < side.size(); ++k) {
    if (side[k] != rest && contains_all(side[k], rest) &&
        !comb_equal(forget(side_words[k], rest_strands), top_image)) {
      return false;
    }
  }
  return true;
}

bool verify_pullback_square(const LimitElement& a, Vertex v) {
  return verify_pullback_square(a.graph(), v, a.components());
}

// ---- serialisation ---------------------------------------------------------

nlohmann::json to_json(const LimitElement& a) {
  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t k = 0; k < a.cliques().size(); ++k) {
    comps.push_back({{"simplex", labels_of(a.graph(), a.cliques()[k])}, {"word", to_json(a.words()[k])}});
  }
  return {{"graph", a.graph().fingerprint()}, {"components", comps}};
}

LimitElement limit_element_from_json(const Graph& g, const nlohmann::json& j) {
  if (j.at("graph").get<std::string>() != g.fingerprint()) {
    throw GraphMismatch("element was serialised for a different graph");
  }
  Components comps;
  for (const auto& c : j.at("components")) {
    Simplex s = vertices_of(g, c.at("simplex").get<std::vector<std::string>>());
    std::sort(s.begin(), s.end());
    comps.emplace(s, braid_word_from_json(simplex_index_set(g, s), c.at("word")));
  }
  return LimitElement::from_components(g, std::move(comps));
}

nlohmann::json to_json(const GammaNormalForm& nf) {
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t i = 0; i < nf.layers.size(); ++i) {
    layers.push_back({{"vertex", nf.graph.label(nf.peo.order[i])},
                      {"alphabet", nf.layers[i].alphabet()->symbols()},
                      {"word", to_string(nf.layers[i])}});
  }
  return {{"graph", nf.graph.fingerprint()}, {"peo", labels_of(nf.graph, nf.peo.order)}, {"layers", layers}};
}

std::string to_string(const GammaNormalForm& nf) {
  std::string out;
  for (std::size_t i = 0; i < nf.layers.size(); ++i) {
    const std::string w = to_string(nf.layers[i]);
    out += nf.graph.label(nf.peo.order[i]) + ": " + (w.empty() ? "1" : w) + "\n";
  }
  return out;
}

}  // namespace chordal
