#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "chordal/free_group.hpp"
#include "chordal/graph.hpp"
#include "chordal/pure_braid.hpp"

namespace chordal {

// Candidate tuple, keyed by maximal simplex. Each word lives over the labels
// of its simplex, in graph vertex order.
using Components = std::map<Simplex, BraidWord>;

// Compatible tuple of pure braids over the maximal simplices of a chordal
// graph. Public constructors only produce compatible tuples.
class LimitElement {
 public:
  static LimitElement identity(const Graph& g);  // throws NotChordal

  // Throws WrongIndexing unless keys are exactly the maximal simplices and
  // each word is over its simplex; InvariantViolation if incompatible.
  static LimitElement from_components(const Graph& g, Components components);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Simplex>& cliques() const noexcept { return cliques_; }
  std::span<const BraidWord> words() const noexcept { return words_; }
  const BraidWord& component(const Simplex& s) const;  // throws WrongIndexing
  Components components() const;

  LimitElement& operator*=(const LimitElement& rhs);  // throws GraphMismatch
  friend LimitElement operator*(LimitElement lhs, const LimitElement& rhs) { return lhs *= rhs; }
  LimitElement inverse() const;

  // Literal equality of the stored words; see equal() for group equality.
  friend bool operator==(const LimitElement&, const LimitElement&) = default;

 private:
  friend LimitElement make_limit_element(Graph, std::vector<Simplex>, std::vector<BraidWord>);
  Graph graph_;
  std::vector<Simplex> cliques_;
  std::vector<BraidWord> words_;
};

// Labels of `s` as an index set, in graph vertex order.
IndexSet simplex_index_set(const Graph& g, std::span<const Vertex> s);

// ---- edge generators --------------------------------------------------------

// "E[a,b]" with a before b in the graph's vertex order.
std::string edge_symbol(const Graph& g, Vertex u, Vertex v);

// One symbol per edge, in edges() order.
AlphabetPtr edge_alphabet(const Graph& g);

// Symbols E[u,v] for u in `others`, in the order given.
AlphabetPtr star_alphabet(const Graph& g, Vertex v, std::span<const Vertex> others);

LimitElement edge_generator(const Graph& g, Vertex u, Vertex v, int exponent = 1);
LimitElement edge_generator(const Graph& g, std::string_view u, std::string_view v,
                            int exponent = 1);

// Product of edge generators. The word may be over any alphabet whose
// symbols name edges of g (either endpoint order). Throws NotAnEdge.
LimitElement from_edge_word(const Graph& g, const FreeWord& w);
LimitElement from_edge_word(const Graph& g, std::string_view text);

// Parses "E[a,b] E[b,c]^-1" into a word over edge_alphabet(g).
FreeWord parse_edge_word(const Graph& g, std::string_view text);

// ---- group structure -------------------------------------------------------

bool is_compatible(const Graph& g, const Components& components);  // WrongIndexing
// Componentwise, by combing. Throws GraphMismatch.
bool equal(const LimitElement& a, const LimitElement& b);
bool is_identity(const LimitElement& a);

// Component on any simplex, read off a containing maximal simplex. When a
// second maximal simplex contains `s`, its reading is compared too.
BraidWord project(const LimitElement& a, std::span<const Vertex> s);

LimitElement delete_simplicial_vertex(const LimitElement& a, Vertex v);
LimitElement delete_simplicial_vertex(const LimitElement& a, std::string_view v);

// Lift of an element of Γ(g \ v) back into Γ(g) through edge generators.
LimitElement section(const LimitElement& delta, const Graph& g, Vertex v);

// Coordinates of a kernel element in the free group on {E[u,v] : u ~ v}.
// Throws NotInKernel unless deleting v sends `a` to the identity.
FreeWord kernel_word(const LimitElement& a, Vertex v);

// ---- normal forms ----------------------------------------------------------

struct GammaNormalForm {
  Graph graph;
  Peo peo;
  // layers[i] is over star_alphabet(graph, v_i, later neighbours of v_i).
  std::vector<FreeWord> layers;
  friend bool operator==(const GammaNormalForm&, const GammaNormalForm&) = default;
};

AlphabetPtr layer_alphabet(const Graph& g, const Peo& peo, std::size_t position);

GammaNormalForm normal_form(const LimitElement& a, const Peo& peo);  // InvalidPeo
GammaNormalForm normal_form(const LimitElement& a);                  // find_peo order
LimitElement from_normal_form(const GammaNormalForm& nf);            // AlphabetMismatch

// All layers concatenated into a single word over edge_alphabet.
FreeWord edge_word(const GammaNormalForm& nf);

// Checks the square formed by Γ(g) over the simplex S containing v, the
// graph with S0 removed and P(S \ S0). Equivalent to compatibility of the
// tuple; the raw overload exists so corrupted tuples can be examined.
bool verify_pullback_square(const Graph& g, Vertex v, const Components& components);
bool verify_pullback_square(const LimitElement& a, Vertex v);

// ---- serialisation ---------------------------------------------------------

// {"graph": fingerprint, "components": [{"simplex": [...], "word": [...]}, ...]}
nlohmann::json to_json(const LimitElement& a);
LimitElement limit_element_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json to_json(const GammaNormalForm& nf);
std::string to_string(const GammaNormalForm& nf);

}  // namespace chordal
