#include "chordal/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "chordal/errors.hpp"

namespace chordal {

ExponentVector exponents(const Graph& g, const Peo& peo) {
  require_peo(g, peo);
  ExponentVector out{peo, {}};
  for (std::size_t i = 0; i < peo.order.size(); ++i) out.exps.push_back(later_neighbors(g, peo, i).size());
  return out;
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  *this = IntPolynomial(std::move(out));
  return *this;
}

std::string to_string(const IntPolynomial& p, char variable) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const std::int64_t mag = std::llabs(c[k]);
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial chromatic_polynomial(const Graph& g, const Peo& peo) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (std::size_t n : exponents(g, peo).exps) p *= IntPolynomial::linear(-static_cast<std::int64_t>(n), 1);
  return p;
}

IntPolynomial chromatic_polynomial(const Graph& g) { return chromatic_polynomial(g, find_peo(g)); }

IntPolynomial poincare_polynomial(const Graph& g) {
  const Peo peo = find_peo(g);
  IntPolynomial p = IntPolynomial::constant(1);
  for (std::size_t n : exponents(g, peo).exps) p *= IntPolynomial::linear(1, static_cast<std::int64_t>(n));
  return p;
}

std::int64_t region_count(const Graph& g) { return poincare_polynomial(g).evaluate(1); }

namespace {

std::int64_t count_colorings(const Graph& g, std::vector<std::int64_t>& colour, Vertex v, std::int64_t q) {
  if (v == g.order()) return 1;
  std::int64_t total = 0;
  for (std::int64_t c = 0; c < q; ++c) {
    bool clash = false;
    for (Vertex u : g.neighbors(v)) {
      if (u < v && colour[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    colour[v] = c;
    total += count_colorings(g, colour, v + 1, q);
  }
  return total;
}

}  // namespace

std::int64_t brute_force_coloring_count(const Graph& g, std::int64_t q) {
  if (g.order() > 12) throw TooLarge("coloring oracle is limited to 12 vertices");
  if (q < 0) throw BadIndex("number of colours must be non-negative");
  std::vector<std::int64_t> colour(g.order(), -1);
  return count_colorings(g, colour, 0, q);
}

std::int64_t brute_force_acyclic_orientations(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  if (edges.size() > 20) throw TooLarge("orientation oracle is limited to 20 edges");
  const std::size_t n = g.order();
  std::int64_t acyclic = 0;
  std::vector<std::vector<Vertex>> out(n);
  std::vector<std::size_t> indegree(n);
  std::vector<Vertex> ready;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << edges.size()); ++mask) {
    for (auto& o : out) o.clear();
    std::fill(indegree.begin(), indegree.end(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      if (mask >> e & 1U) std::swap(u, v);
      out[u].push_back(v);
      ++indegree[v];
    }
    // Kahn: acyclic iff every vertex gets removed
    ready.clear();
    for (Vertex v = 0; v < n; ++v)
      if (indegree[v] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
      const Vertex v = ready.back();
      ready.pop_back();
      ++removed;
      for (Vertex w : out[v])
        if (--indegree[w] == 0) ready.push_back(w);
    }
    if (removed == n) ++acyclic;
  }
  return acyclic;
}

std::vector<std::int64_t> abelianization(const LimitElement& a) {
  const Graph& g = a.graph();
  const FreeWord w = edge_word(normal_form(a));
  const std::vector<Edge> edges = g.edges();
  std::vector<std::int64_t> out(edges.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) out[e] = w.exponent_sum(e);

  // P(S) abelianises onto one coordinate per pair, so every component
  // carries the same exponent sums.
  for (std::size_t k = 0; k < a.cliques().size(); ++k) {
    const Simplex& s = a.cliques()[k];
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        std::int64_t sum = 0;
        for (const BraidLetter& l : a.words()[k].letters())
          if (l.i == i && l.j == j) sum += l.exponent;
        const auto it = std::lower_bound(edges.begin(), edges.end(), Edge{s[i], s[j]});
        if (sum != out[static_cast<std::size_t>(it - edges.begin())]) {
          throw InvariantViolation("normal form and components disagree on exponent sums");
        }
      }
    }
  }
  return out;
}

}  // namespace chordal
