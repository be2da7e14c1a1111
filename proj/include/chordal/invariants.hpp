#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chordal/gamma.hpp"
#include "chordal/graph.hpp"

namespace chordal {

// Later-neighbour counts along a PEO.
struct ExponentVector {
  Peo peo;
  std::vector<std::size_t> exps;
};

ExponentVector exponents(const Graph& g, const Peo& peo);  // InvalidPeo

// Dense integer polynomial, coefficient k at index k, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);
  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial linear(std::int64_t c0, std::int64_t c1) { return IntPolynomial({c0, c1}); }

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  std::int64_t evaluate(std::int64_t x) const;

  IntPolynomial& operator*=(const IntPolynomial& rhs);
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// "q^3 - 3q^2 + 2q"
std::string to_string(const IntPolynomial& p, char variable = 'q');

IntPolynomial chromatic_polynomial(const Graph& g);                   // NotChordal
IntPolynomial chromatic_polynomial(const Graph& g, const Peo& peo);   // InvalidPeo
IntPolynomial poincare_polynomial(const Graph& g);                    // NotChordal
std::int64_t region_count(const Graph& g);

// Exhaustive oracles. TooLarge above 12 vertices / 20 edges.
std::int64_t brute_force_coloring_count(const Graph& g, std::int64_t q);
std::int64_t brute_force_acyclic_orientations(const Graph& g);

// Exponent sum of each edge generator, indexed like g.edges(). Read from the
// normal form and cross-checked against the components.
std::vector<std::int64_t> abelianization(const LimitElement& a);

}  // namespace chordal
