#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "chordal/free_group.hpp"

namespace chordal {

// Ordered finite set of strand labels. The order fixes strand positions;
// cheap to copy, compared by content.
class IndexSet {
 public:
  IndexSet();
  explicit IndexSet(std::vector<std::string> labels);
  // Labels "1", ..., "n".
  static IndexSet range(std::size_t n);

  std::size_t size() const noexcept;
  const std::string& label(std::size_t position) const;
  const std::vector<std::string>& labels() const noexcept;
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t position(std::string_view label) const;  // throws BadIndex
  bool contains(std::string_view label) const { return find(label).has_value(); }
  bool is_subset_of(const IndexSet& other) const;

  // Same labels in this set's order, restricted to `keep` (must be a subset).
  IndexSet without(std::size_t position) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// Artin generator A_{ij}^{exponent}, written with strand positions i < j.
struct BraidLetter {
  std::size_t i;
  std::size_t j;
  int exponent;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// Word in the Artin generators of the pure braid group P(I). Adjacent
// inverse letters cancel on construction; no other rewriting happens.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(IndexSet index_set) : index_set_(std::move(index_set)) {}
  // Throws BadIndex for positions outside the index set or i == j; letters
  // with i > j are flipped (A_{ij} = A_{ji}).
  BraidWord(IndexSet index_set, std::span<const BraidLetter> letters);

  const IndexSet& index_set() const noexcept { return index_set_; }
  std::span<const BraidLetter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(BraidLetter letter);
  BraidWord inverse() const;
  BraidWord& operator*=(const BraidWord& rhs);  // throws IndexSetMismatch
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }

  // Literal equality of words; see `equal` for equality in the group.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  IndexSet index_set_;
  std::vector<BraidLetter> letters_;
};

BraidWord generator(const IndexSet& index_set, std::string_view i, std::string_view j,
                    int exponent = 1);

// Limits the work of long-running rewrites. Each call to `spend` consumes
// budget and throws BudgetExceeded once it runs out.
class StepBudget {
 public:
  explicit StepBudget(std::size_t steps) : remaining_(steps) {}
  void spend(std::size_t steps);
  std::size_t remaining() const noexcept { return remaining_; }

 private:
  std::size_t remaining_;
};

// Automorphism of the free group on {x_i : i in I}, acting on the right:
// for braid words u, v the action of uv is "act by u, then by v".
class ArtinAuto {
 public:
  static ArtinAuto identity(const IndexSet& index_set);

  const IndexSet& index_set() const noexcept { return index_set_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const FreeWord> images() const noexcept { return images_; }
  const FreeWord& image(std::size_t position) const { return images_.at(position); }

  // Image of a word over this automorphism's alphabet.
  FreeWord apply(const FreeWord& w) const;
  // `*this` first, then `next`.
  ArtinAuto then(const ArtinAuto& next) const;

  bool is_identity() const;
  // The ordered product x_{i1} ... x_{in} is fixed by every pure braid.
  bool fixes_boundary() const;

  friend bool operator==(const ArtinAuto& a, const ArtinAuto& b) {
    return a.index_set_ == b.index_set_ && a.images_ == b.images_;
  }

 private:
  friend ArtinAuto artin_auto(const BraidWord&, StepBudget*);
  friend ArtinAuto half_twist_auto(const IndexSet&, std::size_t, int);
  ArtinAuto(IndexSet index_set, std::vector<std::vector<int>> raw_images);

  IndexSet index_set_;
  AlphabetPtr alphabet_;
  std::vector<FreeWord> images_;
};

// Alphabet {x<label> : label in I} used by the Artin action.
AlphabetPtr strand_alphabet(const IndexSet& index_set);

// Half twist s_k (positions k, k+1) to the power +-1:
// s_k: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k.
ArtinAuto half_twist_auto(const IndexSet& index_set, std::size_t k, int exponent);

// The Artin action; a faithful representation of P(I). The generator action
// is assembled from half twists: A_{pq} = s_p^-1 .. s_{q-2}^-1 s_{q-1}^2
// s_{q-2} .. s_p, which gives x_p -> c x_p c^-1, x_q -> c x_q c^-1 with
// c = x_p x_q and x_r -> [x_p, x_q] x_r [x_p, x_q]^-1 for p < r < q.
ArtinAuto artin_auto(const BraidWord& w, StepBudget* budget = nullptr);

// Equality in P(I), decided by the Artin action. Throws IndexSetMismatch.
bool equal(const BraidWord& u, const BraidWord& v);
bool is_trivial(const BraidWord& w);

// Strand forgetting rho_{JI}: A_{ij} -> A_{ij} if {i, j} in J, else 1.
// Throws NotASubset.
BraidWord forget(const BraidWord& w, const IndexSet& keep);
// Reads a word over J as a word over I containing J. Throws NotASubset.
BraidWord include(const BraidWord& w, const IndexSet& into);

// Alphabet of the free kernel of forgetting strand m:
// {A[t,m] : t != m}, ordered by the position of t.
AlphabetPtr kernel_alphabet(const IndexSet& index_set, std::size_t m);
// Reads a kernel word letter by letter as a braid word.
BraidWord lift_kernel_word(const FreeWord& word, const IndexSet& index_set, std::size_t m);

// w = include(r) * kernel, with r free of strand m and kernel in the free
// normal subgroup generated by the A_{tm}.
struct KernelSplit {
  BraidWord rest;   // over the full index set, no letter touches m
  FreeWord kernel;  // over kernel_alphabet(index_set, m)
};
KernelSplit split_off_strand(const BraidWord& w, std::size_t m, StepBudget* budget = nullptr);

// Coordinates of w in the free group {A_tm}; requires forget(w, I \ m) to be
// trivial, else throws NotInKernel. The default strand is the last one.
FreeWord kernel_coordinates(const BraidWord& w, StepBudget* budget = nullptr);
FreeWord kernel_coordinates(const BraidWord& w, std::size_t m, StepBudget* budget = nullptr);

// layers[k] is a free word over kernel_alphabet restricted to t < k (the
// letters A[t,k]); layers[0] is always empty. The element is
// layers[1] * layers[2] * ... * layers[n-1].
struct CombedForm {
  IndexSet index_set;
  std::vector<FreeWord> layers;

  friend bool operator==(const CombedForm&, const CombedForm&) = default;
};

// Alphabet {A[t,k] : t < k}.
AlphabetPtr layer_alphabet(const IndexSet& index_set, std::size_t k);

CombedForm comb(const BraidWord& w, StepBudget* budget = nullptr);
BraidWord uncomb(const CombedForm& c);
// Equality in P(I) decided by comparing combed forms. Much cheaper than the
// Artin action on long words.
bool comb_equal(const BraidWord& u, const BraidWord& v);
bool comb_trivial(const BraidWord& w);

// Kernel word of g^-e A_{tm} g^e, g = A_{pq}, derived from the Artin action.
// Exposed for testing.
FreeWord conjugation_rule(const IndexSet& index_set, std::size_t m, BraidLetter g,
                          std::size_t t);

// ---- text / JSON -------------------------------------------------------------

// `A[i,j]` and `A[i,j]^-1` tokens separated by whitespace (also `^k`, and `1`
// for the identity).
BraidWord parse_braid_word(const IndexSet& index_set, std::string_view text);
std::string to_string(const BraidWord& w);
nlohmann::json to_json(const BraidWord& w);  // [["i", "j", 1], ...]
BraidWord braid_word_from_json(const IndexSet& index_set, const nlohmann::json& j);
std::string generator_name(const IndexSet& index_set, std::size_t i, std::size_t j);

nlohmann::json to_json(const CombedForm& c);

}  // namespace chordal
