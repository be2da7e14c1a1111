#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chordal {

// Finite, ordered set of generator names. Alphabets are compared by content,
// so words built over independently constructed but identical alphabets mix
// freely, while words over different alphabets are rejected.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> find(std::string_view s) const;
  // Throws UnknownSymbol.
  std::size_t index_of(std::string_view s) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> symbols);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

struct Letter {
  std::size_t symbol;
  int exponent;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in the free group on an alphabet.
//
// Letters are stored as signed codes: symbol s with exponent +1 is s + 1,
// with exponent -1 it is -(s + 1). The reduced form is canonical, so two
// words are equal in the group iff their codes coincide.
class FreeWord {
 public:
  FreeWord();
  explicit FreeWord(AlphabetPtr alphabet);

  static FreeWord from_letters(AlphabetPtr alphabet, std::span<const Letter> letters);
  static FreeWord from_codes(AlphabetPtr alphabet, std::span<const int> codes);
  static FreeWord generator(AlphabetPtr alphabet, std::size_t symbol, int exponent = 1);
  static FreeWord generator(AlphabetPtr alphabet, std::string_view symbol, int exponent = 1);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  std::span<const int> codes() const noexcept { return codes_; }
  Letter operator[](std::size_t k) const;
  std::vector<Letter> letters() const;

  FreeWord inverse() const;
  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  // Sum of the exponents of one symbol (the image in the abelianisation).
  long exponent_sum(std::size_t symbol) const;

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.codes_ == b.codes_ && same_alphabet(a.alphabet_, b.alphabet_);
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<int> codes_;
};

FreeWord reduce(AlphabetPtr alphabet, std::span<const Letter> letters);
FreeWord multiply(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& a);
// Throws AlphabetMismatch when the words live in different groups.
bool equal(const FreeWord& a, const FreeWord& b);

// Homomorphic image of w under symbol i -> images[i]. All images must share
// one target alphabet; `target` is only consulted when there are no images.
FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images,
                    AlphabetPtr target = nullptr);
FreeWord substitute(const FreeWord& w, const std::map<std::string, FreeWord>& images,
                    AlphabetPtr target = nullptr);

// Text form: whitespace separated `sym` / `sym^-1` tokens; the empty word
// prints as the empty string. The parser also accepts `sym^k` for any integer
// k and the token `1` for the identity when `1` is not a symbol.
std::string to_string(const FreeWord& w);
FreeWord parse_free_word(const AlphabetPtr& alphabet, std::string_view text);

namespace detail {

inline int letter_code(std::size_t symbol, int exponent) {
  return exponent > 0 ? static_cast<int>(symbol) + 1 : -(static_cast<int>(symbol) + 1);
}

// Appends one code, cancelling against the tail.
inline void push_reduced(std::vector<int>& word, int code) {
  if (!word.empty() && word.back() == -code) {
    word.pop_back();
  } else {
    word.push_back(code);
  }
}

inline void append_reduced(std::vector<int>& word, std::span<const int> tail) {
  for (int c : tail) push_reduced(word, c);
}

inline void append_inverse_reduced(std::vector<int>& word, std::span<const int> tail) {
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) push_reduced(word, -*it);
}

std::vector<int> reduced_codes(std::span<const int> codes);

}  // namespace detail

}  // namespace chordal
