#include "chordal/free_group.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

const AlphabetPtr& empty_alphabet() {
  static const AlphabetPtr empty = make_alphabet({});
  return empty;
}

void require_same(const FreeWord& a, const FreeWord& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) {
    throw AlphabetMismatch("free words over different alphabets");
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!index_.emplace(symbols_[i], i).second) {
      throw ParseError("duplicate alphabet symbol '" + symbols_[i] + "'");
    }
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view s) const {
  auto it = index_.find(std::string(s));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alphabet::index_of(std::string_view s) const {
  if (auto i = find(s)) return *i;
  throw UnknownSymbol("symbol '" + std::string(s) + "' not in alphabet");
}

AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
  return std::make_shared<const Alphabet>(std::move(symbols));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace detail {

std::vector<int> reduced_codes(std::span<const int> codes) {
  std::vector<int> out;
  out.reserve(codes.size());
  append_reduced(out, codes);
  return out;
}

}  // namespace detail

FreeWord::FreeWord() : alphabet_(empty_alphabet()) {}

FreeWord::FreeWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) alphabet_ = empty_alphabet();
}

FreeWord FreeWord::from_letters(AlphabetPtr alphabet, std::span<const Letter> letters) {
  FreeWord w(std::move(alphabet));
  w.codes_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.symbol >= w.alphabet_->size()) {
      throw UnknownSymbol("letter index " + std::to_string(l.symbol) + " outside alphabet");
    }
    if (l.exponent != 1 && l.exponent != -1) {
      throw ParseError("letter exponent must be +1 or -1");
    }
    detail::push_reduced(w.codes_, detail::letter_code(l.symbol, l.exponent));
  }
  return w;
}

FreeWord FreeWord::from_codes(AlphabetPtr alphabet, std::span<const int> codes) {
  FreeWord w(std::move(alphabet));
  const int n = static_cast<int>(w.alphabet_->size());
  w.codes_.reserve(codes.size());
  for (int c : codes) {
    if (c == 0 || std::abs(c) > n) throw UnknownSymbol("letter code outside alphabet");
    detail::push_reduced(w.codes_, c);
  }
  return w;
}

FreeWord FreeWord::generator(AlphabetPtr alphabet, std::size_t symbol, int exponent) {
  const Letter l{symbol, exponent};
  return from_letters(std::move(alphabet), std::span<const Letter>(&l, 1));
}

FreeWord FreeWord::generator(AlphabetPtr alphabet, std::string_view symbol, int exponent) {
  const std::size_t s = alphabet->index_of(symbol);
  return generator(std::move(alphabet), s, exponent);
}

Letter FreeWord::operator[](std::size_t k) const {
  const int c = codes_.at(k);
  return c > 0 ? Letter{static_cast<std::size_t>(c - 1), 1}
               : Letter{static_cast<std::size_t>(-c - 1), -1};
}

std::vector<Letter> FreeWord::letters() const {
  std::vector<Letter> out;
  out.reserve(codes_.size());
  for (std::size_t k = 0; k < codes_.size(); ++k) out.push_back((*this)[k]);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(alphabet_);
  w.codes_.reserve(codes_.size());
  for (auto it = codes_.rbegin(); it != codes_.rend(); ++it) w.codes_.push_back(-*it);
  return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  require_same(*this, rhs);
  detail::append_reduced(codes_, rhs.codes_);
  return *this;
}

long FreeWord::exponent_sum(std::size_t symbol) const {
  const int pos = static_cast<int>(symbol) + 1;
  long sum = 0;
  for (int c : codes_) {
    if (c == pos) ++sum;
    if (c == -pos) --sum;
  }
  return sum;
}

FreeWord reduce(AlphabetPtr alphabet, std::span<const Letter> letters) {
  return FreeWord::from_letters(std::move(alphabet), letters);
}

FreeWord multiply(const FreeWord& a, const FreeWord& b) { return a * b; }

FreeWord invert(const FreeWord& a) { return a.inverse(); }

bool equal(const FreeWord& a, const FreeWord& b) {
  require_same(a, b);
  return a == b;
}

FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images, AlphabetPtr target) {
  if (images.size() < w.alphabet()->size()) {
    throw MissingImage("substitution defines " + std::to_string(images.size()) +
                       " images for an alphabet of size " +
                       std::to_string(w.alphabet()->size()));
  }
  if (!images.empty()) {
    target = images.front().alphabet();
    for (const FreeWord& img : images) {
      if (!same_alphabet(img.alphabet(), target)) {
        throw AlphabetMismatch("substitution images over different alphabets");
      }
    }
  } else if (!target) {
    target = w.alphabet();
  }
  std::vector<int> out;
  for (int c : w.codes()) {
    const auto& img = images[static_cast<std::size_t>(std::abs(c) - 1)].codes();
    if (c > 0) {
      detail::append_reduced(out, img);
    } else {
      detail::append_inverse_reduced(out, img);
    }
  }
  return FreeWord::from_codes(std::move(target), out);
}

FreeWord substitute(const FreeWord& w, const std::map<std::string, FreeWord>& images,
                    AlphabetPtr target) {
  std::vector<FreeWord> table;
  table.reserve(w.alphabet()->size());
  for (const std::string& s : w.alphabet()->symbols()) {
    auto it = images.find(s);
    if (it == images.end()) throw MissingImage("no image for symbol '" + s + "'");
    table.push_back(it->second);
  }
  return substitute(w, table, std::move(target));
}

std::string to_string(const FreeWord& w) {
  std::string out;
  for (int c : w.codes()) {
    if (!out.empty()) out += ' ';
    out += w.alphabet()->symbol(static_cast<std::size_t>(std::abs(c) - 1));
    if (c < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_free_word(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<int> codes;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string symbol = token;
    long exponent = 1;
    if (auto caret = token.rfind('^'); caret != std::string::npos) {
      symbol = token.substr(0, caret);
      const std::string e = token.substr(caret + 1);
      const char* first = e.data();
      if (!e.empty() && e.front() == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, e.data() + e.size(), exponent);
      if (ec != std::errc{} || ptr != e.data() + e.size() || e.empty()) {
        throw ParseError("bad exponent in token '" + token + "'");
      }
    }
    if (symbol == "1" && !alphabet->find("1")) {
      continue;
    }
    const std::size_t s = alphabet->index_of(symbol);
    const int code = detail::letter_code(s, exponent >= 0 ? 1 : -1);
    for (long k = 0; k < std::labs(exponent); ++k) detail::push_reduced(codes, code);
  }
  return FreeWord::from_codes(alphabet, codes);
}

}  // namespace chordal
