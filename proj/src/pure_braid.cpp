#include "chordal/pure_braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "chordal/errors.hpp"

namespace chordal {

// ---- IndexSet ------------------------------------------------------------------

struct IndexSet::Data {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
};

IndexSet::IndexSet() : IndexSet(std::vector<std::string>{}) {}

IndexSet::IndexSet(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  for (std::size_t k = 0; k < data->labels.size(); ++k) {
    if (!data->index.emplace(data->labels[k], k).second) {
      throw BadIndex("duplicate strand label '" + data->labels[k] + "'");
    }
  }
  data_ = std::move(data);
}

IndexSet IndexSet::range(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back(std::to_string(k));
  return IndexSet(std::move(labels));
}

std::size_t IndexSet::size() const noexcept { return data_->labels.size(); }

const std::string& IndexSet::label(std::size_t position) const {
  if (position >= size()) throw BadIndex("strand position out of range");
  return data_->labels[position];
}

const std::vector<std::string>& IndexSet::labels() const noexcept { return data_->labels; }

std::optional<std::size_t> IndexSet::find(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t IndexSet::position(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw BadIndex("strand '" + std::string(label) + "' not in index set");
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::all_of(labels().begin(), labels().end(),
                     [&](const std::string& l) { return other.contains(l); });
}

IndexSet IndexSet::without(std::size_t position) const {
  std::vector<std::string> labels = data_->labels;
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(position));
  return IndexSet(std::move(labels));
}

bool operator==(const IndexSet& a, const IndexSet& b) {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

// ---- BraidWord -------------------------------------------------------------------

namespace {

BraidLetter canonical(BraidLetter l, std::size_t n) {
  if (l.i == l.j || l.i >= n || l.j >= n) throw BadIndex("bad Artin generator indices");
  if (l.exponent != 1 && l.exponent != -1) throw BadIndex("braid letter exponent must be +-1");
  if (l.i > l.j) std::swap(l.i, l.j);
  return l;
}

}  // namespace

BraidWord::BraidWord(IndexSet index_set, std::span<const BraidLetter> letters)
    : index_set_(std::move(index_set)) {
  letters_.reserve(letters.size());
  for (const BraidLetter& l : letters) push_back(canonical(l, index_set_.size()));
}

void BraidWord::push_back(BraidLetter letter) {
  letter = canonical(letter, index_set_.size());
  if (!letters_.empty()) {
    const BraidLetter& last = letters_.back();
    if (last.i == letter.i && last.j == letter.j && last.exponent == -letter.exponent) {
      letters_.pop_back();
      return;
    }
  }
  letters_.push_back(letter);
}

BraidWord BraidWord::inverse() const {
  BraidWord out(index_set_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back({it->i, it->j, -it->exponent});
  }
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (!(index_set_ == rhs.index_set_)) throw IndexSetMismatch("braid words over different index sets");
  for (const BraidLetter& l : rhs.letters_) push_back(l);
  return *this;
}

BraidWord generator(const IndexSet& index_set, std::string_view i, std::string_view j,
                    int exponent) {
  const std::size_t p = index_set.position(i);
  const std::size_t q = index_set.position(j);
  if (p == q) throw BadIndex("Artin generator needs two distinct strands");
  const BraidLetter l{p, q, exponent};
  return BraidWord(index_set, std::span<const BraidLetter>(&l, 1));
}

void StepBudget::spend(std::size_t steps) {
  if (steps > remaining_) {
    remaining_ = 0;
    throw BudgetExceeded("step budget exhausted");
  }
  remaining_ -= steps;
}

// ---- raw automorphisms ----------------------------------------------------------
//
// Automorphisms of F_n as image tables over codes +-1..+-n (strand position + 1).

namespace {

using RawWord = std::vector<int>;
using RawAuto = std::vector<RawWord>;

RawAuto raw_identity(std::size_t n) {
  RawAuto a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = {static_cast<int>(k) + 1};
  return a;
}

RawWord raw_apply(const RawWord& w, const RawAuto& a, StepBudget* budget) {
  RawWord out;
  for (int c : w) {
    const RawWord& img = a[static_cast<std::size_t>(std::abs(c) - 1)];
    if (budget) budget->spend(img.size());
    if (c > 0) {
      detail::append_reduced(out, img);
    } else {
      detail::append_inverse_reduced(out, img);
    }
  }
  return out;
}

// `first`, then `second` (right action).
RawAuto raw_then(const RawAuto& first, const RawAuto& second, StepBudget* budget) {
  RawAuto out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) out[k] = raw_apply(first[k], second, budget);
  return out;
}

RawAuto raw_half_twist(std::size_t n, std::size_t k, int exponent) {
  RawAuto a = raw_identity(n);
  const int xk = static_cast<int>(k) + 1;
  const int xk1 = xk + 1;
  if (exponent > 0) {
    a[k] = {xk, xk1, -xk};
    a[k + 1] = {xk};
  } else {
    a[k] = {xk1};
    a[k + 1] = {-xk1, xk, xk1};
  }
  return a;
}

// A_{pq}^e as a word in half twists: s_p^-1 .. s_{q-2}^-1 s_{q-1}^{2e} s_{q-2} .. s_p.
std::vector<std::pair<std::size_t, int>> generator_half_twists(std::size_t p, std::size_t q,
                                                               int exponent) {
  std::vector<std::pair<std::size_t, int>> word;
  for (std::size_t k = p; k + 1 < q; ++k) word.emplace_back(k, -1);
  word.emplace_back(q - 1, exponent);
  word.emplace_back(q - 1, exponent);
  for (std::size_t k = q - 1; k-- > p;) word.emplace_back(k, 1);
  return word;
}

class GeneratorCache {
 public:
  const RawAuto& get(std::size_t n, std::size_t p, std::size_t q, int exponent) {
    std::lock_guard lock(mutex_);
    auto& table = tables_[n];
    if (table.empty()) table.resize(n * n * 2);
    RawAuto& slot = table[(p * n + q) * 2 + (exponent > 0 ? 1 : 0)];
    if (slot.empty()) {
      RawAuto a = raw_identity(n);
      for (auto [k, e] : generator_half_twists(p, q, exponent)) {
        a = raw_then(a, raw_half_twist(n, k, e), nullptr);
      }
      slot = std::move(a);
    }
    return slot;
  }

 private:
  std::mutex mutex_;
  // Entries are never erased, so references stay valid.
  std::map<std::size_t, std::vector<RawAuto>> tables_;
};

GeneratorCache& generator_cache() {
  static GeneratorCache cache;
  return cache;
}

RawAuto raw_artin(const BraidWord& w, StepBudget* budget) {
  const std::size_t n = w.index_set().size();
  RawAuto a = raw_identity(n);
  for (const BraidLetter& l : w.letters()) {
    a = raw_then(a, generator_cache().get(n, l.i, l.j, l.exponent), budget);
  }
  return a;
}

bool raw_is_identity(const RawAuto& a) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].size() != 1 || a[k][0] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

}  // namespace

// ---- ArtinAuto -------------------------------------------------------------------

AlphabetPtr strand_alphabet(const IndexSet& index_set) {
  std::vector<std::string> symbols;
  for (const auto& l : index_set.labels()) symbols.push_back("x" + l);
  return make_alphabet(std::move(symbols));
}

ArtinAuto::ArtinAuto(IndexSet index_set, std::vector<std::vector<int>> raw_images)
    : index_set_(std::move(index_set)), alphabet_(strand_alphabet(index_set_)) {
  images_.reserve(raw_images.size());
  for (const auto& img : raw_images) images_.push_back(FreeWord::from_codes(alphabet_, img));
}

ArtinAuto ArtinAuto::identity(const IndexSet& index_set) {
  return ArtinAuto(index_set, raw_identity(index_set.size()));
}

FreeWord ArtinAuto::apply(const FreeWord& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) {
    throw AlphabetMismatch("word is not over the strand alphabet");
  }
  return substitute(w, images_);
}

ArtinAuto ArtinAuto::then(const ArtinAuto& next) const {
  if (!(index_set_ == next.index_set_)) throw IndexSetMismatch("automorphisms over different index sets");
  ArtinAuto out = *this;
  for (auto& img : out.images_) img = next.apply(img);
  return out;
}

bool ArtinAuto::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k].length() != 1 || images_[k].codes()[0] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

bool ArtinAuto::fixes_boundary() const {
  std::vector<int> boundary;
  for (std::size_t k = 0; k < images_.size(); ++k) boundary.push_back(static_cast<int>(k) + 1);
  const FreeWord b = FreeWord::from_codes(alphabet_, boundary);
  return apply(b) == b;
}

ArtinAuto half_twist_auto(const IndexSet& index_set, std::size_t k, int exponent) {
  if (k + 1 >= index_set.size()) throw BadIndex("half twist position out of range");
  return ArtinAuto(index_set, raw_half_twist(index_set.size(), k, exponent));
}

ArtinAuto artin_auto(const BraidWord& w, StepBudget* budget) {
  return ArtinAuto(w.index_set(), raw_artin(w, budget));
}

bool equal(const BraidWord& u, const BraidWord& v) {
  if (!(u.index_set() == v.index_set())) throw IndexSetMismatch("braid words over different index sets");
  if (u == v) return true;
  return raw_artin(u, nullptr) == raw_artin(v, nullptr);
}

bool is_trivial(const BraidWord& w) { return w.empty() || raw_is_identity(raw_artin(w, nullptr)); }

// ---- forget / include -------------------------------------------------------------

namespace {

// position in `from` -> position in `to`, or npos.
std::vector<std::size_t> position_map(const IndexSet& from, const IndexSet& to) {
  std::vector<std::size_t> map(from.size(), std::string::npos);
  for (std::size_t p = 0; p < from.size(); ++p) {
    if (auto q = to.find(from.label(p))) map[p] = *q;
  }
  return map;
}

}  // namespace

BraidWord forget(const BraidWord& w, const IndexSet& keep) {
  if (!keep.is_subset_of(w.index_set())) throw NotASubset("forget: target is not a subset");
  const auto map = position_map(w.index_set(), keep);
  BraidWord out(keep);
  for (const BraidLetter& l : w.letters()) {
    const std::size_t a = map[l.i];
    const std::size_t b = map[l.j];
    if (a != std::string::npos && b != std::string::npos) out.push_back({a, b, l.exponent});
  }
  return out;
}

BraidWord include(const BraidWord& w, const IndexSet& into) {
  if (!w.index_set().is_subset_of(into)) throw NotASubset("include: source is not a subset");
  const auto map = position_map(w.index_set(), into);
  BraidWord out(into);
  for (const BraidLetter& l : w.letters()) out.push_back({map[l.i], map[l.j], l.exponent});
  return out;
}

// ---- kernels and combing ----------------------------------------------------------

std::string generator_name(const IndexSet& index_set, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return "A[" + index_set.label(i) + "," + index_set.label(j) + "]";
}

AlphabetPtr kernel_alphabet(const IndexSet& index_set, std::size_t m) {
  if (m >= index_set.size()) throw BadIndex("kernel strand out of range");
  std::vector<std::string> symbols;
  for (std::size_t t = 0; t < index_set.size(); ++t) {
    if (t != m) symbols.push_back(generator_name(index_set, t, m));
  }
  return make_alphabet(std::move(symbols));
}

AlphabetPtr layer_alphabet(const IndexSet& index_set, std::size_t k) {
  if (k >= index_set.size()) throw BadIndex("layer out of range");
  std::vector<std::string> symbols;
  for (std::size_t t = 0; t < k; ++t) symbols.push_back(generator_name(index_set, t, k));
  return make_alphabet(std::move(symbols));
}

namespace {

std::size_t kernel_slot(std::size_t t, std::size_t m) { return t < m ? t : t - 1; }
std::size_t kernel_strand(std::size_t slot, std::size_t m) { return slot < m ? slot : slot + 1; }

// Conjugator W of a reduced word W x W^-1 (x the strand-m letter), with the
// letters of strand m deleted: the coordinates of the kernel element that
// produced it, one letter x_t per A_{tm}.
RawWord kernel_reading(const RawWord& image, std::size_t m) {
  const int xm = static_cast<int>(m) + 1;
  const std::size_t len = image.size();
  if (len % 2 == 0 || image[len / 2] != xm) {
    throw InvariantViolation("strand image is not a conjugate of its generator");
  }
  const std::size_t half = len / 2;
  for (std::size_t k = 0; k < half; ++k) {
    if (image[k] != -image[len - 1 - k]) {
      throw InvariantViolation("strand image is not a conjugate of its generator");
    }
  }
  RawWord out;
  for (std::size_t k = 0; k < half; ++k) {
    if (std::abs(image[k]) != xm) detail::push_reduced(out, image[k]);
  }
  return out;
}

// Conjugation tables for the kernel of forgetting strand m of n strands:
// rules[(p * n + q) * 2 + (e > 0)][slot(t)] is the kernel word of
// A_{pq}^-e A_{tm} A_{pq}^e, as codes over kernel_alphabet.
class ConjugationCache {
 public:
  const std::vector<RawWord>& rules(std::size_t n, std::size_t m, std::size_t p, std::size_t q,
                                    int exponent) {
    std::lock_guard lock(mutex_);
    auto& table = tables_[{n, m}];
    if (table.empty()) table.resize(n * n * 2);
    auto& slot = table[(p * n + q) * 2 + (exponent > 0 ? 1 : 0)];
    if (slot.empty()) slot = build(n, m, p, q, exponent);
    return slot;
  }

 private:
  static std::vector<RawWord> build(std::size_t n, std::size_t m, std::size_t p, std::size_t q,
                                    int exponent) {
    const IndexSet strands = IndexSet::range(n);
    std::vector<RawWord> out(n - 1);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == m) continue;
      const BraidLetter word[] = {{p, q, -exponent}, {std::min(t, m), std::max(t, m), 1},
                                  {p, q, exponent}};
      const BraidWord conj(strands, word);
      const RawWord reading = kernel_reading(raw_artin(conj, nullptr)[m], m);
      RawWord rule;
      for (int c : reading) {
        const std::size_t s = static_cast<std::size_t>(std::abs(c) - 1);
        rule.push_back(detail::letter_code(kernel_slot(s, m), c > 0 ? 1 : -1));
      }
      // The rule must hold in P_n, checked with the Artin action.
      BraidWord lifted(strands);
      for (int c : rule) {
        const std::size_t s = kernel_strand(static_cast<std::size_t>(std::abs(c) - 1), m);
        lifted.push_back({std::min(s, m), std::max(s, m), c > 0 ? 1 : -1});
      }
      if (!equal(lifted, conj)) throw InvariantViolation("derived conjugation rule fails the Artin check");
      out[kernel_slot(t, m)] = std::move(rule);
    }
    return out;
  }

  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<RawWord>>> tables_;
};

ConjugationCache& conjugation_cache() {
  static ConjugationCache cache;
  return cache;
}

}  // namespace

FreeWord conjugation_rule(const IndexSet& index_set, std::size_t m, BraidLetter g, std::size_t t) {
  const std::size_t n = index_set.size();
  g = canonical(g, n);
  if (m >= n || t >= n || t == m || g.i == m || g.j == m) throw BadIndex("bad conjugation rule request");
  const auto& rules = conjugation_cache().rules(n, m, g.i, g.j, g.exponent);
  return FreeWord::from_codes(kernel_alphabet(index_set, m), rules[kernel_slot(t, m)]);
}

BraidWord lift_kernel_word(const FreeWord& word, const IndexSet& index_set, std::size_t m) {
  if (!same_alphabet(word.alphabet(), kernel_alphabet(index_set, m))) {
    throw AlphabetMismatch("word is not over the kernel alphabet of this strand");
  }
  BraidWord out(index_set);
  for (const Letter& l : word.letters()) {
    const std::size_t t = kernel_strand(l.symbol, m);
    out.push_back({std::min(t, m), std::max(t, m), l.exponent});
  }
  return out;
}

KernelSplit split_off_strand(const BraidWord& w, std::size_t m, StepBudget* budget) {
  const IndexSet& strands = w.index_set();
  const std::size_t n = strands.size();
  if (m >= n) throw BadIndex("kernel strand out of range");
  BraidWord rest(strands);
  RawWord kernel;
  for (const BraidLetter& l : w.letters()) {
    if (l.i == m || l.j == m) {
      const std::size_t t = l.i == m ? l.j : l.i;
      detail::push_reduced(kernel, detail::letter_code(kernel_slot(t, m), l.exponent));
      continue;
    }
    rest.push_back(l);
    // prefix * g = rest * g * (g^-1 kernel g)
    const auto& rules = conjugation_cache().rules(n, m, l.i, l.j, l.exponent);
    RawWord next;
    for (int c : kernel) {
      const RawWord& img = rules[static_cast<std::size_t>(std::abs(c) - 1)];
      if (budget) budget->spend(img.size());
      if (c > 0) {
        detail::append_reduced(next, img);
      } else {
        detail::append_inverse_reduced(next, img);
      }
    }
    kernel = std::move(next);
  }
  return {std::move(rest), FreeWord::from_codes(kernel_alphabet(strands, m), kernel)};
}

FreeWord kernel_coordinates(const BraidWord& w, StepBudget* budget) {
  if (w.index_set().size() == 0) throw BadIndex("empty index set has no strands");
  return kernel_coordinates(w, w.index_set().size() - 1, budget);
}

FreeWord kernel_coordinates(const BraidWord& w, std::size_t m, StepBudget* budget) {
  KernelSplit split = split_off_strand(w, m, budget);
  if (!comb_trivial(forget(split.rest, w.index_set().without(m)))) {
    throw NotInKernel("word does not lie in the kernel of forgetting strand '" +
                      w.index_set().label(m) + "'");
  }
  return std::move(split.kernel);
}

CombedForm comb(const BraidWord& w, StepBudget* budget) {
  const IndexSet& strands = w.index_set();
  const std::size_t n = strands.size();
  CombedForm out{strands, std::vector<FreeWord>(n)};
  if (n == 0) return out;
  out.layers[0] = FreeWord(layer_alphabet(strands, 0));
  BraidWord current = w;
  for (std::size_t k = n; k-- > 1;) {
    KernelSplit split = split_off_strand(current, k, budget);
    out.layers[k] = FreeWord::from_codes(layer_alphabet(strands, k), split.kernel.codes());
    current = forget(split.rest, current.index_set().without(k));
  }
  return out;
}

BraidWord uncomb(const CombedForm& c) {
  const IndexSet& strands = c.index_set;
  if (c.layers.size() != strands.size()) throw AlphabetMismatch("combed form has wrong number of layers");
  BraidWord out(strands);
  for (std::size_t k = 1; k < c.layers.size(); ++k) {
    if (!same_alphabet(c.layers[k].alphabet(), layer_alphabet(strands, k))) {
      throw AlphabetMismatch("combed layer over the wrong alphabet");
    }
    for (const Letter& l : c.layers[k].letters()) out.push_back({l.symbol, k, l.exponent});
  }
  return out;
}

bool comb_equal(const BraidWord& u, const BraidWord& v) {
  if (!(u.index_set() == v.index_set())) throw IndexSetMismatch("braid words over different index sets");
  return comb(u) == comb(v);
}

bool comb_trivial(const BraidWord& w) {
  if (w.empty()) return true;
  const CombedForm c = comb(w);
  return std::all_of(c.layers.begin(), c.layers.end(), [](const FreeWord& l) { return l.empty(); });
}

// ---- text / JSON -------------------------------------------------------------------

namespace {

BraidLetter parse_generator_token(const IndexSet& index_set, const std::string& token,
                                  long& exponent) {
  std::string body = token;
  exponent = 1;
  if (auto caret = token.rfind('^'); caret != std::string::npos && caret > token.rfind(']')) {
    body = token.substr(0, caret);
    const std::string e = token.substr(caret + 1);
    const char* first = e.data();
    if (!e.empty() && e.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, e.data() + e.size(), exponent);
    if (e.empty() || ec != std::errc{} || ptr != e.data() + e.size()) {
      throw ParseError("bad exponent in '" + token + "'");
    }
  }
  if (body.size() < 5 || body[0] != 'A' || body[1] != '[' || body.back() != ']') {
    throw ParseError("expected A[i,j], got '" + token + "'");
  }
  const std::string inner = body.substr(2, body.size() - 3);
  const auto comma = inner.find(',');
  if (comma == std::string::npos) throw ParseError("expected A[i,j], got '" + token + "'");
  const std::size_t i = index_set.position(inner.substr(0, comma));
  const std::size_t j = index_set.position(inner.substr(comma + 1));
  if (i == j) throw BadIndex("Artin generator needs two distinct strands");
  return {std::min(i, j), std::max(i, j), 1};
}

}  // namespace

BraidWord parse_braid_word(const IndexSet& index_set, std::string_view text) {
  BraidWord out(index_set);
  std::istringstream in{std::string(text)};
  for (std::string token; in >> token;) {
    if (token == "1") continue;
    long exponent = 1;
    BraidLetter l = parse_generator_token(index_set, token, exponent);
    l.exponent = exponent >= 0 ? 1 : -1;
    for (long k = 0; k < std::labs(exponent); ++k) out.push_back(l);
  }
  return out;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const BraidLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += generator_name(w.index_set(), l.i, l.j);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

nlohmann::json to_json(const BraidWord& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const BraidLetter& l : w.letters()) {
    out.push_back({w.index_set().label(l.i), w.index_set().label(l.j), l.exponent});
  }
  return out;
}

BraidWord braid_word_from_json(const IndexSet& index_set, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("braid word JSON must be an array");
  BraidWord out(index_set);
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 3) throw ParseError("braid factor must be [i, j, exponent]");
    auto label = [](const nlohmann::json& x) {
      if (x.is_string()) return x.get<std::string>();
      if (x.is_number_integer()) return std::to_string(x.get<long long>());
      throw ParseError("strand labels must be strings or integers");
    };
    const int e = f[2].get<int>();
    if (e != 1 && e != -1) throw ParseError("braid factor exponent must be +-1");
    out.push_back({index_set.position(label(f[0])), index_set.position(label(f[1])), e});
  }
  return out;
}

nlohmann::json to_json(const CombedForm& c) {
  nlohmann::json layers = nlohmann::json::object();
  for (std::size_t k = 1; k < c.layers.size(); ++k) {
    layers[c.index_set.label(k)] = to_string(c.layers[k]);
  }
  return {{"index_set", c.index_set.labels()}, {"layers", std::move(layers)}};
}

}  // namespace chordal
