#include <random>

#include "chordal/errors.hpp"
#include "chordal/free_group.hpp"
#include "doctest.h"

using namespace chordal;

namespace {

AlphabetPtr xy() { return make_alphabet({"x", "y"}); }

FreeWord word(const AlphabetPtr& a, const char* text) { return parse_free_word(a, text); }

FreeWord random_word(std::mt19937_64& rng, const AlphabetPtr& a, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, a->size() - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) l = {sym(rng), sign(rng) ? 1 : -1};
  return reduce(a, letters);
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  auto a = xy();
  const Letter raw[] = {{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  CHECK(to_string(reduce(a, raw)) == "x x");

  const Letter cancel[] = {{0, 1}, {0, -1}};
  CHECK(reduce(a, cancel).empty());

  const Letter reduced[] = {{0, 1}, {1, 1}, {0, -1}};
  CHECK(to_string(reduce(a, reduced)) == "x y x^-1");

  const Letter bad[] = {{2, 1}};
  CHECK_THROWS_AS(reduce(a, bad), UnknownSymbol);
}

TEST_CASE("multiply, invert, equal") {
  auto a = xy();
  CHECK(multiply(word(a, "x"), word(a, "x^-1")).empty());
  CHECK(to_string(invert(word(a, "x y"))) == "y^-1 x^-1");
  CHECK(equal(word(a, "x y y^-1"), word(a, "x")));
  CHECK_FALSE(equal(word(a, "x y"), word(a, "y x")));

  auto other = make_alphabet({"x", "z"});
  CHECK_THROWS_AS(equal(word(a, "x"), word(other, "x")), AlphabetMismatch);
  CHECK_THROWS_AS(multiply(word(a, "x"), word(other, "x")), AlphabetMismatch);
  // Alphabets compare by content.
  CHECK(equal(word(a, "x"), word(xy(), "x")));
}

TEST_CASE("substitute is the homomorphic image") {
  auto src = xy();
  auto dst = make_alphabet({"a", "b"});
  std::map<std::string, FreeWord> images{{"x", word(dst, "a b")}, {"y", word(dst, "b^-1")}};
  CHECK(to_string(substitute(word(src, "x y"), images)) == "a");
  CHECK(to_string(substitute(word(src, "x^-1"), images)) == "b^-1 a^-1");
  CHECK(substitute(FreeWord(src), images).empty());

  std::map<std::string, FreeWord> partial{{"x", word(dst, "a")}};
  CHECK_THROWS_AS(substitute(word(src, "x y"), partial), MissingImage);

  // identity substitution
  std::vector<FreeWord> id{word(src, "x"), word(src, "y")};
  CHECK(substitute(word(src, "x y^-1 x"), id) == word(src, "x y^-1 x"));
}

TEST_CASE("parser round-trips the printer and accepts powers") {
  auto a = make_alphabet({"x1", "x2", "A[1,2]"});
  CHECK(to_string(parse_free_word(a, "x1 x2^-1 x1")) == "x1 x2^-1 x1");
  CHECK(to_string(parse_free_word(a, "x1^3 x1^-2")) == "x1");
  CHECK(to_string(parse_free_word(a, "A[1,2]^-1 1")) == "A[1,2]^-1");
  CHECK(parse_free_word(a, "").empty());
  CHECK_THROWS_AS(parse_free_word(a, "x3"), UnknownSymbol);
  CHECK_THROWS_AS(parse_free_word(a, "x1^q"), ParseError);

  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const FreeWord w = random_word(rng, a, 12);
    CHECK(parse_free_word(a, to_string(w)) == w);
  }
}

TEST_CASE("group laws on random words") {
  auto a = make_alphabet({"a", "b", "c"});
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 300; ++k) {
    const FreeWord u = random_word(rng, a, 10);
    const FreeWord v = random_word(rng, a, 10);
    const FreeWord w = random_word(rng, a, 10);
    CHECK((u * v) * w == u * (v * w));
    CHECK(u.inverse().inverse() == u);
    CHECK((u * u.inverse()).empty());
    CHECK(reduce(a, u.letters()) == u);
    CHECK((u * v).exponent_sum(1) == u.exponent_sum(1) + v.exponent_sum(1));
  }
}

TEST_CASE("substitution composes") {
  auto a = make_alphabet({"a", "b", "c"});
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    std::vector<FreeWord> f, g;
    for (int s = 0; s < 3; ++s) {
      f.push_back(random_word(rng, a, 4));
      g.push_back(random_word(rng, a, 4));
    }
    std::vector<FreeWord> gf;
    for (const auto& img : f) gf.push_back(substitute(img, g));
    const FreeWord w = random_word(rng, a, 8);
    CHECK(substitute(substitute(w, f), g) == substitute(w, gf));
  }
}
