#include "chordal/errors.hpp"
#include "chordal/pure_braid.hpp"
#include "chordal/random.hpp"
#include "doctest.h"

using namespace chordal;

namespace {

BraidWord w(const IndexSet& s, const char* text) { return parse_braid_word(s, text); }

FreeWord x(const ArtinAuto& a, const char* text) { return parse_free_word(a.alphabet(), text); }

IndexSet subset(Rng& rng, const IndexSet& from, std::size_t min_size = 0) {
  std::vector<std::string> labels;
  for (const auto& l : from.labels()) {
    if (uniform_index(rng, 2)) labels.push_back(l);
  }
  while (labels.size() < min_size) labels.push_back(from.label(labels.size()));
  // keep the ambient order
  std::vector<std::string> ordered;
  for (const auto& l : from.labels()) {
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) ordered.push_back(l);
  }
  return IndexSet(ordered);
}

}  // namespace

TEST_CASE("generators") {
  const IndexSet i2 = IndexSet::range(2);
  const IndexSet i3 = IndexSet::range(3);
  CHECK(to_string(generator(i2, "1", "2")) == "A[1,2]");
  CHECK(to_string(generator(i3, "3", "1")) == "A[1,3]");
  CHECK(generator(i3, "3", "1") == generator(i3, "1", "3"));
  CHECK_THROWS_AS(generator(i2, "1", "1"), BadIndex);
  CHECK_THROWS_AS(generator(i2, "1", "7"), BadIndex);
}

TEST_CASE("A12 acts as the square of the half twist") {
  const IndexSet i2 = IndexSet::range(2);
  const ArtinAuto half = half_twist_auto(i2, 0, 1);
  const ArtinAuto square = half.then(half);
  // hand-reduced: x1 -> x1 x2 x1 x2^-1 x1^-1, x2 -> x1 x2 x1^-1
  CHECK(square.image(0) == x(square, "x1 x2 x1 x2^-1 x1^-1"));
  CHECK(square.image(1) == x(square, "x1 x2 x1^-1"));

  const ArtinAuto a12 = artin_auto(w(i2, "A[1,2]"));
  CHECK(a12 == square);
  // (x1x2) x (x1x2)^-1
  CHECK(a12.image(0) == x(a12, "x1 x2 x1 x2^-1 x1^-1"));
  CHECK(a12.image(1) == x(a12, "x1 x2 x2 x2^-1 x1^-1"));

  CHECK(artin_auto(BraidWord(i2)).is_identity());
  CHECK(artin_auto(w(i2, "A[1,2] A[1,2]^-1")).is_identity());
  const BraidLetter raw[] = {{0, 1, 1}, {0, 1, -1}};
  CHECK(BraidWord(i2, raw).empty());
}

TEST_CASE("generator action matches the closed formula") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const IndexSet s = IndexSet::range(n);
    const AlphabetPtr a = strand_alphabet(s);
    auto gen = [&](std::size_t k, int e = 1) { return FreeWord::generator(a, k, e); };
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const ArtinAuto act = artin_auto(BraidWord(s, std::vector<BraidLetter>{{p, q, 1}}));
        const FreeWord c = gen(p) * gen(q);
        const FreeWord comm = gen(p) * gen(q) * gen(p, -1) * gen(q, -1);
        for (std::size_t r = 0; r < n; ++r) {
          FreeWord expected = gen(r);
          if (r == p || r == q) expected = c * gen(r) * c.inverse();
          if (p < r && r < q) expected = comm * gen(r) * comm.inverse();
          CHECK(act.image(r) == expected);
        }
        // the inverse letter really is the inverse automorphism
        const ArtinAuto inv = artin_auto(BraidWord(s, std::vector<BraidLetter>{{p, q, -1}}));
        CHECK(act.then(inv).is_identity());
        CHECK(inv.then(act).is_identity());
      }
    }
  }
}

TEST_CASE("action composes along the word") {
  Rng rng(3);
  const IndexSet s = IndexSet::range(4);
  for (int k = 0; k < 50; ++k) {
    const BraidWord u = random_braid_word(rng, s, 5);
    const BraidWord v = random_braid_word(rng, s, 5);
    CHECK(artin_auto(u * v) == artin_auto(u).then(artin_auto(v)));
    CHECK(artin_auto(u).fixes_boundary());
  }
}

TEST_CASE("equality via the Artin action") {
  const IndexSet i3 = IndexSet::range(3);
  CHECK_FALSE(equal(w(i3, "A[1,3] A[2,3]"), w(i3, "A[2,3] A[1,3]")));
  // full twist is central
  CHECK(equal(w(i3, "A[1,2] A[1,3] A[2,3] A[1,2]"), w(i3, "A[1,2] A[1,2] A[1,3] A[2,3]")));
  const BraidWord u = w(i3, "A[1,2] A[2,3]^-1 A[1,3]");
  CHECK(equal(u * u.inverse(), BraidWord(i3)));
  CHECK_THROWS_AS(equal(u, BraidWord(IndexSet::range(2))), IndexSetMismatch);
}

TEST_CASE("forget and include") {
  const IndexSet i3 = IndexSet::range(3);
  const IndexSet j12({"1", "2"});
  CHECK(forget(w(i3, "A[1,3] A[1,2]"), j12) == w(j12, "A[1,2]"));
  const BraidWord u = w(i3, "A[1,2] A[2,3]^-1 A[1,3]");
  CHECK(forget(u, i3) == u);
  CHECK(forget(w(i3, "A[1,2] A[2,3] A[1,3]"), IndexSet({"2"})).empty());
  CHECK_THROWS_AS(forget(u, IndexSet({"1", "9"})), NotASubset);

  CHECK(include(w(j12, "A[1,2]"), i3) == w(i3, "A[1,2]"));
  CHECK(include(BraidWord(j12), i3).empty());
  CHECK_THROWS_AS(include(u, j12), NotASubset);

  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    const IndexSet big = IndexSet::range(2 + uniform_index(rng, 3));
    const IndexSet small = subset(rng, big);
    const BraidWord v = random_braid_word(rng, small, uniform_index(rng, 12));
    CHECK(forget(include(v, big), small) == v);
  }
}

TEST_CASE("forget is a functor and a homomorphism") {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const IndexSet big = IndexSet::range(2 + uniform_index(rng, 3));
    const IndexSet mid = subset(rng, big);
    const IndexSet low = subset(rng, mid);
    const BraidWord u = random_braid_word(rng, big, uniform_index(rng, 12));
    const BraidWord v = random_braid_word(rng, big, uniform_index(rng, 6));
    CHECK(equal(forget(forget(u, mid), low), forget(u, low)));
    CHECK(equal(forget(u * v, mid), forget(u, mid) * forget(v, mid)));
  }
}

TEST_CASE("include respects relations at every insertion position") {
  // u and its combed reassembly are equal in P(J); their images in P(I) must be.
  Rng rng(31);
  const IndexSet big = IndexSet::range(5);
  for (int k = 0; k < 60; ++k) {
    const IndexSet small = subset(rng, big, 3);
    const BraidWord u = random_braid_word(rng, small, 8);
    const BraidWord v = uncomb(comb(u));
    REQUIRE(equal(u, v));
    CHECK(equal(include(u, big), include(v, big)));
  }
}

TEST_CASE("comb examples") {
  const IndexSet i3 = IndexSet::range(3);
  const CombedForm c = comb(w(i3, "A[1,2] A[1,3]"));
  CHECK(to_string(c.layers[1]) == "A[1,2]");
  CHECK(to_string(c.layers[2]) == "A[1,3]");
  CHECK(uncomb(c) == w(i3, "A[1,2] A[1,3]"));

  const CombedForm id = comb(BraidWord(i3));
  for (const auto& layer : id.layers) CHECK(layer.empty());
  CHECK(uncomb(id).empty());

  const IndexSet i4 = IndexSet::range(4);
  const CombedForm g = comb(w(i4, "A[2,4]"));
  CHECK(g.layers[1].empty());
  CHECK(g.layers[2].empty());
  CHECK(to_string(g.layers[3]) == "A[2,4]");
}

TEST_CASE("kernel coordinates") {
  const IndexSet i3 = IndexSet::range(3);
  CHECK(to_string(kernel_coordinates(w(i3, "A[1,3] A[2,3]^-1"))) == "A[1,3] A[2,3]^-1");
  CHECK_THROWS_AS(kernel_coordinates(w(i3, "A[1,2]")), NotInKernel);

  const BraidWord conj = w(i3, "A[1,2]^-1 A[1,3] A[1,2]");
  const FreeWord k = kernel_coordinates(conj);
  for (const Letter& l : k.letters()) CHECK(l.symbol < 2);
  CHECK(equal(lift_kernel_word(k, i3, 2), conj));
  CHECK(k.length() > 1);  // not a single generator

  // a middle strand: kernel of forgetting strand 2 in P_4
  const IndexSet i4 = IndexSet::range(4);
  const BraidWord mid = w(i4, "A[1,3]^-1 A[2,4] A[1,2] A[1,3]");
  const FreeWord km = kernel_coordinates(mid, 1);
  CHECK(equal(lift_kernel_word(km, i4, 1), mid));
  CHECK_THROWS_AS(kernel_coordinates(w(i4, "A[1,3] A[2,4]"), 1), NotInKernel);
}

TEST_CASE("conjugation rules hold in the group") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const IndexSet s = IndexSet::range(n);
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          if (p == m || q == m) continue;
          for (int e : {1, -1}) {
            for (std::size_t t = 0; t < n; ++t) {
              if (t == m) continue;
              const FreeWord rule = conjugation_rule(s, m, {p, q, e}, t);
              BraidWord lhs(s, std::vector<BraidLetter>{{p, q, -e}, {std::min(t, m), std::max(t, m), 1}, {p, q, e}});
              CHECK(equal(lift_kernel_word(rule, s, m), lhs));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("comb and the Artin action agree") {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const IndexSet s = IndexSet::range(1 + uniform_index(rng, 4));
    const BraidWord u = random_braid_word(rng, s, uniform_index(rng, 13));
    const CombedForm c = comb(u);
    CHECK(equal(uncomb(c), u));
    CHECK(comb(uncomb(c)) == c);
    BraidWord v = uniform_index(rng, 2) ? uncomb(c) : random_braid_word(rng, s, uniform_index(rng, 13));
    if (uniform_index(rng, 3) == 0 && s.size() >= 2) v *= generator(s, s.label(0), s.label(1));
    CHECK(comb_equal(u, v) == equal(u, v));
  }
}

TEST_CASE("P on two strands is infinite cyclic") {
  Rng rng(8);
  const IndexSet s({"p", "q"});
  for (int k = 0; k < 50; ++k) {
    const BraidWord u = random_braid_word(rng, s, uniform_index(rng, 12));
    long sum = 0;
    for (const auto& l : u.letters()) sum += l.exponent;
    const CombedForm c = comb(u);
    CHECK(c.layers[1].length() == static_cast<std::size_t>(std::labs(sum)));
    CHECK(c.layers[1].exponent_sum(0) == sum);
  }
}

TEST_CASE("step budget interrupts long rewrites") {
  Rng rng(9);
  const IndexSet s = IndexSet::range(4);
  const BraidWord u = random_braid_word(rng, s, 40);
  StepBudget tiny(3);
  CHECK_THROWS_AS(comb(u, &tiny), BudgetExceeded);
  StepBudget ample(100000000);
  CHECK(equal(uncomb(comb(u, &ample)), u));
}

TEST_CASE("text and JSON forms") {
  const IndexSet s({"a", "b", "c"});
  const BraidWord u = w(s, "A[a,b] A[b,c]^-1 A[c,a]^2");
  CHECK(to_string(u) == "A[a,b] A[b,c]^-1 A[a,c] A[a,c]");
  CHECK(parse_braid_word(s, to_string(u)) == u);
  CHECK(braid_word_from_json(s, to_json(u)) == u);
  CHECK(to_json(w(s, "A[a,b]^-1")).dump() == R"([["a","b",-1]])");
  CHECK_THROWS_AS(parse_braid_word(s, "B[a,b]"), ParseError);
  CHECK_THROWS_AS(parse_braid_word(s, "A[a,z]"), BadIndex);
}
