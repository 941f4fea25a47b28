#include <doctest.h>

#include <random>

#include "artin/garside.hpp"
#include "artin/parse.hpp"

using namespace artin;

namespace {

Word random_word(int rank, int length, std::mt19937 &rng) {
  WordBuilder b(type_a(rank));
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < length; ++i) b.push(idx(rng), sign(rng) ? 1 : -1);
  return b.take();
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation id = Permutation::identity(4);
  Permutation w0 = Permutation::reversal(4);
  CHECK(id.is_identity());
  CHECK(w0.is_reversal());
  CHECK((w0 * w0).is_identity());
  CHECK(w0.descents() == std::vector<int>{1, 2, 3});

  Permutation s1 = Permutation::transposition(4, 1);
  Permutation s2 = Permutation::transposition(4, 2);
  CHECK(s1 * s2 == Permutation({3, 1, 2, 4}));
  CHECK((s1 * s2).inverse() == Permutation({2, 3, 1, 4}));
  CHECK(simple_meet(s1 * s2, s1) == s1);
  CHECK(simple_meet(s1, s2).is_identity());
  CHECK(left_weighted(w0, s1));
  CHECK(!left_weighted(s1, s2));
  CHECK(left_weighted(s2, s2));
  CHECK(delta_conjugate(s1) == Permutation::transposition(4, 3));
}

TEST_CASE("simple_to_word inverts underlying_permutation on simples") {
  Alphabet a = type_a(4);
  std::mt19937 rng(1);
  std::vector<int> img{1, 2, 3, 4, 5};
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p(img);
    CHECK(underlying_permutation(simple_to_word(p, a)) == p);
  }
}

TEST_CASE("normal form of simple cases") {
  Alphabet a = type_a(3);
  CHECK(normal_form(Word::empty(a)) == BraidNF{3, 0, {}});

  BraidNF d = normal_form(delta_word(3));
  CHECK(d.inf == 1);
  CHECK(d.factors.empty());

  BraidNF dinv = normal_form(invert(delta_word(3)));
  CHECK(dinv.inf == -1);
  CHECK(dinv.factors.empty());

  BraidNF s = normal_form(Word(a, {{2, 1}}));
  CHECK(s.inf == 0);
  CHECK(s.factors == std::vector{Permutation::transposition(4, 2)});

  BraidNF sinv = normal_form(Word(a, {{2, -1}}));
  CHECK(sinv.inf == -1);
  CHECK(sinv.canonical_length() == 1);
}

TEST_CASE("normal form respects the braid relations") {
  Alphabet a = type_a(3);
  CHECK(normal_form(parse_word("s1 s2 s1", a)) ==
        normal_form(parse_word("s2 s1 s2", a)));
  CHECK(normal_form(parse_word("s1 s3", a)) ==
        normal_form(parse_word("s3 s1", a)));
  CHECK(braid_equal(parse_word("s1 s2 s1", a), parse_word("s2 s1 s2", a)));
  CHECK(!braid_equal(parse_word("s1", a), parse_word("s2", a)));
  CHECK(!braid_equal(parse_word("s1", a), parse_word("s1^-1", a)));
}

TEST_CASE("normal form is left-weighted and round-trips") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int rank = 3 + trial % 4;
    Word w = random_word(rank, 40, rng);
    BraidNF nf = normal_form(w);
    CHECK(is_left_weighted_nf(nf));
    CHECK(normal_form(nf_to_word(nf)) == nf);
    CHECK(underlying_permutation(nf_to_word(nf)) == underlying_permutation(w));
  }
}

TEST_CASE("normal form is multiplicative on inverses and conjugates") {
  std::mt19937 rng(7);
  Alphabet a = type_a(5);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(5, 30, rng);
    CHECK(braid_equal(concat(w, invert(w)), Word::empty(a)));
    Word x = random_word(5, 10, rng);
    CHECK(braid_equal(conjugate(x, w), concat(concat(x, w), invert(x))));
  }
}

TEST_CASE("Delta^2 is central") {
  Alphabet a = type_a(5);
  Word d2 = power(delta_word(5), 2);
  for (int i = 1; i <= 5; ++i) {
    Word s(a, {{i, 1}});
    CHECK(braid_equal(concat(d2, s), concat(s, d2)));
  }
  // Delta itself is not central in A[A_5].
  Word s1(a, {{1, 1}});
  CHECK(!braid_equal(concat(delta_word(5), s1), concat(s1, delta_word(5))));
}

TEST_CASE("delta_power") {
  for (long long k : {-3LL, -1LL, 0LL, 1LL, 2LL, 4LL}) {
    Word w = power(delta_word(4), k);
    auto p = delta_power(w);
    REQUIRE(p.has_value());
    CHECK(*p == k);
  }
  CHECK(!delta_power(Word(type_a(4), {{1, 1}})).has_value());
  // A scrambled word for Delta^2 still reports 2.
  Alphabet a = type_a(2);
  Word scrambled = parse_word("s2 s1 s2 s1 s2 s1", a);
  CHECK(delta_power(scrambled) == 2);
}

TEST_CASE("underlying_permutation is a homomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Word u = random_word(4, 20, rng);
    Word v = random_word(4, 20, rng);
    CHECK(underlying_permutation(concat(u, v)) ==
          underlying_permutation(u) * underlying_permutation(v));
    CHECK(underlying_permutation(invert(u)) ==
          underlying_permutation(u).inverse());
  }
}

TEST_CASE("handle reduction detects trivial words") {
  Alphabet a = type_a(3);
  CHECK(handle_trivial(Word::empty(a)));
  CHECK(handle_trivial(parse_word("s1 s2 s1 S2 S1 S2", a)));
  CHECK(!handle_trivial(parse_word("s1", a)));
  CHECK(!handle_trivial(parse_word("s1 s2", a)));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(4, 24, rng);
    Word x = random_word(4, 12, rng);
    CHECK(handle_trivial(concat(conjugate(x, w), invert(conjugate(x, w)))));
  }
}

TEST_CASE("handle reduction budget raises") {
  // Trivial but not freely reducible, so several handles must be processed.
  Alphabet a = type_a(3);
  Word w = power(parse_word("s1 s2 s1 S2 S1 S2", a), 4);
  CHECK_THROWS_AS(handle_trivial(w, 1), BudgetExceeded);
}

TEST_CASE("oracles agree on random words") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int rank = 3 + trial % 3;
    Word w = random_word(rank, 24, rng);
    CHECK(handle_trivial(w) == normal_form(w).is_trivial());
  }
}
