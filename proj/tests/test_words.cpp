#include <doctest.h>

#include "artin/parse.hpp"
#include "artin/bn.hpp"
#include "artin/words.hpp"

using namespace artin;

TEST_CASE("free reduction at construction") {
  Alphabet a = type_a(4);
  Word w(a, {{1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, 1}});
  CHECK(w.length() == 1);
  CHECK(w.letters()[0] == Letter{3, 1});

  Word cancel_all(a, {{1, 1}, {2, 1}, {2, -1}, {1, -1}});
  CHECK(cancel_all.is_empty());
}

TEST_CASE("construction validates letters") {
  Alphabet a = type_a(3);
  CHECK_THROWS_AS(Word(a, {{4, 1}}), InvalidInput);
  CHECK_THROWS_AS(Word(a, {{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Word(a, {{1, 2}}), InvalidInput);
  Alphabet aff = type_affine_a(4);
  CHECK_NOTHROW(Word(aff, {{0, 1}, {3, -1}}));
  CHECK_THROWS_AS(Word(aff, {{4, 1}}), InvalidInput);
}

TEST_CASE("concat, invert, conjugate, power") {
  Alphabet a = type_a(4);
  Word u(a, {{1, 1}, {2, 1}});
  Word v(a, {{2, -1}, {3, 1}});
  CHECK(concat(u, v) == Word(a, {{1, 1}, {3, 1}}));
  CHECK(concat(u, invert(u)).is_empty());
  CHECK(invert(u) == Word(a, {{2, -1}, {1, -1}}));

  Word x(a, {{3, 1}});
  CHECK(conjugate(x, u) ==
        Word(a, {{3, 1}, {1, 1}, {2, 1}, {3, -1}}));

  CHECK(power(u, 0).is_empty());
  CHECK(power(u, 2) == concat(u, u));
  CHECK(power(u, -1) == invert(u));
  CHECK(power(u, -2) == invert(concat(u, u)));
}

TEST_CASE("exponent sums cover the whole alphabet") {
  Alphabet a = type_b(5);
  Word u(a, {{1, 1}, {1, 1}, {3, -1}});
  auto sums = letter_exponent_sums(u);
  CHECK(sums.size() == 5);
  CHECK(sums[1] == 2);
  CHECK(sums[2] == 0);
  CHECK(sums[3] == -1);
  CHECK(sums[5] == 0);
}

TEST_CASE("builder cancels eagerly") {
  WordBuilder b(type_a(3));
  b.push(1, 1);
  b.push(2, 1);
  b.push(2, -1);
  b.push(1, -1);
  b.push(3, 1);
  Word w = b.take();
  CHECK(w == Word(type_a(3), {{3, 1}}));

  WordBuilder c(type_a(3));
  Word u(type_a(3), {{1, 1}, {2, 1}});
  c.append(u);
  c.append_inverse(u);
  CHECK(c.take().is_empty());
}

TEST_CASE("str round-trips through the parser") {
  Alphabet a = type_b(5);
  Word u(a, {{1, 1}, {2, -1}, {2, -1}, {5, 1}});
  CHECK(u.str() == "r1 r2^-2 r5");
  CHECK(parse_word(u.str(), a) == u);
  CHECK(Word::empty(a).str() == "");
}

TEST_CASE("parser: letters, exponents, uppercase inverses") {
  Alphabet a = type_a(4);
  CHECK(parse_word("s1 s2^-1", a) == Word(a, {{1, 1}, {2, -1}}));
  CHECK(parse_word("S3", a) == Word(a, {{3, -1}}));
  CHECK(parse_word("S3^2", a) == Word(a, {{3, -1}, {3, -1}}));
  CHECK(parse_word("s1^0", a).is_empty());
  CHECK(parse_word("  ", a).is_empty());
  CHECK(parse_word("s2^3", a) == Word(a, {{2, 1}, {2, 1}, {2, 1}}));
}

TEST_CASE("parser: rho shorthand in TypeB") {
  Alphabet b = type_b(4);
  CHECK(parse_word("rho", b) == parse_word("r1 r2 r3 r4", b));
  CHECK(parse_word("rho^-1", b) == parse_word("R4 R3 R2 R1", b));
  CHECK(parse_word("rho^2", b) == power(parse_word("rho", b), 2));
  CHECK_THROWS_AS(parse_word("rho", type_a(4)), InvalidInput);
}

TEST_CASE("parser: named elements adapt to the requested alphabet") {
  Alphabet b = type_b(5);
  CHECK(parse_word("@rhoB", b) == expand(NamedElement::RhoB, 5));
  CHECK(parse_word("@DeltaB", b) == expand(NamedElement::DeltaB, 5));
  CHECK(parse_word("@delta r5", b) ==
        concat(expand(NamedElement::SmallDelta, 5), Word(b, {{5, 1}})));
  // affine-native names are pushed through iota_tilde_A for TypeB.
  CHECK(parse_word("@DeltaY", b) ==
        iota_tilde_A(expand(NamedElement::DeltaY, 5)));
  CHECK(parse_word("@t0", b) == expand(NamedElement::T0, 5));
  // and all the way to TypeA if asked.
  CHECK(parse_word("@DeltaB", type_a(5)) ==
        iota_B(expand(NamedElement::DeltaB, 5)));
  // TypeA-native Delta cannot live in TypeB.
  CHECK_THROWS_AS(parse_word("@Delta", b), InvalidInput);
  CHECK(parse_word("@Delta", type_a(5)) == delta_word(5));
  Alphabet aff = type_affine_a(5);
  CHECK(parse_word("@v0", aff) == expand(NamedElement::V0, 5));
  CHECK(parse_word("@u1^-1", aff) == invert(expand(NamedElement::U1, 5)));
}

TEST_CASE("parser: errors") {
  Alphabet a = type_a(3);
  CHECK_THROWS_AS(parse_word("s4", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("r1", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("s1^", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("s1^x", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("@NoSuch", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("q1", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("s", a), InvalidInput);
  CHECK_THROWS_AS(parse_word("t0", type_b(4)), InvalidInput);
}

TEST_CASE("adapt_word pushes along the inclusion chain") {
  Alphabet aff = type_affine_a(5);
  Word t1(aff, {{1, 1}});
  CHECK(adapt_word(t1, type_b(5)) == Word(type_b(5), {{1, 1}}));
  CHECK(adapt_word(t1, type_a(5)) == Word(type_a(5), {{1, 1}}));
  Word rn(type_b(5), {{5, 1}});
  CHECK(adapt_word(rn, type_a(5)) == Word(type_a(5), {{5, 1}, {5, 1}}));
  CHECK(adapt_word(t1, aff) == t1);
  CHECK_THROWS_AS(adapt_word(Word(type_a(5), {{1, 1}}), type_b(5)),
                  InvalidInput);
}
