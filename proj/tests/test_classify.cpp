#include <doctest.h>

#include <random>

#include "artin/classify.hpp"
#include "artin/json_io.hpp"
#include "artin/parse.hpp"

using namespace artin;

namespace {

const int N = 5;
const Alphabet B = type_b(N);

Word W(const std::string &s) { return parse_word(s, B); }

Word random_b_word(int length, std::mt19937 &rng) {
  WordBuilder b(B);
  std::uniform_int_distribution<int> idx(1, N);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < length; ++i) b.push(idx(rng), sign(rng) ? 1 : -1);
  return b.take();
}

EndoSpec as_raw(const EndoSpec &spec) {
  std::vector<Word> imgs;
  for (int i = 1; i <= spec.n; ++i) imgs.push_back(image_of_r(spec, i));
  return EndoSpec::raw(spec.n, imgs);
}

}  // namespace

TEST_CASE("eta, xi, z on named elements") {
  CHECK(eta(W("r2")) == std::pair<long long, long long>{1, 0});
  CHECK(eta(W("r5")) == std::pair<long long, long long>{-(N - 1), 1});
  CHECK(eta(W("rho")) == std::pair<long long, long long>{0, 1});
  CHECK(eta(W("@DeltaB")) == std::pair<long long, long long>{0, N});
  CHECK(eta(power(W("@DeltaY"), 2)) ==
        std::pair<long long, long long>{N * (N - 1), 0});
  CHECK(eta(W("@t0")) == std::pair<long long, long long>{1, 0});

  CHECK(xi(W("r2")) == 1);
  CHECK(xi(W("r5")) == 2 - N);
  CHECK(xi(W("rho")) == 1);
  CHECK(xi(W("@DeltaB")) == N);
  CHECK(xi(W("@t0")) == 1);

  CHECK(z_hom(W("r5")) == 1);
  CHECK(z_hom(W("@DeltaB")) == N * N);
  CHECK(z_hom(W("@delta")) == 2 * (N - 1));
  CHECK(z_hom(W("r1 R3")) == 0);
}

TEST_CASE("eta is additive and conjugation invariant") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Word u = random_b_word(16, rng);
    Word v = random_b_word(16, rng);
    auto [a1, b1] = eta(u);
    auto [a2, b2] = eta(v);
    CHECK(eta(concat(u, v)) == std::pair{a1 + a2, b1 + b2});
    CHECK(eta(conjugate(v, u)) == eta(u));
    CHECK(xi(concat(u, v)) == xi(u) + xi(v));
    CHECK(z_hom(invert(u)) == -z_hom(u));
  }
}

TEST_CASE("bar_equal quotients out DeltaB") {
  CHECK(bar_equal(W("r1"), W("r1 @DeltaB")));
  CHECK(bar_equal(W("@DeltaB"), Word::empty(B)));
  CHECK(bar_equal(power(W("@DeltaB"), -2), Word::empty(B)));
  CHECK(!bar_equal(W("r1"), W("r2")));
  CHECK(!bar_equal(W("rho"), Word::empty(B)));
  // The quotient's center is trivial: rho^n = DeltaB maps to a nontrivial
  // relation, but rho itself stays noncentral.
  CHECK(!bar_equal(concat(W("rho"), W("r1")), concat(W("r1"), W("rho"))));
  CHECK(bar_equal(power(W("rho"), N), Word::empty(B)));
}

TEST_CASE("classify_raw recovers family parameters") {
  auto check_roundtrip = [](const EndoSpec &spec,
                            ClassificationResult::Verdict verdict) {
    ClassificationResult res = classify_raw(as_raw(spec));
    REQUIRE(res.verdict == verdict);
    CHECK(res.eps == spec.eps);
    if (verdict == ClassificationResult::Verdict::Type3) CHECK(res.k == spec.k);
    CHECK(res.p == spec.p);
    CHECK(res.q == spec.q);
    if (verdict == ClassificationResult::Verdict::Type3) {
      CHECK(res.r == spec.r);
      CHECK(res.s == spec.s);
    }
  };

  check_roundtrip(EndoSpec::identity(N), ClassificationResult::Verdict::Type2a);
  check_roundtrip(EndoSpec::type2a(N, -1, 0, 0),
                  ClassificationResult::Verdict::Type2a);
  check_roundtrip(EndoSpec::type2a(N, 1, 2, 0),
                  ClassificationResult::Verdict::Type2a);
  check_roundtrip(EndoSpec::type2b(N, 1, 1, -1),
                  ClassificationResult::Verdict::Type2b);
  check_roundtrip(EndoSpec::type2b(N, -1, 0, 0),
                  ClassificationResult::Verdict::Type2b);
  check_roundtrip(EndoSpec::type3(N, 1, 0, 1, 0, 0, 1),
                  ClassificationResult::Verdict::Type3);
  check_roundtrip(EndoSpec::type3(N, -1, 1, 0, 1, -1, 0),
                  ClassificationResult::Verdict::Type3);
}

TEST_CASE("classify_raw is conjugation invariant") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Word c = random_b_word(8, rng);
    EndoSpec conjd = EndoSpec::compose(
        EndoSpec::conj(N, c), EndoSpec::type3(N, 1, 1, 1, 0, 0, 1));
    ClassificationResult res = classify_raw(as_raw(conjd));
    CHECK(res.verdict == ClassificationResult::Verdict::Type3);
    CHECK(res.k == 1);
    CHECK(res.p == 1);
    CHECK(res.s == 1);
  }
}

TEST_CASE("classify_raw edge verdicts") {
  // Constant commuting images.
  std::vector<Word> imgs(N, W("rho"));
  ClassificationResult res = classify_raw(EndoSpec::raw(N, imgs));
  CHECK(res.verdict == ClassificationResult::Verdict::Type1Compatible);

  // Broken relation.
  std::vector<Word> bad;
  for (int i = 1; i <= N; ++i) bad.push_back(Word(B, {{i, 1}}));
  std::swap(bad[0], bad[2]);
  res = classify_raw(EndoSpec::raw(N, bad));
  CHECK(res.verdict == ClassificationResult::Verdict::NotAHomomorphism);

  // Named specs classify too.
  res = classify_raw(EndoSpec::mu(N));
  CHECK(res.verdict == ClassificationResult::Verdict::Type2a);
  CHECK(res.eps == -1);
  CHECK(res.p == 0);
  CHECK(res.q == 0);
  res = classify_raw(EndoSpec::tau(N));
  CHECK(res.verdict == ClassificationResult::Verdict::Type2b);
  res = classify_raw(EndoSpec::transvection(N, 2));
  CHECK(res.verdict == ClassificationResult::Verdict::Type2a);
  CHECK(res.p == 2);
  CHECK(res.q == 0);
}

TEST_CASE("classify_bar") {
  // tau in the quotient.
  std::vector<Word> tau_imgs;
  for (int i = 1; i <= N; ++i)
    tau_imgs.push_back(image_of_r(EndoSpec::tau(N), i));
  BarClassification res = classify_bar(BarEndoSpec::bar_raw(N, tau_imgs));
  CHECK(res.verdict == BarClassification::Verdict::BarType2b);
  CHECK(res.eps == -1);

  // Identity with central noise.
  std::vector<Word> id_imgs;
  for (int i = 1; i <= N; ++i) id_imgs.push_back(Word(B, {{i, 1}}));
  id_imgs[1] = concat(id_imgs[1], W("@DeltaB"));
  res = classify_bar(BarEndoSpec::bar_raw(N, id_imgs));
  CHECK(res.verdict == BarClassification::Verdict::BarType2a);
  CHECK(res.eps == 1);

  // tbar_i -> rhobar^3 collapses to BarType1 with kappa = 3.
  std::vector<Word> ab_imgs;
  Word rho3 = power(W("rho"), 3);
  for (int i = 1; i < N; ++i) ab_imgs.push_back(rho3);
  // rbar_n = tbar_{n-1}^-1 ... tbar_1^-1 rhobar^kappa image.
  ab_imgs.push_back(concat(power(invert(rho3), N - 1), rho3));
  res = classify_bar(BarEndoSpec::bar_raw(N, ab_imgs));
  CHECK(res.verdict == BarClassification::Verdict::BarType1);
  CHECK(res.kappa == 3);

  // Broken relation mod center.
  std::vector<Word> bad = id_imgs;
  std::swap(bad[0], bad[2]);
  res = classify_bar(BarEndoSpec::bar_raw(N, bad));
  CHECK(res.verdict == BarClassification::Verdict::NotAHomomorphism);
}

TEST_CASE("centralizer generators") {
  Alphabet aff = type_affine_a(5);

  // gcd(5,2) = 1: the centralizer is generated by rhobar alone.
  auto gens = centralizer_generators(5, 2);
  REQUIRE(gens.size() == 1);
  CHECK(bn_equal(gens[0], W("rho")));

  // kappa = 0 centralizes everything: rhobar and tbar_0 generate.
  gens = centralizer_generators(5, 0);
  REQUIRE(gens.size() == 2);
  CHECK(bn_equal(gens[0], W("rho")));
  CHECK(bn_equal(gens[1], iota_tilde_A(parse_word("t0", aff))));

  // n = 6, kappa = 2: d = 2, second generator t_2 t_4 t_0.
  gens = centralizer_generators(6, 2);
  REQUIRE(gens.size() == 2);
  Alphabet aff6 = type_affine_a(6);
  CHECK(gens[1] == iota_tilde_A(parse_word("t2 t4 t0", aff6)));

  // Every generator commutes with rhobar^kappa in the quotient.
  for (int kappa = 0; kappa < 5; ++kappa) {
    Word target = power(W("rho"), kappa);
    for (const Word &g : centralizer_generators(5, kappa)) {
      CHECK(bar_equal(concat(g, target), concat(target, g)));
    }
  }
}

TEST_CASE("classification JSON") {
  ClassificationResult res = classify_raw(as_raw(EndoSpec::type2a(N, -1, 1, 2)));
  nlohmann::json j = classification_to_json(res);
  CHECK(j["verdict"] == "Type2a");
  CHECK(j["eps"] == -1);
  CHECK(j["p"] == 1);
  CHECK(j["q"] == 2);

  BarClassification bres =
      classify_bar(BarEndoSpec::bar_raw(N, {W("rho"), W("rho"), W("rho"),
                                            W("rho"),
                                            concat(power(W("rho^-1"), 4),
                                                   W("rho"))}));
  nlohmann::json bj = bar_classification_to_json(bres);
  CHECK(bj["verdict"] == "BarType1");
  CHECK(bj["kappa"] == 1);
}

TEST_CASE("NF JSON round trip") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    WordBuilder b(type_a(4));
    std::uniform_int_distribution<int> idx(1, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < 24; ++i) b.push(idx(rng), sign(rng) ? 1 : -1);
    BraidNF nf = normal_form(b.take());
    CHECK(nf_from_json(nf_to_json(nf)) == nf);
  }
}
