#include <benchmark/benchmark.h>

#include <random>

#include "artin/bn.hpp"
#include "artin/endo.hpp"
#include "artin/garside.hpp"

namespace {

artin::Word random_word(int rank, int length, std::mt19937 &rng) {
  artin::WordBuilder b(artin::type_a(rank));
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < length; ++i) b.push(idx(rng), sign(rng) ? 1 : -1);
  return b.take();
}

void BM_NormalForm(benchmark::State &state) {
  int rank = static_cast<int>(state.range(0));
  int length = static_cast<int>(state.range(1));
  std::mt19937 rng(7);
  std::vector<artin::Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rank, length, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(artin::normal_form(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_NormalForm)
    ->Args({4, 16})
    ->Args({4, 64})
    ->Args({7, 64})
    ->Args({7, 256});

void BM_HandleTrivialConjugate(benchmark::State &state) {
  int rank = static_cast<int>(state.range(0));
  int length = static_cast<int>(state.range(1));
  std::mt19937 rng(7);
  std::vector<artin::Word> words;
  for (int i = 0; i < 64; ++i) {
    artin::Word w = random_word(rank, length, rng);
    words.push_back(artin::concat(w, artin::invert(w)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(artin::handle_trivial(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_HandleTrivialConjugate)->Args({4, 16})->Args({7, 32});

void BM_BnEqualRelation(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  artin::Word d = artin::expand(artin::NamedElement::SmallDelta, n);
  artin::Word dp = artin::expand(artin::NamedElement::SmallDeltaPrime, n);
  artin::Word lhs = artin::concat(d, dp);
  artin::Word rhs = artin::concat(dp, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(artin::bn_equal(lhs, rhs));
  }
}
BENCHMARK(BM_BnEqualRelation)->Arg(5)->Arg(8);

void BM_VerifyType3(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  artin::EndoSpec spec = artin::EndoSpec::type3(n, 1, 0, 1, -1, 2, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(artin::verify_homomorphism(spec));
  }
}
BENCHMARK(BM_VerifyType3)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
