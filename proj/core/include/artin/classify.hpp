#pragma once

#include <utility>
#include <vector>

#include "artin/endo.hpp"
#include "artin/words.hpp"

namespace artin {

/// Abelianization invariant of A[B_n] with values in Z^2:
/// r_i -> (1,0) for i < n, r_n -> (-(n-1), 1); equivalently t_i -> (1,0)
/// and rhoB -> (0,1).
std::pair<long long, long long> eta(const Word &u);

/// Invariant with values in Z: r_i -> 1 for i < n, r_n -> 2-n
/// (t_i -> 1, rhoB -> 1).
long long xi(const Word &u);

/// Total letter sign sum: r_i -> 1 for all i.
long long z_hom(const Word &u);

/// Equality in the central quotient A[B_n]/<DeltaB>.
bool bar_equal(const Word &u, const Word &v);

/// Invariant-level classification of raw generator images, unique per
/// conjugacy class of genuine endomorphisms.
struct ClassificationResult {
  enum class Verdict {
    Type1Compatible,
    Type2a,
    Type2b,
    Type3,
    NotAHomomorphism,
    Inconclusive,
  };

  Verdict verdict{Verdict::Inconclusive};
  int eps{1};
  int k{0};
  long long p{0}, q{0}, r{0}, s{0};

  /// Set when the images passed verify_homomorphism. An Inconclusive
  /// verdict with this flag raised contradicts the classification theorem
  /// and should be surfaced loudly.
  bool hom_verified{false};
};

std::string to_string(ClassificationResult::Verdict v);

ClassificationResult classify_raw(const EndoSpec &spec);

/// Classification in the central quotient.
struct BarClassification {
  enum class Verdict {
    BarType1,
    BarType2a,
    BarType2b,
    NotAHomomorphism,
    Inconclusive,
  };

  Verdict verdict{Verdict::Inconclusive};
  int kappa{0};
  int eps{1};
  bool hom_verified{false};
};

std::string to_string(BarClassification::Verdict v);

BarClassification classify_bar(const BarEndoSpec &spec);

/// Generators of the centralizer of rhobar^kappa in the central quotient,
/// as TypeB representative words.
std::vector<Word> centralizer_generators(int n, int kappa);

}  // namespace artin
