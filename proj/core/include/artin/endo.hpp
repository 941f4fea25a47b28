#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "artin/bn.hpp"
#include "artin/words.hpp"

namespace artin {

enum class Tristate { No, Yes, Unsupported };

/// Symbolic endomorphism of A[B_n]: one of the classified families (with
/// exact integer parameters), a named automorphism, an inner automorphism,
/// a composition, or raw generator images.
struct EndoSpec {
  enum class Kind {
    Type1,     // t_i -> g (all i), rhoB -> h, gh = hg
    Type2a,    // t_i -> t_i^eps DeltaB^p, rhoB -> rhoB DeltaB^q
    Type2b,    // t_i -> t_{n-i}^eps DeltaB^p, rhoB -> rhoB^-1 DeltaB^q
    Type3,     // t_i -> t_i^eps DY^2p DB^q, t_0 -> v_k^..., rhoB -> rho_k DY^2r DB^s
    StdI,      // r_i -> g (i<n), r_n -> h, gh = hg
    StdIIa,    // r_i -> r_i^eps DB^p, r_n -> r_n^eps DB^q
    StdIIb,    // r_i -> r_i^eps DB^p, r_n -> delta^-eps r_n^-eps DB^q
    StdIIIa,   // r_i -> r_i^eps DY^2p DB^q, r_n -> DY^2r DB^s
    StdIIIb,   // r_i -> r_i^eps DY^2p DB^q, r_n -> delta^-eps DY^2r DB^s
    NamedT,    // transvection power T^m
    NamedTau,  // t_i -> t_{n-i}^-1, rhoB -> rhoB^-1
    NamedMu,   // t_i -> t_i^-1, rhoB -> rhoB
    Inner,     // conj_x
    Compose,   // outer after inner
    Raw,       // explicit images of r_1..r_n
  };

  Kind kind{Kind::Raw};
  int n{5};
  int eps{1};
  int k{0};
  long long p{0}, q{0}, r{0}, s{0};
  long long t_power{1};             // NamedT exponent m
  std::optional<Word> g, h;         // Type1 / StdI
  std::optional<Word> x;            // Inner conjugator
  std::vector<Word> images;         // Raw: images of r_1..r_n
  std::shared_ptr<const EndoSpec> outer, inner;  // Compose

  static EndoSpec type1(int n, Word g, Word h);
  static EndoSpec type2a(int n, int eps, long long p, long long q);
  static EndoSpec type2b(int n, int eps, long long p, long long q);
  static EndoSpec type3(int n, int eps, int k, long long p, long long q,
                        long long r, long long s);
  static EndoSpec std_i(int n, Word g, Word h);
  static EndoSpec std_iia(int n, int eps, long long p, long long q);
  static EndoSpec std_iib(int n, int eps, long long p, long long q);
  static EndoSpec std_iiia(int n, int eps, long long p, long long q,
                           long long r, long long s);
  static EndoSpec std_iiib(int n, int eps, long long p, long long q,
                           long long r, long long s);
  static EndoSpec transvection(int n, long long m = 1);
  static EndoSpec tau(int n);
  static EndoSpec mu(int n);
  static EndoSpec conj(int n, Word x);
  static EndoSpec compose(EndoSpec outer, EndoSpec inner);
  static EndoSpec raw(int n, std::vector<Word> images);

  static EndoSpec identity(int n) { return type2a(n, 1, 0, 0); }

  bool is_classified() const { return kind != Kind::Raw; }
};

std::string to_string(EndoSpec::Kind k);

/// Image of r_i (1 <= i <= n) as a TypeB word.
Word image_of_r(const EndoSpec &spec, int i);

/// Image of t_i (0 <= i <= n-1), expanded into r-generators.
Word image_of_t(const EndoSpec &spec, int i);

/// Image of rhoB.
Word image_of_rho(const EndoSpec &spec);

/// Letterwise substitution by image_of_r; a homomorphism on group elements.
Word apply(const EndoSpec &spec, const Word &u);

/// Do the generator images satisfy all defining relations of A[B_n]?
bool verify_homomorphism(const EndoSpec &spec);

/// A spec in standard-generator form together with a conjugator c such
/// that the original map is conj_c composed with the standard one
/// (c is empty except when converting Type2b).
struct StdForm {
  EndoSpec spec;
  Word conjugator;
};

/// Convert a (t, rhoB)-family spec to its Std variant with exactly mapped
/// parameters. Std variants pass through unchanged.
StdForm to_standard_form(const EndoSpec &spec);

Tristate is_injective(const EndoSpec &spec);
Tristate is_surjective(const EndoSpec &spec);

/// Endomorphism of the central quotient A[B_n]/<DeltaB>; words are
/// representatives, equality is modulo central powers.
struct BarEndoSpec {
  enum class Kind {
    BarType1,   // tbar_i -> gbar (all i), rhobar -> rhobar^kappa
    BarType2a,  // tbar_i -> tbar_i^eps, rhobar -> rhobar
    BarType2b,  // tbar_i -> tbar_{n-i}^eps, rhobar -> rhobar^-1
    BarRaw,     // representative images of rbar_1..rbar_n
  };

  Kind kind{Kind::BarRaw};
  int n{5};
  int eps{1};
  int kappa{0};
  std::optional<Word> gbar;
  std::vector<Word> images;

  static BarEndoSpec bar_type1(int n, int kappa, Word gbar);
  static BarEndoSpec bar_type2a(int n, int eps);
  static BarEndoSpec bar_type2b(int n, int eps);
  static BarEndoSpec bar_raw(int n, std::vector<Word> images);
};

/// Representative image of rbar_i (1 <= i <= n) as a TypeB word.
Word bar_image_of_r(const BarEndoSpec &spec, int i);

/// Correct central discrepancies in bar generator images to obtain a
/// genuine endomorphism of A[B_n] projecting to the given one.
EndoSpec lift(const BarEndoSpec &bar);

}  // namespace artin
