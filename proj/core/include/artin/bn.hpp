#pragma once

#include <optional>

#include "artin/garside.hpp"
#include "artin/words.hpp"

namespace artin {

/// The named elements of A[A_n], A[B_n] and A[affine-A_{n-1}].
enum class NamedElement {
  RhoB,             // r_1 ... r_n                        (TypeB)
  Delta,            // Garside element of A[A_n]          (TypeA)
  DeltaB,           // (r_1 ... r_n)^n = rhoB^n           (TypeB)
  DeltaY,           // Garside element on t_1..t_{n-1}    (TypeAffineA)
  Rho0,             // t_1 t_2 ... t_{n-1}                (TypeAffineA)
  Rho1,             // t_1^-1 t_2^-1 ... t_{n-1}^-1       (TypeAffineA)
  V0,               // rho_0 t_{n-1} rho_0^-1             (TypeAffineA)
  V1,               // rho_1 t_{n-1} rho_1^-1             (TypeAffineA)
  U0,               // t_0                                (TypeAffineA)
  U1,               // DeltaY^-1 t_0 DeltaY               (TypeAffineA)
  SmallDelta,       // r_{n-1}...r_2 r_1^2 r_2...r_{n-1}  (TypeB)
  SmallDeltaPrime,  // r_{n-2}...r_2 r_1^2 r_2...r_{n-2}  (TypeB)
  T0,               // rhoB r_{n-1} rhoB^-1               (TypeB)
};

/// The alphabet the tag's defining word lives in, at rank n.
Alphabet native_alphabet(NamedElement tag, int n);

/// The defining word of the tag at rank n.
Word expand(NamedElement tag, int n);

/// r_i -> s_i (i < n), r_n -> s_n^2.
Word iota_B(const Word &u);

/// t_i -> r_i (i >= 1), t_0 -> rhoB r_{n-1} rhoB^-1.
Word iota_tilde_A(const Word &u);

/// Equality in A[B_n] via pushforward to A[A_n].
bool bn_equal(const Word &u, const Word &v);

/// Equality in A[affine-A_{n-1}] via iota_B . iota_tilde_A.
bool affine_equal(const Word &u, const Word &v);

/// Does the TypeA word lie in the image of iota_B, i.e. does its strand
/// permutation fix the last puncture?
bool in_Bn(const Word &u);

/// Some(k) iff the TypeB word equals DeltaB^k.
std::optional<long long> bn_central_power(const Word &u);

/// An element of A[B_n] written as (affine part) * rhoB^shift.
struct SemidirectForm {
  Word affine_part;  // TypeAffineA word
  long long shift;
};

SemidirectForm semidirect_decompose(const Word &u);

/// Reassemble iota_tilde_A(affine_part) * rhoB^shift as a TypeB word.
Word semidirect_reassemble(const SemidirectForm &f, int n);

/// Garside word of the parabolic subgroup on r_1..r_k inside TypeB rank n
/// (the Delta_{X} words of the small-delta identity).
Word parabolic_delta_word(int n, int k);

}  // namespace artin
