#pragma once

#include <optional>
#include <vector>

#include "artin/permutation.hpp"
#include "artin/words.hpp"

namespace artin {

/// Garside left-weighted normal form of a braid in A[A_m] (braid group on
/// m+1 strands): Delta^inf * factor_1 * ... * factor_k with every factor a
/// proper simple element and every consecutive pair left-weighted.
struct BraidNF {
  int rank{0};
  long long inf{0};
  std::vector<Permutation> factors;

  bool operator==(const BraidNF &) const = default;

  std::size_t canonical_length() const { return factors.size(); }
  bool is_trivial() const { return inf == 0 && factors.empty(); }
};

/// The defining word of Delta: (s_1..s_m)(s_1..s_{m-1})...(s_1 s_2) s_1.
Word delta_word(int rank);

BraidNF normal_form(const Word &u);

/// A word representing the same element: |inf| copies of the Delta word
/// (inverted if inf < 0) followed by the positive factor words.
Word nf_to_word(const BraidNF &nf);

bool braid_equal(const Word &u, const Word &v);

/// Image under A[A_m] -> Sym(m+1), s_i -> (i, i+1).
Permutation underlying_permutation(const Word &u);

/// Some(k) iff u = Delta^k.
std::optional<long long> delta_power(const Word &u);

/// Signalled when handle reduction exhausts its step budget; the oracle is
/// inconclusive, never wrong.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultHandleBudget = 1'000'000;

/// Dehornoy handle reduction: true iff u represents the identity braid.
/// Independent of the Garside machinery.
bool handle_trivial(const Word &u, std::size_t budget = kDefaultHandleBudget);

/// Structural validity check (factor properness + left-weightedness),
/// used by tests.
bool is_left_weighted_nf(const BraidNF &nf);

}  // namespace artin
