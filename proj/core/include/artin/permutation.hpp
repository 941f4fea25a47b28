#pragma once

#include <cstdint>
#include <vector>

#include "artin/words.hpp"

namespace artin {

/// Permutation of the points 1..m+1 (m = rank of a TypeA alphabet),
/// mapping the top position of a strand to its bottom position.
/// Composition is left-to-right: (a * b)(x) = b(a(x)), so that the
/// strand-permutation map on braid words is a homomorphism.
class Permutation {
public:
  Permutation() = default;

  /// Identity on 1..points.
  static Permutation identity(int points);

  /// The full reversal w0 (the permutation of the Garside element).
  static Permutation reversal(int points);

  /// Transposition (i, i+1), the image of generator s_i.
  static Permutation transposition(int points, int i);

  explicit Permutation(std::vector<int> images);

  int points() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int> &images() const { return img_; }

  bool is_identity() const;
  bool is_reversal() const;

  Permutation inverse() const;

  /// Left-to-right composition: apply *this first, then other.
  Permutation then(const Permutation &other) const;

  /// Descent set {i : p(i) > p(i+1)}; for a permutation braid this is the
  /// set of generators dividing it on the left (its starting set).
  std::vector<int> descents() const;
  bool has_descent(int i) const { return img_[i - 1] > img_[i]; }

  bool operator==(const Permutation &) const = default;

private:
  std::vector<int> img_;  // img_[x-1] = image of point x
};

inline Permutation operator*(const Permutation &a, const Permutation &b) {
  return a.then(b);
}

/// Greatest common left divisor of two permutation braids (meet in the
/// prefix order / weak order lattice).
Permutation simple_meet(const Permutation &u, const Permutation &v);

/// Conjugate by Delta: w0 * p * w0.
Permutation delta_conjugate(const Permutation &p);

/// Is the pair (a, b) left-weighted, i.e. does the starting set of b lie
/// inside the finishing set of a?
bool left_weighted(const Permutation &a, const Permutation &b);

/// Positive word for a permutation braid: smallest-descent-first
/// decomposition into generators of the given TypeA alphabet.
Word simple_to_word(const Permutation &p, const Alphabet &a);

}  // namespace artin
