#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

/// Error for malformed input (bad alphabet, bad index, parse failure).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { TypeA, TypeB, TypeAffineA };

std::string to_string(Family f);

/// Generator alphabet of one of the three Artin groups.
/// TypeA/TypeB generators are indexed 1..rank, TypeAffineA 0..rank-1.
struct Alphabet {
  Family family{Family::TypeA};
  int rank{2};

  Alphabet() = default;
  Alphabet(Family f, int n) : family(f), rank(n) {
    int min_rank = (f == Family::TypeAffineA) ? 3 : 2;
    if (n < min_rank)
      throw InvalidInput("rank " + std::to_string(n) + " too small for " +
                         to_string(f));
  }

  int min_index() const { return family == Family::TypeAffineA ? 0 : 1; }
  int max_index() const {
    return family == Family::TypeAffineA ? rank - 1 : rank;
  }
  bool valid_index(int i) const {
    return i >= min_index() && i <= max_index();
  }

  bool operator==(const Alphabet &) const = default;
};

inline Alphabet type_a(int n) { return Alphabet(Family::TypeA, n); }
inline Alphabet type_b(int n) { return Alphabet(Family::TypeB, n); }
inline Alphabet type_affine_a(int n) { return Alphabet(Family::TypeAffineA, n); }

/// One signed generator occurrence.
struct Letter {
  int index{1};
  int sign{1};  // +1 or -1

  Letter inverse() const { return {index, -sign}; }
  bool operator==(const Letter &) const = default;
};

/// Freely reduced word over a fixed alphabet. Immutable value; all
/// operations return new words. No group relations are applied here.
class Word {
public:
  explicit Word(Alphabet a) : alphabet_(a) {}
  Word(Alphabet a, std::vector<Letter> letters);

  static Word empty(Alphabet a) { return Word(a); }

  const Alphabet &alphabet() const { return alphabet_; }
  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }

  bool operator==(const Word &) const = default;

  std::string str() const;

private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word concat(const Word &u, const Word &v);
Word invert(const Word &u);

/// x u x^-1, freely reduced; no relation is applied at word level.
Word conjugate(const Word &x, const Word &u);

Word power(const Word &u, long long k);

/// Signed count of each generator index, with an entry for every valid
/// index of the alphabet (zeros included).
std::map<int, long long> letter_exponent_sums(const Word &u);

/// Builder used by the higher modules; letters are cancelled eagerly.
class WordBuilder {
public:
  explicit WordBuilder(Alphabet a) : alphabet_(a) {}

  void push(Letter l);
  void push(int index, int sign) { push(Letter{index, sign}); }
  void append(const Word &w) {
    for (const Letter &l : w.letters()) push(l);
  }
  void append_inverse(const Word &w) {
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
      push(it->inverse());
  }

  Word take();

private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

}  // namespace artin
