#include "artin/words.hpp"

#include <cstdlib>
#include <sstream>

namespace artin {

std::string to_string(Family f) {
  switch (f) {
    case Family::TypeA: return "A";
    case Family::TypeB: return "B";
    case Family::TypeAffineA: return "affine-A";
  }
  return "?";
}

void WordBuilder::push(Letter l) {
  if (!alphabet_.valid_index(l.index))
    throw InvalidInput("generator index " + std::to_string(l.index) +
                       " out of range for alphabet");
  if (l.sign != 1 && l.sign != -1)
    throw InvalidInput("letter sign must be +1 or -1");
  if (!letters_.empty() && letters_.back().index == l.index &&
      letters_.back().sign == -l.sign) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word WordBuilder::take() { return Word(alphabet_, std::move(letters_)); }

Word::Word(Alphabet a, std::vector<Letter> letters) : alphabet_(a) {
  letters_.reserve(letters.size());
  for (const Letter &l : letters) {
    if (!alphabet_.valid_index(l.index))
      throw InvalidInput("generator index " + std::to_string(l.index) +
                         " out of range for alphabet");
    if (l.sign != 1 && l.sign != -1)
      throw InvalidInput("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().index == l.index &&
        letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

std::string Word::str() const {
  char base;
  switch (alphabet_.family) {
    case Family::TypeA: base = 's'; break;
    case Family::TypeB: base = 'r'; break;
    case Family::TypeAffineA: base = 't'; break;
    default: base = '?';
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long exp = static_cast<long long>(j - i) * letters_[i].sign;
    if (i) os << ' ';
    os << base << letters_[i].index;
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

Word concat(const Word &u, const Word &v) {
  if (u.alphabet() != v.alphabet())
    throw InvalidInput("concat: alphabet mismatch");
  WordBuilder b(u.alphabet());
  b.append(u);
  b.append(v);
  return b.take();
}

Word invert(const Word &u) {
  WordBuilder b(u.alphabet());
  b.append_inverse(u);
  return b.take();
}

Word conjugate(const Word &x, const Word &u) {
  if (x.alphabet() != u.alphabet())
    throw InvalidInput("conjugate: alphabet mismatch");
  WordBuilder b(x.alphabet());
  b.append(x);
  b.append(u);
  b.append_inverse(x);
  return b.take();
}

Word power(const Word &u, long long k) {
  WordBuilder b(u.alphabet());
  long long reps = std::llabs(k);
  for (long long i = 0; i < reps; ++i) {
    if (k >= 0)
      b.append(u);
    else
      b.append_inverse(u);
  }
  return b.take();
}

std::map<int, long long> letter_exponent_sums(const Word &u) {
  std::map<int, long long> sums;
  for (int i = u.alphabet().min_index(); i <= u.alphabet().max_index(); ++i)
    sums[i] = 0;
  for (const Letter &l : u.letters()) sums[l.index] += l.sign;
  return sums;
}

}  // namespace artin
