#include "artin/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

Permutation Permutation::identity(int points) {
  std::vector<int> img(points);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::reversal(int points) {
  std::vector<int> img(points);
  for (int x = 1; x <= points; ++x) img[x - 1] = points + 1 - x;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int points, int i) {
  Permutation p = identity(points);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
      throw InvalidInput("permutation images are not a bijection");
    seen[x - 1] = true;
  }
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= points(); ++x)
    if (img_[x - 1] != x) return false;
  return true;
}

bool Permutation::is_reversal() const {
  for (int x = 1; x <= points(); ++x)
    if (img_[x - 1] != points() + 1 - x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int x = 1; x <= points(); ++x) img[img_[x - 1] - 1] = x;
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation &other) const {
  std::vector<int> img(img_.size());
  for (int x = 1; x <= points(); ++x) img[x - 1] = other.img_[img_[x - 1] - 1];
  return Permutation(std::move(img));
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < points(); ++i)
    if (img_[i - 1] > img_[i]) d.push_back(i);
  return d;
}

Permutation simple_meet(const Permutation &u, const Permutation &v) {
  // Peel common atoms: s_i divides both iff i is a common descent, and
  // the meet equals s_i * meet(s_i^-1 u, s_i^-1 v).
  Permutation a = u, b = v;
  int m = u.points() - 1;
  Permutation w = Permutation::identity(u.points());
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= m; ++i) {
      if (a.has_descent(i) && b.has_descent(i)) {
        Permutation t = Permutation::transposition(u.points(), i);
        a = t.then(a);
        b = t.then(b);
        w = w.then(t);
        progress = true;
      }
    }
  }
  return w;
}

Permutation delta_conjugate(const Permutation &p) {
  Permutation w0 = Permutation::reversal(p.points());
  return w0.then(p).then(w0);
}

bool left_weighted(const Permutation &a, const Permutation &b) {
  // Starting set of b must be contained in the finishing set of a:
  // descents of b within descents of a^-1.
  Permutation ainv = a.inverse();
  for (int i = 1; i < a.points(); ++i)
    if (b.has_descent(i) && !ainv.has_descent(i)) return false;
  return true;
}

Word simple_to_word(const Permutation &p, const Alphabet &a) {
  Permutation rest = p;
  WordBuilder b(a);
  while (!rest.is_identity()) {
    int i = 1;
    while (!rest.has_descent(i)) ++i;
    b.push(i, 1);
    rest = Permutation::transposition(p.points(), i).then(rest);
  }
  return b.take();
}

}  // namespace artin
