#include "artin/garside.hpp"

#include <algorithm>
#include <cstdlib>

namespace artin {

namespace {

void require_type_a(const Word &u, const char *op) {
  if (u.alphabet().family != Family::TypeA)
    throw InvalidInput(std::string(op) + ": word must be over a TypeA alphabet");
}

/// Accumulator for the left-weighted form, multiplied on the right one
/// simple element at a time.
class NFAccum {
public:
  explicit NFAccum(int rank)
      : rank_(rank), w0_(Permutation::reversal(rank + 1)) {}

  void push_positive(int i) {
    rmult_simple(Permutation::transposition(rank_ + 1, i));
  }

  void push_negative(int i) {
    // u * s_i^-1 = Delta^(inf-1) * flip(F) * (Delta s_i^-1)
    --inf_;
    flip_all();
    rmult_simple(w0_.then(Permutation::transposition(rank_ + 1, i)));
  }

  BraidNF take() {
    normalize();
    return BraidNF{rank_, inf_, std::move(factors_)};
  }

private:
  void flip_all() {
    for (Permutation &f : factors_) f = delta_conjugate(f);
  }

  void rmult_simple(const Permutation &x) {
    if (x.is_identity()) return;
    if (x.is_reversal()) {  // F * Delta = Delta * flip(F)
      ++inf_;
      flip_all();
      return;
    }
    factors_.push_back(x);
    for (std::size_t j = factors_.size() - 1; j-- > 0;)
      if (!rebalance(j)) break;
    normalize();
  }

  // Local sliding: move the largest left-divisible part of factors_[j+1]
  // into factors_[j]. Returns true if anything moved.
  bool rebalance(std::size_t j) {
    Permutation &a = factors_[j];
    Permutation &b = factors_[j + 1];
    if (left_weighted(a, b)) return false;
    Permutation x = simple_meet(a.inverse().then(w0_), b);
    a = a.then(x);
    b = x.inverse().then(b);
    return true;
  }

  void normalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j < factors_.size();) {
        if (factors_[j].is_identity()) {
          factors_.erase(factors_.begin() + static_cast<long>(j));
          changed = true;
        } else if (factors_[j].is_reversal()) {
          // L * Delta * R = Delta * flip(L) * R
          ++inf_;
          for (std::size_t i = 0; i < j; ++i)
            factors_[i] = delta_conjugate(factors_[i]);
          factors_.erase(factors_.begin() + static_cast<long>(j));
          changed = true;
        } else {
          ++j;
        }
      }
      for (std::size_t j = 0; j + 1 < factors_.size(); ++j)
        if (rebalance(j)) changed = true;
    }
  }

  int rank_;
  Permutation w0_;
  long long inf_ = 0;
  std::vector<Permutation> factors_;
};

}  // namespace

Word delta_word(int rank) {
  Alphabet a = type_a(rank);
  WordBuilder b(a);
  for (int k = rank; k >= 1; --k)
    for (int i = 1; i <= k; ++i) b.push(i, 1);
  return b.take();
}

BraidNF normal_form(const Word &u) {
  require_type_a(u, "normal_form");
  NFAccum acc(u.alphabet().rank);
  for (const Letter &l : u.letters()) {
    if (l.sign > 0)
      acc.push_positive(l.index);
    else
      acc.push_negative(l.index);
  }
  return acc.take();
}

Word nf_to_word(const BraidNF &nf) {
  Alphabet a = type_a(nf.rank);
  Word d = delta_word(nf.rank);
  WordBuilder b(a);
  for (long long i = 0; i < std::llabs(nf.inf); ++i) {
    if (nf.inf > 0)
      b.append(d);
    else
      b.append_inverse(d);
  }
  for (const Permutation &f : nf.factors) b.append(simple_to_word(f, a));
  return b.take();
}

bool braid_equal(const Word &u, const Word &v) {
  if (u.alphabet() != v.alphabet())
    throw InvalidInput("braid_equal: alphabet mismatch");
  require_type_a(u, "braid_equal");
  // Cheap invariants first: total exponent sum and strand permutation are
  // preserved by the braid relations.
  long long su = 0, sv = 0;
  for (const Letter &l : u.letters()) su += l.sign;
  for (const Letter &l : v.letters()) sv += l.sign;
  if (su != sv) return false;
  if (underlying_permutation(u) != underlying_permutation(v)) return false;
  return normal_form(u) == normal_form(v);
}

Permutation underlying_permutation(const Word &u) {
  require_type_a(u, "underlying_permutation");
  int pts = u.alphabet().rank + 1;
  Permutation p = Permutation::identity(pts);
  for (const Letter &l : u.letters())
    p = p.then(Permutation::transposition(pts, l.index));
  return p;
}

std::optional<long long> delta_power(const Word &u) {
  BraidNF nf = normal_form(u);
  if (!nf.factors.empty()) return std::nullopt;
  return nf.inf;
}

bool is_left_weighted_nf(const BraidNF &nf) {
  for (const Permutation &f : nf.factors)
    if (f.is_identity() || f.is_reversal()) return false;
  for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j)
    if (!left_weighted(nf.factors[j], nf.factors[j + 1])) return false;
  return true;
}

namespace {

// Freely reduce a raw letter sequence in place (stack discipline).
void free_reduce(std::vector<Letter> &w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter &l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

// A sigma_i-handle is a subword sigma_i^e v sigma_i^-e whose interior v
// contains no letter of index i or i-1. Returns the minimal-width (hence
// innermost, hence permitted) handle as [begin, end] positions, if any.
struct Handle {
  std::size_t begin, end;
};

std::optional<Handle> find_handle(const std::vector<Letter> &w) {
  std::optional<Handle> best;
  for (std::size_t j = 0; j < w.size(); ++j) {
    int i = w[j].index;
    for (std::size_t q = j + 1; q < w.size(); ++q) {
      int d = w[q].index;
      if (d == i) {
        if (w[q].sign == -w[j].sign) {
          if (!best || q - j < best->end - best->begin) best = Handle{j, q};
        }
        break;  // same-sign occurrence blocks j
      }
      if (d == i - 1) break;
    }
  }
  return best;
}

}  // namespace

bool handle_trivial(const Word &u, std::size_t budget) {
  require_type_a(u, "handle_trivial");
  std::vector<Letter> w = u.letters();
  std::size_t steps = 0;
  while (true) {
    auto h = find_handle(w);
    if (!h) break;
    if (++steps > budget)
      throw BudgetExceeded("handle reduction step budget exceeded");
    int i = w[h->begin].index;
    int e = w[h->begin].sign;
    std::vector<Letter> next(w.begin(), w.begin() + static_cast<long>(h->begin));
    for (std::size_t p = h->begin + 1; p < h->end; ++p) {
      const Letter &l = w[p];
      if (l.index == i + 1) {
        next.push_back({i + 1, -e});
        next.push_back({i, l.sign});
        next.push_back({i + 1, e});
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), w.begin() + static_cast<long>(h->end) + 1, w.end());
    free_reduce(next);
    w = std::move(next);
  }
  return w.empty();
}

}  // namespace artin
