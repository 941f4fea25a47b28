#include "artin/bn.hpp"

namespace artin {

namespace {

void require_family(const Word &u, Family f, const char *op) {
  if (u.alphabet().family != f)
    throw InvalidInput(std::string(op) + ": wrong alphabet family");
}

void require_rank(int n, int min, const char *what) {
  if (n < min)
    throw InvalidInput(std::string("rank ") + std::to_string(n) +
                       " too small for " + what);
}

Word run_word(Alphabet a, int from, int to, int sign) {
  WordBuilder b(a);
  if (from <= to)
    for (int i = from; i <= to; ++i) b.push(i, sign);
  else
    for (int i = from; i >= to; --i) b.push(i, sign);
  return b.take();
}

}  // namespace

Alphabet native_alphabet(NamedElement tag, int n) {
  switch (tag) {
    case NamedElement::RhoB:
    case NamedElement::DeltaB:
    case NamedElement::SmallDelta:
    case NamedElement::SmallDeltaPrime:
    case NamedElement::T0:
      return type_b(n);
    case NamedElement::Delta:
      return type_a(n);
    default:
      return type_affine_a(n);
  }
}

Word expand(NamedElement tag, int n) {
  switch (tag) {
    case NamedElement::RhoB:
      require_rank(n, 2, "rhoB");
      return run_word(type_b(n), 1, n, 1);
    case NamedElement::Delta: {
      require_rank(n, 2, "Delta");
      WordBuilder b(type_a(n));
      for (int k = n; k >= 1; --k)
        for (int i = 1; i <= k; ++i) b.push(i, 1);
      return b.take();
    }
    case NamedElement::DeltaB:
      require_rank(n, 2, "DeltaB");
      return power(expand(NamedElement::RhoB, n), n);
    case NamedElement::DeltaY: {
      require_rank(n, 3, "DeltaY");
      WordBuilder b(type_affine_a(n));
      for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) b.push(i, 1);
      return b.take();
    }
    case NamedElement::Rho0:
      require_rank(n, 3, "rho0");
      return run_word(type_affine_a(n), 1, n - 1, 1);
    case NamedElement::Rho1:
      require_rank(n, 3, "rho1");
      return run_word(type_affine_a(n), 1, n - 1, -1);
    case NamedElement::V0: {
      require_rank(n, 3, "v0");
      Word tn1(type_affine_a(n), {{n - 1, 1}});
      return conjugate(expand(NamedElement::Rho0, n), tn1);
    }
    case NamedElement::V1: {
      require_rank(n, 3, "v1");
      Word tn1(type_affine_a(n), {{n - 1, 1}});
      return conjugate(expand(NamedElement::Rho1, n), tn1);
    }
    case NamedElement::U0:
      require_rank(n, 3, "u0");
      return Word(type_affine_a(n), {{0, 1}});
    case NamedElement::U1: {
      require_rank(n, 3, "u1");
      Word t0(type_affine_a(n), {{0, 1}});
      return conjugate(invert(expand(NamedElement::DeltaY, n)), t0);
    }
    case NamedElement::SmallDelta: {
      require_rank(n, 2, "small delta");
      WordBuilder b(type_b(n));
      for (int i = n - 1; i >= 1; --i) b.push(i, 1);
      for (int i = 1; i <= n - 1; ++i) b.push(i, 1);
      return b.take();
    }
    case NamedElement::SmallDeltaPrime: {
      require_rank(n, 3, "small delta prime");
      WordBuilder b(type_b(n));
      for (int i = n - 2; i >= 1; --i) b.push(i, 1);
      for (int i = 1; i <= n - 2; ++i) b.push(i, 1);
      return b.take();
    }
    case NamedElement::T0: {
      require_rank(n, 3, "t0 in B");
      Word rn1(type_b(n), {{n - 1, 1}});
      return conjugate(expand(NamedElement::RhoB, n), rn1);
    }
  }
  throw InvalidInput("unknown named element");
}

Word iota_B(const Word &u) {
  require_family(u, Family::TypeB, "iota_B");
  int n = u.alphabet().rank;
  WordBuilder b(type_a(n));
  for (const Letter &l : u.letters()) {
    if (l.index == n) {
      b.push(n, l.sign);
      b.push(n, l.sign);
    } else {
      b.push(l.index, l.sign);
    }
  }
  return b.take();
}

Word iota_tilde_A(const Word &u) {
  require_family(u, Family::TypeAffineA, "iota_tilde_A");
  int n = u.alphabet().rank;
  Word t0 = expand(NamedElement::T0, n);
  WordBuilder b(type_b(n));
  for (const Letter &l : u.letters()) {
    if (l.index == 0) {
      if (l.sign > 0)
        b.append(t0);
      else
        b.append_inverse(t0);
    } else {
      b.push(l.index, l.sign);
    }
  }
  return b.take();
}

bool bn_equal(const Word &u, const Word &v) {
  if (u.alphabet() != v.alphabet())
    throw InvalidInput("bn_equal: alphabet mismatch");
  require_family(u, Family::TypeB, "bn_equal");
  return braid_equal(iota_B(u), iota_B(v));
}

bool affine_equal(const Word &u, const Word &v) {
  if (u.alphabet() != v.alphabet())
    throw InvalidInput("affine_equal: alphabet mismatch");
  require_family(u, Family::TypeAffineA, "affine_equal");
  return bn_equal(iota_tilde_A(u), iota_tilde_A(v));
}

bool in_Bn(const Word &u) {
  require_family(u, Family::TypeA, "in_Bn");
  int last = u.alphabet().rank + 1;
  return underlying_permutation(u)(last) == last;
}

std::optional<long long> bn_central_power(const Word &u) {
  require_family(u, Family::TypeB, "bn_central_power");
  auto k = delta_power(iota_B(u));
  if (!k || *k % 2 != 0) return std::nullopt;
  return *k / 2;
}

SemidirectForm semidirect_decompose(const Word &u) {
  require_family(u, Family::TypeB, "semidirect_decompose");
  int n = u.alphabet().rank;
  // Substitute r_n = t_{n-1}^-1 ... t_1^-1 * rhoB, then push every rhoB
  // rightward via rhoB t_i rhoB^-1 = t_{i+1 mod n}.
  WordBuilder affine(type_affine_a(n));
  long long shift = 0;
  auto emit = [&](int idx, int sign) {
    long long j = ((idx + shift) % n + n) % n;
    affine.push(static_cast<int>(j), sign);
  };
  for (const Letter &l : u.letters()) {
    if (l.index < n) {
      emit(l.index, l.sign);
    } else if (l.sign > 0) {
      for (int i = n - 1; i >= 1; --i) emit(i, -1);
      ++shift;
    } else {
      --shift;
      for (int i = 1; i <= n - 1; ++i) emit(i, 1);
    }
  }
  return SemidirectForm{affine.take(), shift};
}

Word semidirect_reassemble(const SemidirectForm &f, int n) {
  Word rho = expand(NamedElement::RhoB, n);
  return concat(iota_tilde_A(f.affine_part), power(rho, f.shift));
}

Word parabolic_delta_word(int n, int k) {
  if (k < 1 || k >= n) throw InvalidInput("parabolic_delta_word: bad prefix");
  WordBuilder b(type_b(n));
  for (int run = k; run >= 1; --run)
    for (int i = 1; i <= run; ++i) b.push(i, 1);
  return b.take();
}

}  // namespace artin
