#include "artin/endo.hpp"

namespace artin {

namespace {

using Kind = EndoSpec::Kind;

void require_eps(int eps) {
  if (eps != 1 && eps != -1) throw InvalidInput("eps must be +1 or -1");
}

void require_classified_rank(int n) {
  if (n < 5)
    throw InvalidInput("classified endomorphism families require rank >= 5");
}

void require_b_word(const Word &w, int n, const char *what) {
  if (w.alphabet() != type_b(n))
    throw InvalidInput(std::string(what) + ": expected a TypeB word of rank " +
                       std::to_string(n));
}

Word db_power(int n, long long e) {
  return power(expand(NamedElement::DeltaB, n), e);
}

Word dy_in_b(int n) { return iota_tilde_A(expand(NamedElement::DeltaY, n)); }

Word r_letter(int n, int i) { return Word(type_b(n), {{i, 1}}); }

/// The word for t_i inside A[B_n] (t_0 through the named element).
Word t_in_b(int n, int i) {
  if (i == 0) return expand(NamedElement::T0, n);
  return r_letter(n, i);
}

Word signed_pow(const Word &w, int e) { return e > 0 ? w : invert(w); }

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Type1: return "Type1";
    case Kind::Type2a: return "Type2a";
    case Kind::Type2b: return "Type2b";
    case Kind::Type3: return "Type3";
    case Kind::StdI: return "StdI";
    case Kind::StdIIa: return "StdIIa";
    case Kind::StdIIb: return "StdIIb";
    case Kind::StdIIIa: return "StdIIIa";
    case Kind::StdIIIb: return "StdIIIb";
    case Kind::NamedT: return "T";
    case Kind::NamedTau: return "Tau";
    case Kind::NamedMu: return "Mu";
    case Kind::Inner: return "Inner";
    case Kind::Compose: return "Compose";
    case Kind::Raw: return "Raw";
  }
  return "?";
}

EndoSpec EndoSpec::type1(int n, Word g, Word h) {
  require_classified_rank(n);
  require_b_word(g, n, "Type1 g");
  require_b_word(h, n, "Type1 h");
  if (!bn_equal(concat(g, h), concat(h, g)))
    throw InvalidInput("Type1 requires commuting g and h");
  EndoSpec e;
  e.kind = Kind::Type1;
  e.n = n;
  e.g = std::move(g);
  e.h = std::move(h);
  return e;
}

EndoSpec EndoSpec::type2a(int n, int eps, long long p, long long q) {
  require_classified_rank(n);
  require_eps(eps);
  EndoSpec e;
  e.kind = Kind::Type2a;
  e.n = n;
  e.eps = eps;
  e.p = p;
  e.q = q;
  return e;
}

EndoSpec EndoSpec::type2b(int n, int eps, long long p, long long q) {
  EndoSpec e = type2a(n, eps, p, q);
  e.kind = Kind::Type2b;
  return e;
}

EndoSpec EndoSpec::type3(int n, int eps, int k, long long p, long long q,
                         long long r, long long s) {
  require_classified_rank(n);
  require_eps(eps);
  if (k != 0 && k != 1) throw InvalidInput("Type3 k must be 0 or 1");
  EndoSpec e;
  e.kind = Kind::Type3;
  e.n = n;
  e.eps = eps;
  e.k = k;
  e.p = p;
  e.q = q;
  e.r = r;
  e.s = s;
  return e;
}

EndoSpec EndoSpec::std_i(int n, Word g, Word h) {
  EndoSpec e = type1(n, std::move(g), std::move(h));
  e.kind = Kind::StdI;
  return e;
}

EndoSpec EndoSpec::std_iia(int n, int eps, long long p, long long q) {
  EndoSpec e = type2a(n, eps, p, q);
  e.kind = Kind::StdIIa;
  return e;
}

EndoSpec EndoSpec::std_iib(int n, int eps, long long p, long long q) {
  EndoSpec e = type2a(n, eps, p, q);
  e.kind = Kind::StdIIb;
  return e;
}

EndoSpec EndoSpec::std_iiia(int n, int eps, long long p, long long q,
                            long long r, long long s) {
  EndoSpec e = type3(n, eps, 0, p, q, r, s);
  e.kind = Kind::StdIIIa;
  return e;
}

EndoSpec EndoSpec::std_iiib(int n, int eps, long long p, long long q,
                            long long r, long long s) {
  EndoSpec e = type3(n, eps, 0, p, q, r, s);
  e.kind = Kind::StdIIIb;
  return e;
}

EndoSpec EndoSpec::transvection(int n, long long m) {
  require_classified_rank(n);
  EndoSpec e;
  e.kind = Kind::NamedT;
  e.n = n;
  e.t_power = m;
  return e;
}

EndoSpec EndoSpec::tau(int n) {
  require_classified_rank(n);
  EndoSpec e;
  e.kind = Kind::NamedTau;
  e.n = n;
  return e;
}

EndoSpec EndoSpec::mu(int n) {
  require_classified_rank(n);
  EndoSpec e;
  e.kind = Kind::NamedMu;
  e.n = n;
  return e;
}

EndoSpec EndoSpec::conj(int n, Word x) {
  require_classified_rank(n);
  require_b_word(x, n, "Inner x");
  EndoSpec e;
  e.kind = Kind::Inner;
  e.n = n;
  e.x = std::move(x);
  return e;
}

EndoSpec EndoSpec::compose(EndoSpec outer, EndoSpec inner) {
  if (outer.n != inner.n) throw InvalidInput("Compose: rank mismatch");
  EndoSpec e;
  e.kind = Kind::Compose;
  e.n = outer.n;
  e.outer = std::make_shared<const EndoSpec>(std::move(outer));
  e.inner = std::make_shared<const EndoSpec>(std::move(inner));
  return e;
}

EndoSpec EndoSpec::raw(int n, std::vector<Word> images) {
  if (n < 2) throw InvalidInput("Raw: rank too small");
  if (static_cast<int>(images.size()) != n)
    throw InvalidInput("Raw: expected exactly n generator images");
  for (const Word &w : images) require_b_word(w, n, "Raw image");
  EndoSpec e;
  e.kind = Kind::Raw;
  e.n = n;
  e.images = std::move(images);
  return e;
}

Word image_of_t(const EndoSpec &spec, int i) {
  int n = spec.n;
  if (i < 0 || i > n - 1) throw InvalidInput("image_of_t: index out of range");
  switch (spec.kind) {
    case Kind::Type1:
      return *spec.g;
    case Kind::Type2a:
      return concat(signed_pow(t_in_b(n, i), spec.eps), db_power(n, spec.p));
    case Kind::Type2b:
      return concat(signed_pow(t_in_b(n, (n - i) % n), spec.eps),
                    db_power(n, spec.p));
    case Kind::Type3: {
      Word base = i == 0 ? iota_tilde_A(expand(
                               spec.k == 0 ? NamedElement::V0 : NamedElement::V1, n))
                         : t_in_b(n, i);
      return concat(concat(signed_pow(base, spec.eps),
                           power(dy_in_b(n), 2 * spec.p)),
                    db_power(n, spec.q));
    }
    case Kind::NamedT:
      return concat(t_in_b(n, i), db_power(n, spec.t_power));
    case Kind::NamedTau:
      return invert(t_in_b(n, (n - i) % n));
    case Kind::NamedMu:
      return invert(t_in_b(n, i));
    case Kind::Inner:
      return conjugate(*spec.x, t_in_b(n, i));
    case Kind::Compose:
      return apply(*spec.outer, image_of_t(*spec.inner, i));
    default:
      return apply(spec, t_in_b(n, i));
  }
}

Word image_of_rho(const EndoSpec &spec) {
  int n = spec.n;
  Word rho = expand(NamedElement::RhoB, n);
  switch (spec.kind) {
    case Kind::Type1:
      return *spec.h;
    case Kind::Type2a:
      return concat(rho, db_power(n, spec.q));
    case Kind::Type2b:
      return concat(invert(rho), db_power(n, spec.q));
    case Kind::Type3: {
      Word rk = iota_tilde_A(
          expand(spec.k == 0 ? NamedElement::Rho0 : NamedElement::Rho1, n));
      return concat(concat(rk, power(dy_in_b(n), 2 * spec.r)),
                    db_power(n, spec.s));
    }
    case Kind::NamedT:
      return rho;
    case Kind::NamedTau:
      return invert(rho);
    case Kind::NamedMu:
      return rho;
    case Kind::Inner:
      return conjugate(*spec.x, rho);
    case Kind::Compose:
      return apply(*spec.outer, image_of_rho(*spec.inner));
    default:
      return apply(spec, rho);
  }
}

Word image_of_r(const EndoSpec &spec, int i) {
  int n = spec.n;
  if (i < 1 || i > n) throw InvalidInput("image_of_r: index out of range");
  switch (spec.kind) {
    case Kind::StdI:
      return i < n ? *spec.g : *spec.h;
    case Kind::StdIIa:
      return concat(signed_pow(r_letter(n, i), spec.eps),
                    db_power(n, i < n ? spec.p : spec.q));
    case Kind::StdIIb:
      if (i < n)
        return concat(signed_pow(r_letter(n, i), spec.eps), db_power(n, spec.p));
      return concat(concat(signed_pow(expand(NamedElement::SmallDelta, n),
                                      -spec.eps),
                           signed_pow(r_letter(n, n), -spec.eps)),
                    db_power(n, spec.q));
    case Kind::StdIIIa:
    case Kind::StdIIIb: {
      if (i < n)
        return concat(concat(signed_pow(r_letter(n, i), spec.eps),
                             power(dy_in_b(n), 2 * spec.p)),
                      db_power(n, spec.q));
      Word tail = concat(power(dy_in_b(n), 2 * spec.r), db_power(n, spec.s));
      if (spec.kind == Kind::StdIIIb)
        tail = concat(signed_pow(expand(NamedElement::SmallDelta, n), -spec.eps),
                      tail);
      return tail;
    }
    case Kind::Raw:
      return spec.images[static_cast<std::size_t>(i - 1)];
    case Kind::Inner:
      return conjugate(*spec.x, r_letter(n, i));
    case Kind::Compose:
      return apply(*spec.outer, image_of_r(*spec.inner, i));
    default: {
      // (t, rhoB)-defined family: r_i = t_i for i < n and
      // r_n = (t_1 ... t_{n-1})^-1 rhoB.
      if (i < n) return image_of_t(spec, i);
      WordBuilder b(type_b(n));
      for (int j = n - 1; j >= 1; --j) b.append_inverse(image_of_t(spec, j));
      b.append(image_of_rho(spec));
      return b.take();
    }
  }
}

Word apply(const EndoSpec &spec, const Word &u) {
  require_b_word(u, spec.n, "apply");
  std::vector<std::optional<Word>> cache(static_cast<std::size_t>(spec.n) + 1);
  WordBuilder b(type_b(spec.n));
  for (const Letter &l : u.letters()) {
    auto &img = cache[static_cast<std::size_t>(l.index)];
    if (!img) img = image_of_r(spec, l.index);
    if (l.sign > 0)
      b.append(*img);
    else
      b.append_inverse(*img);
  }
  return b.take();
}

bool verify_homomorphism(const EndoSpec &spec) {
  int n = spec.n;
  std::vector<Word> R;
  R.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) R.push_back(image_of_r(spec, i));
  auto img = [&](int i) -> const Word & {
    return R[static_cast<std::size_t>(i - 1)];
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (!bn_equal(concat(img(i), img(j)), concat(img(j), img(i))))
        return false;
  for (int i = 1; i <= n - 2; ++i) {
    Word lhs = concat(concat(img(i), img(i + 1)), img(i));
    Word rhs = concat(concat(img(i + 1), img(i)), img(i + 1));
    if (!bn_equal(lhs, rhs)) return false;
  }
  Word ab = concat(img(n - 1), img(n));
  Word ba = concat(img(n), img(n - 1));
  if (!bn_equal(concat(ab, ab), concat(ba, ba))) return false;
  if (spec.kind == Kind::Type1 || spec.kind == Kind::StdI) {
    if (!bn_equal(concat(*spec.g, *spec.h), concat(*spec.h, *spec.g)))
      return false;
  }
  return true;
}

StdForm to_standard_form(const EndoSpec &spec) {
  int n = spec.n;
  Word none = Word::empty(type_b(n));
  long long shift = static_cast<long long>(n - 1);
  switch (spec.kind) {
    case Kind::Type1:
      return {EndoSpec::std_i(n, *spec.g,
                              concat(power(*spec.g, -(shift)), *spec.h)),
              none};
    case Kind::Type2a: {
      long long q2 = spec.q - spec.p * shift;
      EndoSpec out = spec.eps == 1 ? EndoSpec::std_iia(n, spec.eps, spec.p, q2)
                                   : EndoSpec::std_iib(n, spec.eps, spec.p, q2);
      return {out, none};
    }
    case Kind::Type2b: {
      // phi = conj_{DeltaY} . phi_std (DeltaY r_i DeltaY^-1 = r_{n-i}).
      long long q2 = spec.q - spec.p * shift;
      EndoSpec out = spec.eps == 1 ? EndoSpec::std_iib(n, spec.eps, spec.p, q2)
                                   : EndoSpec::std_iia(n, spec.eps, spec.p, q2);
      return {out, dy_in_b(n)};
    }
    case Kind::Type3: {
      long long r2 = spec.r - spec.p * shift;
      long long s2 = spec.s - spec.q * shift;
      bool iiia = (spec.eps == 1) == (spec.k == 0);
      EndoSpec out =
          iiia ? EndoSpec::std_iiia(n, spec.eps, spec.p, spec.q, r2, s2)
               : EndoSpec::std_iiib(n, spec.eps, spec.p, spec.q, r2, s2);
      return {out, none};
    }
    case Kind::StdI:
    case Kind::StdIIa:
    case Kind::StdIIb:
    case Kind::StdIIIa:
    case Kind::StdIIIb:
      return {spec, none};
    case Kind::NamedT:
      return to_standard_form(EndoSpec::type2a(n, 1, spec.t_power, 0));
    case Kind::NamedMu:
      return to_standard_form(EndoSpec::type2a(n, -1, 0, 0));
    case Kind::NamedTau:
      return to_standard_form(EndoSpec::type2b(n, -1, 0, 0));
    default:
      throw InvalidInput("to_standard_form: expects a family spec");
  }
}

namespace {

Tristate combine_and(Tristate a, Tristate b) {
  if (a == Tristate::Unsupported || b == Tristate::Unsupported)
    return Tristate::Unsupported;
  if (a == Tristate::Yes && b == Tristate::Yes) return Tristate::Yes;
  return Tristate::No;
}

}  // namespace

Tristate is_injective(const EndoSpec &spec) {
  switch (spec.kind) {
    case Kind::Type2a:
    case Kind::Type2b:
    case Kind::StdIIa:
    case Kind::StdIIb:
    case Kind::NamedT:
    case Kind::NamedTau:
    case Kind::NamedMu:
    case Kind::Inner:
      return Tristate::Yes;
    case Kind::Type1:
    case Kind::StdI:
    case Kind::Type3:
    case Kind::StdIIIa:
    case Kind::StdIIIb:
      return Tristate::No;
    case Kind::Compose:
      return combine_and(is_injective(*spec.outer), is_injective(*spec.inner));
    case Kind::Raw:
      return Tristate::Unsupported;
  }
  return Tristate::Unsupported;
}

Tristate is_surjective(const EndoSpec &spec) {
  switch (spec.kind) {
    case Kind::Type2a:
    case Kind::Type2b:
      return spec.q == 0 ? Tristate::Yes : Tristate::No;
    case Kind::StdIIa:
    case Kind::StdIIb:
      // In (t, rhoB) parameters q = q_std + p(n-1); surjective iff q = 0.
      return spec.q + spec.p * (spec.n - 1) == 0 ? Tristate::Yes
                                                 : Tristate::No;
    case Kind::NamedT:
    case Kind::NamedTau:
    case Kind::NamedMu:
    case Kind::Inner:
      return Tristate::Yes;
    case Kind::Type1:
    case Kind::StdI:
    case Kind::Type3:
    case Kind::StdIIIa:
    case Kind::StdIIIb:
      return Tristate::No;
    case Kind::Compose:
      return combine_and(is_surjective(*spec.outer),
                         is_surjective(*spec.inner));
    case Kind::Raw:
      return Tristate::Unsupported;
  }
  return Tristate::Unsupported;
}

BarEndoSpec BarEndoSpec::bar_type1(int n, int kappa, Word gbar) {
  require_classified_rank(n);
  if (kappa < 0 || kappa >= n) throw InvalidInput("kappa out of range");
  require_b_word(gbar, n, "BarType1 gbar");
  Word rk = power(expand(NamedElement::RhoB, n), kappa);
  Word comm = concat(concat(gbar, rk), concat(invert(gbar), invert(rk)));
  if (!bn_central_power(comm))
    throw InvalidInput("BarType1 requires gbar to centralize rhobar^kappa");
  BarEndoSpec e;
  e.kind = Kind::BarType1;
  e.n = n;
  e.kappa = kappa;
  e.gbar = std::move(gbar);
  return e;
}

BarEndoSpec BarEndoSpec::bar_type2a(int n, int eps) {
  require_classified_rank(n);
  require_eps(eps);
  BarEndoSpec e;
  e.kind = Kind::BarType2a;
  e.n = n;
  e.eps = eps;
  return e;
}

BarEndoSpec BarEndoSpec::bar_type2b(int n, int eps) {
  BarEndoSpec e = bar_type2a(n, eps);
  e.kind = Kind::BarType2b;
  return e;
}

BarEndoSpec BarEndoSpec::bar_raw(int n, std::vector<Word> images) {
  if (n < 2) throw InvalidInput("BarRaw: rank too small");
  if (static_cast<int>(images.size()) != n)
    throw InvalidInput("BarRaw: expected exactly n generator images");
  for (const Word &w : images) require_b_word(w, n, "BarRaw image");
  BarEndoSpec e;
  e.kind = Kind::BarRaw;
  e.n = n;
  e.images = std::move(images);
  return e;
}

Word bar_image_of_r(const BarEndoSpec &spec, int i) {
  int n = spec.n;
  if (i < 1 || i > n) throw InvalidInput("bar_image_of_r: index out of range");
  switch (spec.kind) {
    case BarEndoSpec::Kind::BarType1:
      if (i < n) return *spec.gbar;
      return concat(power(*spec.gbar, -(n - 1)),
                    power(expand(NamedElement::RhoB, n), spec.kappa));
    case BarEndoSpec::Kind::BarType2a:
      return image_of_r(EndoSpec::type2a(n, spec.eps, 0, 0), i);
    case BarEndoSpec::Kind::BarType2b:
      return image_of_r(EndoSpec::type2b(n, spec.eps, 0, 0), i);
    case BarEndoSpec::Kind::BarRaw:
      return spec.images[static_cast<std::size_t>(i - 1)];
  }
  throw InvalidInput("bar_image_of_r: bad variant");
}

EndoSpec lift(const BarEndoSpec &bar) {
  int n = bar.n;
  require_classified_rank(n);
  std::vector<Word> u;
  u.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) u.push_back(bar_image_of_r(bar, i));
  // Correct each braid relation in turn: the relation holds modulo the
  // center, and the central discrepancy is absorbed into u_i. The
  // commutations and the length-4 relation then hold exactly.
  for (int i = 2; i <= n - 1; ++i) {
    const Word &prev = u[static_cast<std::size_t>(i - 2)];
    const Word &cur = u[static_cast<std::size_t>(i - 1)];
    Word lhs = concat(concat(prev, cur), prev);
    Word rhs = concat(concat(cur, prev), cur);
    auto ki = bn_central_power(concat(lhs, invert(rhs)));
    if (!ki)
      throw InvalidInput(
          "lift: braid-relation discrepancy is not a central power; input is "
          "not a bar-endomorphism");
    if (*ki != 0)
      u[static_cast<std::size_t>(i - 1)] = concat(cur, db_power(n, *ki));
  }
  return EndoSpec::raw(n, std::move(u));
}

}  // namespace artin
