#include "artin/classify.hpp"

#include <numeric>

namespace artin {

namespace {

void require_b(const Word &u, const char *op) {
  if (u.alphabet().family != Family::TypeB)
    throw InvalidInput(std::string(op) + ": expected a TypeB word");
}

// Exact division helper: value of m/d if d | m.
std::optional<long long> exact_div(long long m, long long d) {
  if (m % d != 0) return std::nullopt;
  return m / d;
}

}  // namespace

std::pair<long long, long long> eta(const Word &u) {
  require_b(u, "eta");
  int n = u.alphabet().rank;
  auto sums = letter_exponent_sums(u);
  long long first = 0;
  for (int i = 1; i < n; ++i) first += sums[i];
  first -= static_cast<long long>(n - 1) * sums[n];
  return {first, sums[n]};
}

long long xi(const Word &u) {
  require_b(u, "xi");
  int n = u.alphabet().rank;
  auto sums = letter_exponent_sums(u);
  long long v = 0;
  for (int i = 1; i < n; ++i) v += sums[i];
  v += static_cast<long long>(2 - n) * sums[n];
  return v;
}

long long z_hom(const Word &u) {
  require_b(u, "z_hom");
  long long v = 0;
  for (const Letter &l : u.letters()) v += l.sign;
  return v;
}

bool bar_equal(const Word &u, const Word &v) {
  if (u.alphabet() != v.alphabet())
    throw InvalidInput("bar_equal: alphabet mismatch");
  return bn_central_power(concat(u, invert(v))).has_value();
}

std::string to_string(ClassificationResult::Verdict v) {
  using V = ClassificationResult::Verdict;
  switch (v) {
    case V::Type1Compatible: return "Type1-compatible";
    case V::Type2a: return "Type2a";
    case V::Type2b: return "Type2b";
    case V::Type3: return "Type3";
    case V::NotAHomomorphism: return "NotAHomomorphism";
    case V::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ClassificationResult classify_raw(const EndoSpec &spec) {
  int n = spec.n;
  if (n < 5) throw InvalidInput("classify_raw requires rank >= 5");
  ClassificationResult res;
  if (!verify_homomorphism(spec)) {
    res.verdict = ClassificationResult::Verdict::NotAHomomorphism;
    return res;
  }
  res.hom_verified = true;

  std::vector<Word> R;
  for (int i = 1; i <= n; ++i) R.push_back(image_of_r(spec, i));

  bool abelian = true;
  for (int i = 0; i < n && abelian; ++i)
    for (int j = i + 1; j < n && abelian; ++j)
      if (!bn_equal(concat(R[static_cast<std::size_t>(i)],
                           R[static_cast<std::size_t>(j)]),
                    concat(R[static_cast<std::size_t>(j)],
                           R[static_cast<std::size_t>(i)])))
        abelian = false;
  if (abelian) {
    res.verdict = ClassificationResult::Verdict::Type1Compatible;
    return res;
  }

  // eta of phi(t_i): t_i = r_i for 1 <= i <= n-1, and eta of phi(t_0)
  // coincides with that of phi(r_{n-1}) (conjugation invariance), so the
  // constancy requirement reduces to the images of r_1..r_{n-1}.
  auto first = eta(R[0]);
  for (int i = 1; i < n - 1; ++i)
    if (eta(R[static_cast<std::size_t>(i)]) != first) return res;
  long long alpha = first.first, beta = first.second;
  auto rho_eta = eta(R[static_cast<std::size_t>(n - 1)]);
  long long gamma = rho_eta.first + static_cast<long long>(n - 1) * alpha;
  long long lambda = rho_eta.second + static_cast<long long>(n - 1) * beta;

  // (2a): t_i -> (eps, pn), rhoB -> (0, qn+1); (2b): same with (0, qn-1);
  // (3): t_i -> (eps + pn(n-1), qn), rhoB -> (+-(n-1) + rn(n-1), sn).
  long long nn1 = static_cast<long long>(n) * (n - 1);
  if ((alpha == 1 || alpha == -1) && gamma == 0) {
    auto p = exact_div(beta, n);
    auto qa = exact_div(lambda - 1, n);
    auto qb = exact_div(lambda + 1, n);
    if (p && qa) {
      res.verdict = ClassificationResult::Verdict::Type2a;
      res.eps = static_cast<int>(alpha);
      res.p = *p;
      res.q = *qa;
      return res;
    }
    if (p && qb) {
      res.verdict = ClassificationResult::Verdict::Type2b;
      res.eps = static_cast<int>(alpha);
      res.p = *p;
      res.q = *qb;
      return res;
    }
  }
  auto q3 = exact_div(beta, n);
  auto s3 = exact_div(lambda, n);
  if (q3 && s3) {
    for (int eps : {1, -1}) {
      auto p3 = exact_div(alpha - eps, nn1);
      if (!p3) continue;
      for (int k : {0, 1}) {
        long long base = (k == 0 ? 1 : -1) * static_cast<long long>(n - 1);
        auto r3 = exact_div(gamma - base, nn1);
        if (!r3) continue;
        res.verdict = ClassificationResult::Verdict::Type3;
        res.eps = eps;
        res.k = k;
        res.p = *p3;
        res.q = *q3;
        res.r = *r3;
        res.s = *s3;
        return res;
      }
    }
  }
  return res;  // Inconclusive, hom_verified set
}

std::string to_string(BarClassification::Verdict v) {
  using V = BarClassification::Verdict;
  switch (v) {
    case V::BarType1: return "BarType1";
    case V::BarType2a: return "BarType2a";
    case V::BarType2b: return "BarType2b";
    case V::NotAHomomorphism: return "NotAHomomorphism";
    case V::Inconclusive: return "Inconclusive";
  }
  return "?";
}

BarClassification classify_bar(const BarEndoSpec &spec) {
  int n = spec.n;
  if (n < 5) throw InvalidInput("classify_bar requires rank >= 5");
  BarClassification res;

  std::vector<Word> R;
  for (int i = 1; i <= n; ++i) R.push_back(bar_image_of_r(spec, i));
  auto img = [&](int i) -> const Word & {
    return R[static_cast<std::size_t>(i - 1)];
  };

  // Relations of A[B_n] modulo center, plus bar-triviality of the image
  // of DeltaB (the quotient's extra relation).
  bool ok = true;
  for (int i = 1; i <= n && ok; ++i)
    for (int j = i + 2; j <= n && ok; ++j)
      ok = bar_equal(concat(img(i), img(j)), concat(img(j), img(i)));
  for (int i = 1; i <= n - 2 && ok; ++i)
    ok = bar_equal(concat(concat(img(i), img(i + 1)), img(i)),
                   concat(concat(img(i + 1), img(i)), img(i + 1)));
  if (ok) {
    Word ab = concat(img(n - 1), img(n));
    Word ba = concat(img(n), img(n - 1));
    ok = bar_equal(concat(ab, ab), concat(ba, ba));
  }
  if (ok) {
    WordBuilder b(type_b(n));
    for (int rep = 0; rep < n; ++rep)
      for (int i = 1; i <= n; ++i) b.append(img(i));
    ok = bar_equal(b.take(), Word::empty(type_b(n)));
  }
  if (!ok) {
    res.verdict = BarClassification::Verdict::NotAHomomorphism;
    return res;
  }
  res.hom_verified = true;

  bool abelian = true;
  for (int i = 1; i <= n && abelian; ++i)
    for (int j = i + 1; j <= n && abelian; ++j)
      abelian = bar_equal(concat(img(i), img(j)), concat(img(j), img(i)));

  auto mod_n = [&](long long v) {
    return static_cast<int>(((v % n) + n) % n);
  };
  if (abelian) {
    // kappa is the etabar second coordinate of the image of rhobar.
    long long second = 0;
    for (int i = 1; i <= n; ++i) second += eta(img(i)).second;
    res.verdict = BarClassification::Verdict::BarType1;
    res.kappa = mod_n(second);
    return res;
  }

  // etabar reduces the second eta coordinate mod n (representatives are
  // only defined up to DeltaB powers, and eta(DeltaB) = (0, n)).
  auto first_eta = eta(img(1));
  bool consistent = first_eta.first == 1 || first_eta.first == -1;
  for (int i = 2; i < n && consistent; ++i) {
    auto e = eta(img(i));
    consistent = e.first == first_eta.first &&
                 mod_n(e.second) == mod_n(first_eta.second);
  }
  consistent = consistent && mod_n(first_eta.second) == 0;
  if (consistent) {
    long long alpha = first_eta.first;
    auto rho_eta = eta(img(n));
    long long gamma = rho_eta.first + static_cast<long long>(n - 1) * alpha;
    int lambda = mod_n(rho_eta.second);
    if (gamma == 0 && lambda == 1) {
      res.verdict = BarClassification::Verdict::BarType2a;
      res.eps = static_cast<int>(alpha);
      return res;
    }
    if (gamma == 0 && lambda == n - 1) {
      res.verdict = BarClassification::Verdict::BarType2b;
      res.eps = static_cast<int>(alpha);
      return res;
    }
  }
  return res;  // Inconclusive, hom_verified set
}

std::vector<Word> centralizer_generators(int n, int kappa) {
  if (n < 3) throw InvalidInput("centralizer_generators: rank too small");
  if (kappa < 0 || kappa >= n)
    throw InvalidInput("centralizer_generators: kappa out of range");
  std::vector<Word> gens;
  gens.push_back(expand(NamedElement::RhoB, n));
  int d = std::gcd(n, kappa);
  if (d != 1) {
    WordBuilder b(type_affine_a(n));
    for (int j = 1; j <= n / d; ++j) b.push((j * d) % n, 1);
    gens.push_back(iota_tilde_A(b.take()));
  }
  return gens;
}

}  // namespace artin
