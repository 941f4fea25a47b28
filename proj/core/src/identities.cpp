#include "artin/identities.hpp"

#include "artin/bn.hpp"
#include "artin/classify.hpp"
#include "artin/endo.hpp"

namespace artin {

namespace {

Word r_word(int n, int i) { return Word(type_b(n), {{i, 1}}); }

Word t_word(int n, int i) {
  return iota_tilde_A(Word(type_affine_a(n), {{i, 1}}));
}

void check_semidirect(std::vector<IdentityCheck> &out, int n) {
  auto push = [&](std::string name, bool pass) {
    out.push_back({std::move(name), pass});
  };
  Word rho = expand(NamedElement::RhoB, n);

  // Defining relations of B_n through iota_B.
  bool comm = true, braid = true;
  for (int i = 1; i <= n && comm; ++i)
    for (int j = i + 2; j <= n && comm; ++j)
      comm = bn_equal(concat(r_word(n, i), r_word(n, j)),
                      concat(r_word(n, j), r_word(n, i)));
  for (int i = 1; i <= n - 2 && braid; ++i)
    braid = bn_equal(
        concat(concat(r_word(n, i), r_word(n, i + 1)), r_word(n, i)),
        concat(concat(r_word(n, i + 1), r_word(n, i)), r_word(n, i + 1)));
  push("iotaB: commutations", comm);
  push("iotaB: braid relations", braid);
  Word ab = concat(r_word(n, n - 1), r_word(n, n));
  Word ba = concat(r_word(n, n), r_word(n, n - 1));
  push("iotaB: length-4 relation", bn_equal(concat(ab, ab), concat(ba, ba)));

  // Defining relations of the affine cycle through iota_tilde_A.
  bool acomm = true, abraid = true;
  for (int i = 0; i < n && abraid; ++i) {
    int j = (i + 1) % n;
    abraid = bn_equal(
        concat(concat(t_word(n, i), t_word(n, j)), t_word(n, i)),
        concat(concat(t_word(n, j), t_word(n, i)), t_word(n, j)));
  }
  for (int i = 0; i < n && acomm; ++i)
    for (int j = i + 2; j < n && acomm; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent on the cycle
      acomm = bn_equal(concat(t_word(n, i), t_word(n, j)),
                       concat(t_word(n, j), t_word(n, i)));
    }
  push("iotaA~: braid relations on the cycle", abraid);
  push("iotaA~: commutations", acomm);

  bool shift_t = true;
  for (int i = 0; i < n && shift_t; ++i)
    shift_t = bn_equal(conjugate(rho, t_word(n, i)), t_word(n, (i + 1) % n));
  push("rhoB t_i rhoB^-1 = t_{i+1 mod n}", shift_t);

  bool shift_r = true;
  for (int i = 1; i <= n - 2 && shift_r; ++i)
    shift_r = bn_equal(conjugate(rho, r_word(n, i)), r_word(n, i + 1));
  push("rhoB r_i rhoB^-1 = r_{i+1}", shift_r);

  push("iotaB(DeltaB) = Delta^2",
       braid_equal(iota_B(expand(NamedElement::DeltaB, n)),
                   power(delta_word(n), 2)));

  bool central = true;
  Word db = expand(NamedElement::DeltaB, n);
  for (int i = 1; i <= n && central; ++i)
    central = bn_equal(conjugate(db, r_word(n, i)), r_word(n, i));
  push("DeltaB central", central);

  std::vector<Word> samples = {
      r_word(n, n),
      expand(NamedElement::SmallDelta, n),
      expand(NamedElement::T0, n),
      concat(concat(power(rho, 2), invert(r_word(n, 1))), r_word(n, n)),
      concat(invert(rho), power(r_word(n, n), 2)),
  };
  bool rt = true;
  for (const Word &u : samples) {
    SemidirectForm f = semidirect_decompose(u);
    rt = rt && bn_equal(semidirect_reassemble(f, n), u);
  }
  push("semidirect decomposition round-trip", rt);
  SemidirectForm fd = semidirect_decompose(db);
  push("semidirect_decompose(DeltaB) = (1, n)",
       fd.affine_part.is_empty() && fd.shift == n);
}

void check_lemma42(std::vector<IdentityCheck> &out, int n) {
  Word dy = iota_tilde_A(expand(NamedElement::DeltaY, n));
  Word rho = expand(NamedElement::RhoB, n);
  WordBuilder b(type_b(n));
  for (int i = n; i >= 1; --i) b.push(i, 1);
  out.push_back({"DeltaY^-1 rhoB DeltaY = r_n r_{n-1} ... r_1",
                 bn_equal(conjugate(invert(dy), rho), b.take())});
}

void check_section6(std::vector<IdentityCheck> &out, int n) {
  auto push = [&](std::string name, bool pass) {
    out.push_back({std::move(name), pass});
  };
  Word d = expand(NamedElement::SmallDelta, n);
  Word dp = expand(NamedElement::SmallDeltaPrime, n);
  Word rn1 = r_word(n, n - 1);
  Word rn = r_word(n, n);

  push("delta' = r_{n-1}^-1 delta r_{n-1}^-1",
       bn_equal(dp, concat(concat(invert(rn1), d), invert(rn1))));
  push("delta delta' = delta' delta",
       bn_equal(concat(d, dp), concat(dp, d)));

  auto art = [&](const Word &a, const Word &b) {
    Word lhs = concat(concat(concat(a, b), a), b);
    Word rhs = concat(concat(concat(b, a), b), a);
    return bn_equal(lhs, rhs);
  };
  push("(art:1) delta and r_{n-1}^-1", art(d, invert(rn1)));
  push("(art:2) delta r_n and r_{n-1}^-1", art(concat(d, rn), invert(rn1)));
  push("(art:3) delta' and r_{n-1}", art(dp, rn1));

  Word x1 = parabolic_delta_word(n, n - 1);
  Word x2 = parabolic_delta_word(n, n - 2);
  push("delta = DeltaX1^2 DeltaX2^-2",
       bn_equal(d, concat(power(x1, 2), power(x2, -2))));
  if (n >= 4) {
    Word x3 = parabolic_delta_word(n, n - 3);
    push("delta' = DeltaX2^2 DeltaX3^-2",
         bn_equal(dp, concat(power(x2, 2), power(x3, -2))));
  }
}

void check_autrel(std::vector<IdentityCheck> &out, int n) {
  auto push = [&](std::string name, bool pass) {
    out.push_back({std::move(name), pass});
  };
  EndoSpec mu = EndoSpec::mu(n);
  EndoSpec tau = EndoSpec::tau(n);
  EndoSpec tr = EndoSpec::transvection(n, 1);
  EndoSpec tr_inv = EndoSpec::transvection(n, -1);
  EndoSpec tau_prime = EndoSpec::std_iia(n, -1, 0, 0);
  Word dy = iota_tilde_A(expand(NamedElement::DeltaY, n));

  auto on_generators = [&](auto &&f) {
    for (int i = 1; i <= n; ++i)
      if (!f(i)) return false;
    return true;
  };
  push("mu^2 = id", on_generators([&](int i) {
         return bn_equal(apply(mu, image_of_r(mu, i)), r_word(n, i));
       }));
  push("tau^2 = id", on_generators([&](int i) {
         return bn_equal(apply(tau, image_of_r(tau, i)), r_word(n, i));
       }));
  push("mu tau = tau mu", on_generators([&](int i) {
         return bn_equal(apply(mu, image_of_r(tau, i)),
                         apply(tau, image_of_r(mu, i)));
       }));
  push("mu T mu = T^-1", on_generators([&](int i) {
         return bn_equal(apply(mu, apply(tr, image_of_r(mu, i))),
                         image_of_r(tr_inv, i));
       }));
  push("tau T = T tau", on_generators([&](int i) {
         return bn_equal(apply(tau, image_of_r(tr, i)),
                         apply(tr, image_of_r(tau, i)));
       }));
  push("tau = conj_DeltaY . tau'", on_generators([&](int i) {
         return bn_equal(image_of_r(tau, i),
                         conjugate(dy, image_of_r(tau_prime, i)));
       }));
}

void check_centralizer(std::vector<IdentityCheck> &out, int n) {
  Word rho = expand(NamedElement::RhoB, n);
  for (int kappa = 0; kappa < n; ++kappa) {
    Word rk = power(rho, kappa);
    bool ok = true;
    for (const Word &g : centralizer_generators(n, kappa))
      ok = ok && bar_equal(concat(g, rk), concat(rk, g));
    out.push_back({"centralizer generators commute with rhobar^" +
                       std::to_string(kappa),
                   ok});
  }
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const std::string &suite,
                                              int n) {
  std::vector<IdentityCheck> out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "semidirect") check_semidirect(out, n), known = true;
  if (all || suite == "lemma42") check_lemma42(out, n), known = true;
  if (all || suite == "section6") check_section6(out, n), known = true;
  if (all || suite == "autrel") check_autrel(out, n), known = true;
  if (all || suite == "centralizer") check_centralizer(out, n), known = true;
  if (!known) throw InvalidInput("unknown identity suite '" + suite + "'");
  return out;
}

bool all_pass(const std::vector<IdentityCheck> &checks) {
  for (const IdentityCheck &c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace artin
