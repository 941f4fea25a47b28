#pragma once

#include <string>
#include <vector>

#include "artin/words.hpp"

namespace artin {

struct IdentityCheck {
  std::string name;
  bool pass{false};
};

/// Suites: "semidirect" (inclusion-chain and cyclic-shift identities),
/// "lemma42", "section6", "autrel" (automorphism relations),
/// "centralizer", or "all".
std::vector<IdentityCheck> run_identity_suite(const std::string &suite, int n);

bool all_pass(const std::vector<IdentityCheck> &checks);

}  // namespace artin
