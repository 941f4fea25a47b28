#pragma once

#include <string>

#include "artin/words.hpp"

namespace artin {

/// Parse a word in the token grammar: whitespace-separated `r<k>`, `s<k>`,
/// `t<k>` with optional `^<int>`, uppercase for inverses, `rho` (TypeB),
/// and `@named` elements which are expanded in their native alphabet and
/// pushed through the inclusion chain into the requested one.
Word parse_word(const std::string &text, const Alphabet &alphabet);

/// Push a word along the inclusions TypeAffineA -> TypeB -> TypeA as far
/// as needed to land in `target`; error if no such map exists.
Word adapt_word(const Word &w, const Alphabet &target);

}  // namespace artin
