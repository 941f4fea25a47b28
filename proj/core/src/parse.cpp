#include "artin/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "artin/bn.hpp"

namespace artin {

namespace {

const std::unordered_map<std::string, NamedElement> &named_table() {
  static const std::unordered_map<std::string, NamedElement> table = {
      {"@rhoB", NamedElement::RhoB},
      {"@Delta", NamedElement::Delta},
      {"@DeltaB", NamedElement::DeltaB},
      {"@DeltaY", NamedElement::DeltaY},
      {"@rho0", NamedElement::Rho0},
      {"@rho1", NamedElement::Rho1},
      {"@v0", NamedElement::V0},
      {"@v1", NamedElement::V1},
      {"@u0", NamedElement::U0},
      {"@u1", NamedElement::U1},
      {"@delta", NamedElement::SmallDelta},
      {"@deltaPrime", NamedElement::SmallDeltaPrime},
      {"@t0", NamedElement::T0},
  };
  return table;
}

long long parse_exponent(const std::string &text, const std::string &token) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos != text.size() || text.empty())
    throw InvalidInput("bad exponent in token '" + token + "'");
  return value;
}

Family family_of_base(char c) {
  switch (c) {
    case 's': return Family::TypeA;
    case 'r': return Family::TypeB;
    case 't': return Family::TypeAffineA;
    default: throw InvalidInput(std::string("unknown generator letter '") + c +
                                "'");
  }
}

}  // namespace

Word adapt_word(const Word &w, const Alphabet &target) {
  Word cur = w;
  if (cur.alphabet().rank != target.rank)
    throw InvalidInput("adapt_word: rank mismatch");
  if (cur.alphabet().family == Family::TypeAffineA &&
      target.family != Family::TypeAffineA)
    cur = iota_tilde_A(cur);
  if (cur.alphabet().family == Family::TypeB && target.family == Family::TypeA)
    cur = iota_B(cur);
  if (cur.alphabet() != target)
    throw InvalidInput("no inclusion maps a " + to_string(w.alphabet().family) +
                       " word into a " + to_string(target.family) + " context");
  return cur;
}

Word parse_word(const std::string &text, const Alphabet &alphabet) {
  WordBuilder out(alphabet);
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::string base = token;
    long long exp = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      base = token.substr(0, caret);
      exp = parse_exponent(token.substr(caret + 1), token);
    }
    if (base.empty()) throw InvalidInput("empty token");

    if (base[0] == '@') {
      auto it = named_table().find(base);
      if (it == named_table().end())
        throw InvalidInput("unknown named element '" + base + "'");
      Word w = adapt_word(expand(it->second, alphabet.rank), alphabet);
      out.append(power(w, exp));
      continue;
    }
    if (base == "rho") {
      if (alphabet.family != Family::TypeB)
        throw InvalidInput("'rho' is only available in TypeB words");
      out.append(power(expand(NamedElement::RhoB, alphabet.rank), exp));
      continue;
    }

    char c = base[0];
    int sign = 1;
    if (std::isupper(static_cast<unsigned char>(c))) {
      sign = -1;
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (family_of_base(c) != alphabet.family)
      throw InvalidInput("generator '" + base + "' does not belong to a " +
                         to_string(alphabet.family) + " alphabet");
    std::string digits = base.substr(1);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad generator index in token '" + token + "'");
    int index = std::stoi(digits);
    if (!alphabet.valid_index(index))
      throw InvalidInput("generator index " + std::to_string(index) +
                         " out of range for rank " +
                         std::to_string(alphabet.rank));
    long long total = sign * exp;
    for (long long i = 0; i < std::llabs(total); ++i)
      out.push(index, total > 0 ? 1 : -1);
  }
  return out.take();
}

}  // namespace artin
