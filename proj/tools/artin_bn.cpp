#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "artin/classify.hpp"
#include "artin/identities.hpp"
#include "artin/json_io.hpp"
#include "artin/parse.hpp"

using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

artin::Alphabet alphabet_for(const std::string &type, int n) {
  if (type == "A") return artin::type_a(n);
  if (type == "B") return artin::type_b(n);
  if (type == "affine") return artin::type_affine_a(n);
  throw artin::InvalidInput("unknown alphabet type '" + type +
                            "' (expected A, B, or affine)");
}

/// Spec arguments are inline JSON, or @path to a JSON file.
json load_spec(const std::string &arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw artin::InvalidInput("cannot open spec file " + arg.substr(1));
    return json::parse(in);
  }
  return json::parse(arg);
}

void emit(const json &payload, bool as_json, const std::string &text) {
  if (as_json) {
    json out = payload;
    out["schema"] = artin::kSchemaTag;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Calculator for the Artin groups of types A, B and affine A"};
  app.require_subcommand(1);

  int n = 0;
  bool as_json = false;
  int exit_code = kExitTrue;

  auto add_common = [&](CLI::App *cmd, bool need_rank = true) {
    auto *opt = cmd->add_option("-n,--rank", n, "rank of the group");
    if (need_rank) opt->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  // nf
  std::string nf_word;
  auto *nf = app.add_subcommand("nf", "Garside normal form of a TypeA word");
  add_common(nf);
  nf->add_option("word", nf_word, "word over s1..sn")->required();
  nf->callback([&] {
    artin::BraidNF res =
        artin::normal_form(artin::parse_word(nf_word, artin::type_a(n)));
    std::string text = "inf=" + std::to_string(res.inf) + " factors=[";
    for (std::size_t i = 0; i < res.factors.size(); ++i) {
      if (i) text += " ";
      text += artin::simple_to_word(res.factors[i], artin::type_a(n)).str();
      if (i + 1 < res.factors.size()) text += ",";
    }
    text += "]";
    emit(artin::nf_to_json(res), as_json, text);
  });

  // eq
  std::string eq_type = "A", eq_u, eq_v, eq_oracle = "garside";
  bool eq_mod_center = false;
  std::size_t budget = artin::kDefaultHandleBudget;
  auto *eq = app.add_subcommand("eq", "equality of two words");
  add_common(eq);
  eq->add_option("--type", eq_type, "alphabet: A, B, or affine")
      ->capture_default_str();
  eq->add_flag("--mod-center", eq_mod_center,
               "equality modulo the center (TypeB only)");
  eq->add_option("--oracle", eq_oracle,
                 "garside or handle (handle: TypeA only)")
      ->capture_default_str();
  eq->add_option("--budget", budget, "handle-reduction step cap")
      ->capture_default_str();
  eq->add_option("u", eq_u, "first word")->required();
  eq->add_option("v", eq_v, "second word")->required();
  eq->callback([&] {
    artin::Alphabet a = alphabet_for(eq_type, n);
    artin::Word u = artin::parse_word(eq_u, a);
    artin::Word v = artin::parse_word(eq_v, a);
    bool equal = false;
    if (eq_mod_center) {
      if (eq_type != "B")
        throw artin::InvalidInput("--mod-center requires --type B");
      equal = artin::bar_equal(u, v);
    } else if (eq_oracle == "handle") {
      if (eq_type != "A")
        throw artin::InvalidInput("--oracle handle requires --type A");
      equal = artin::handle_trivial(artin::concat(u, artin::invert(v)), budget);
    } else if (eq_oracle == "garside") {
      switch (a.family) {
        case artin::Family::TypeA: equal = artin::braid_equal(u, v); break;
        case artin::Family::TypeB: equal = artin::bn_equal(u, v); break;
        case artin::Family::TypeAffineA:
          equal = artin::affine_equal(u, v);
          break;
      }
    } else {
      throw artin::InvalidInput("unknown oracle '" + eq_oracle + "'");
    }
    emit(json{{"equal", equal}}, as_json, equal ? "true" : "false");
    exit_code = equal ? kExitTrue : kExitFalse;
  });

  // perm
  std::string perm_word;
  auto *perm = app.add_subcommand("perm", "strand permutation of a TypeA word");
  add_common(perm);
  perm->add_option("word", perm_word)->required();
  perm->callback([&] {
    artin::Permutation p = artin::underlying_permutation(
        artin::parse_word(perm_word, artin::type_a(n)));
    std::string text;
    for (int x : p.images()) {
      if (!text.empty()) text += " ";
      text += std::to_string(x);
    }
    emit(json{{"images", p.images()}}, as_json, text);
  });

  // delta-power
  std::string dp_word;
  auto *dp = app.add_subcommand("delta-power",
                                "is the TypeA word a power of Delta?");
  add_common(dp);
  dp->add_option("word", dp_word)->required();
  dp->callback([&] {
    auto k = artin::delta_power(artin::parse_word(dp_word, artin::type_a(n)));
    json j;
    j["power"] = k ? json(*k) : json(nullptr);
    emit(j, as_json, k ? std::to_string(*k) : "none");
    exit_code = k ? kExitTrue : kExitFalse;
  });

  // apply
  std::string ap_spec, ap_word;
  auto *ap = app.add_subcommand("apply",
                                "apply an endomorphism spec to a TypeB word");
  add_common(ap);
  ap->add_option("spec", ap_spec, "endomorphism JSON (or @file)")->required();
  ap->add_option("word", ap_word)->required();
  ap->callback([&] {
    artin::EndoSpec spec = artin::endo_from_json(load_spec(ap_spec), n);
    artin::Word img =
        artin::apply(spec, artin::parse_word(ap_word, artin::type_b(spec.n)));
    emit(json{{"word", img.str()}}, as_json, img.str());
  });

  // verify
  std::string vf_spec;
  auto *vf = app.add_subcommand(
      "verify", "do the spec's images satisfy the defining relations?");
  add_common(vf, false);
  vf->add_option("spec", vf_spec, "endomorphism JSON (or @file)")->required();
  vf->callback([&] {
    bool ok =
        artin::verify_homomorphism(artin::endo_from_json(load_spec(vf_spec), n));
    emit(json{{"homomorphism", ok}}, as_json, ok ? "true" : "false");
    exit_code = ok ? kExitTrue : kExitFalse;
  });

  // classify
  std::string cl_spec;
  bool cl_bar = false;
  auto *cl = app.add_subcommand("classify",
                                "recover family and parameters from images");
  add_common(cl, false);
  cl->add_flag("--bar", cl_bar, "classify in the central quotient");
  cl->add_option("spec", cl_spec, "endomorphism JSON (or @file)")->required();
  cl->callback([&] {
    json spec_json = load_spec(cl_spec);
    json result;
    if (cl_bar) {
      artin::EndoSpec raw = artin::endo_from_json(spec_json, n);
      std::vector<artin::Word> images;
      for (int i = 1; i <= raw.n; ++i)
        images.push_back(artin::image_of_r(raw, i));
      auto res = artin::classify_bar(
          artin::BarEndoSpec::bar_raw(raw.n, std::move(images)));
      result = artin::bar_classification_to_json(res);
      if (res.verdict == artin::BarClassification::Verdict::Inconclusive &&
          res.hom_verified)
        std::cerr << "WARNING: verified bar-homomorphism did not match any "
                     "family; this contradicts the classification\n";
    } else {
      auto res =
          artin::classify_raw(artin::endo_from_json(spec_json, n));
      result = artin::classification_to_json(res);
      if (res.verdict == artin::ClassificationResult::Verdict::Inconclusive &&
          res.hom_verified)
        std::cerr << "WARNING: verified homomorphism did not match any "
                     "family; this contradicts the classification\n";
    }
    json with_schema = result;
    with_schema["schema"] = artin::kSchemaTag;
    std::cout << (as_json ? with_schema : result).dump() << "\n";
  });

  // identities
  std::string suite = "all";
  auto *ids = app.add_subcommand("identities",
                                 "verified identity suites at rank n");
  add_common(ids);
  ids->add_option("--suite", suite,
                  "semidirect, lemma42, section6, autrel, centralizer, all")
      ->capture_default_str();
  ids->callback([&] {
    auto checks = artin::run_identity_suite(suite, n);
    json results = json::array();
    for (const auto &c : checks) {
      results.push_back({{"name", c.name}, {"pass", c.pass}});
      if (!as_json)
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << "\n";
    }
    if (as_json) emit(json{{"results", results}}, true, "");
    exit_code = artin::all_pass(checks) ? kExitTrue : kExitFalse;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const artin::BudgetExceeded &e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitBudget;
  } catch (const artin::InvalidInput &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
