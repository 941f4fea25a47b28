#include "artin/json_io.hpp"

#include "artin/parse.hpp"

namespace artin {

using nlohmann::json;

json nf_to_json(const BraidNF &nf) {
  json factors = json::array();
  for (const Permutation &f : nf.factors) factors.push_back(f.images());
  return json{{"rank", nf.rank}, {"inf", nf.inf}, {"factors", factors}};
}

BraidNF nf_from_json(const json &j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("inf") ||
      !j.contains("factors"))
    throw InvalidInput("normal-form JSON needs rank, inf, factors");
  BraidNF nf;
  nf.rank = j.at("rank").get<int>();
  nf.inf = j.at("inf").get<long long>();
  for (const auto &f : j.at("factors")) {
    auto images = f.get<std::vector<int>>();
    if (static_cast<int>(images.size()) != nf.rank + 1)
      throw InvalidInput("factor permutation has wrong size");
    nf.factors.emplace_back(std::move(images));
  }
  return nf;
}

json endo_to_json(const EndoSpec &spec) {
  using Kind = EndoSpec::Kind;
  switch (spec.kind) {
    case Kind::Compose:
      return json::array(
          {endo_to_json(*spec.outer), endo_to_json(*spec.inner)});
    case Kind::Type1:
    case Kind::StdI:
      return json{{"variant", to_string(spec.kind)},
                  {"n", spec.n},
                  {"g", spec.g->str()},
                  {"h", spec.h->str()}};
    case Kind::Type2a:
    case Kind::Type2b:
    case Kind::StdIIa:
    case Kind::StdIIb:
      return json{{"variant", to_string(spec.kind)},
                  {"n", spec.n},
                  {"eps", spec.eps},
                  {"p", spec.p},
                  {"q", spec.q}};
    case Kind::Type3:
      return json{{"variant", "Type3"}, {"n", spec.n}, {"eps", spec.eps},
                  {"k", spec.k},        {"p", spec.p}, {"q", spec.q},
                  {"r", spec.r},        {"s", spec.s}};
    case Kind::StdIIIa:
    case Kind::StdIIIb:
      return json{{"variant", to_string(spec.kind)},
                  {"n", spec.n},
                  {"eps", spec.eps},
                  {"p", spec.p},
                  {"q", spec.q},
                  {"r", spec.r},
                  {"s", spec.s}};
    case Kind::NamedT:
      return json{{"variant", "T"}, {"n", spec.n}, {"power", spec.t_power}};
    case Kind::NamedTau:
    case Kind::NamedMu:
      return json{{"variant", to_string(spec.kind)}, {"n", spec.n}};
    case Kind::Inner:
      return json{{"variant", "Inner"}, {"n", spec.n}, {"x", spec.x->str()}};
    case Kind::Raw: {
      json images = json::object();
      for (int i = 1; i <= spec.n; ++i)
        images["r" + std::to_string(i)] =
            spec.images[static_cast<std::size_t>(i - 1)].str();
      return json{{"variant", "Raw"}, {"n", spec.n}, {"images", images}};
    }
  }
  throw InvalidInput("endo_to_json: bad spec");
}

EndoSpec endo_from_json(const json &j, int default_n) {
  if (j.is_array()) {
    if (j.size() < 2)
      throw InvalidInput("composition array needs at least two specs");
    EndoSpec spec = endo_from_json(j.at(0), default_n);
    for (std::size_t i = 1; i < j.size(); ++i)
      spec = EndoSpec::compose(std::move(spec), endo_from_json(j.at(i), default_n));
    return spec;
  }
  if (!j.is_object() || !j.contains("variant"))
    throw InvalidInput("endomorphism JSON needs a variant");
  std::string variant = j.at("variant").get<std::string>();
  int n = j.value("n", default_n);
  if (n <= 0) throw InvalidInput("endomorphism JSON needs a rank n");

  auto word = [&](const char *key) {
    return parse_word(j.at(key).get<std::string>(), type_b(n));
  };
  auto eps = [&] { return j.value("eps", 1); };
  auto num = [&](const char *key) { return j.value(key, 0LL); };

  if (variant == "Type1") return EndoSpec::type1(n, word("g"), word("h"));
  if (variant == "StdI") return EndoSpec::std_i(n, word("g"), word("h"));
  if (variant == "Type2a")
    return EndoSpec::type2a(n, eps(), num("p"), num("q"));
  if (variant == "Type2b")
    return EndoSpec::type2b(n, eps(), num("p"), num("q"));
  if (variant == "StdIIa")
    return EndoSpec::std_iia(n, eps(), num("p"), num("q"));
  if (variant == "StdIIb")
    return EndoSpec::std_iib(n, eps(), num("p"), num("q"));
  if (variant == "Type3")
    return EndoSpec::type3(n, eps(), j.value("k", 0), num("p"), num("q"),
                           num("r"), num("s"));
  if (variant == "StdIIIa")
    return EndoSpec::std_iiia(n, eps(), num("p"), num("q"), num("r"),
                              num("s"));
  if (variant == "StdIIIb")
    return EndoSpec::std_iiib(n, eps(), num("p"), num("q"), num("r"),
                              num("s"));
  if (variant == "T")
    return EndoSpec::transvection(n, j.value("power", 1LL));
  if (variant == "Tau") return EndoSpec::tau(n);
  if (variant == "Mu") return EndoSpec::mu(n);
  if (variant == "Inner") return EndoSpec::conj(n, word("x"));
  if (variant == "Raw") {
    const json &images = j.at("images");
    std::vector<Word> v;
    for (int i = 1; i <= n; ++i) {
      std::string key = "r" + std::to_string(i);
      if (!images.contains(key))
        throw InvalidInput("Raw images missing " + key);
      v.push_back(parse_word(images.at(key).get<std::string>(), type_b(n)));
    }
    return EndoSpec::raw(n, std::move(v));
  }
  throw InvalidInput("unknown endomorphism variant '" + variant + "'");
}

json classification_to_json(const ClassificationResult &res) {
  using V = ClassificationResult::Verdict;
  json j{{"verdict", to_string(res.verdict)}};
  switch (res.verdict) {
    case V::Type2a:
    case V::Type2b:
      j["eps"] = res.eps;
      j["p"] = res.p;
      j["q"] = res.q;
      break;
    case V::Type3:
      j["eps"] = res.eps;
      j["k"] = res.k;
      j["p"] = res.p;
      j["q"] = res.q;
      j["r"] = res.r;
      j["s"] = res.s;
      break;
    case V::Inconclusive:
      j["hom_verified"] = res.hom_verified;
      break;
    default:
      break;
  }
  return j;
}

json bar_classification_to_json(const BarClassification &res) {
  using V = BarClassification::Verdict;
  json j{{"verdict", to_string(res.verdict)}};
  switch (res.verdict) {
    case V::BarType1:
      j["kappa"] = res.kappa;
      break;
    case V::BarType2a:
    case V::BarType2b:
      j["eps"] = res.eps;
      break;
    case V::Inconclusive:
      j["hom_verified"] = res.hom_verified;
      break;
    default:
      break;
  }
  return j;
}

}  // namespace artin
