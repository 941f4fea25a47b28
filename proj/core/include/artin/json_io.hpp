#pragma once

#include <json.hpp>

#include "artin/classify.hpp"
#include "artin/endo.hpp"
#include "artin/garside.hpp"

namespace artin {

inline constexpr const char *kSchemaTag = "artin-bn/1";

nlohmann::json nf_to_json(const BraidNF &nf);
BraidNF nf_from_json(const nlohmann::json &j);

nlohmann::json endo_to_json(const EndoSpec &spec);

/// Parse an EndoSpec from JSON. A nested array denotes composition,
/// outermost first. `default_n` supplies the rank when the object omits
/// "n" (0 = required).
EndoSpec endo_from_json(const nlohmann::json &j, int default_n = 0);

nlohmann::json classification_to_json(const ClassificationResult &res);
nlohmann::json bar_classification_to_json(const BarClassification &res);

}  // namespace artin
