#pragma once

#include <json.hpp>

#include "petit/automorphism.hpp"
#include "petit/isomorphism.hpp"

namespace petit {

using Json = nlohmann::json;

Json field_to_json(const GaloisExtension& ext);
GaloisExtension field_from_json(const Json& j);

/// {"field": <descriptor>, "f": [coefficient literals, ..., "1"]}
Json algebra_to_json(const PetitAlgebra& A);
PetitAlgebra algebra_from_json(const Json& j);

Json group_report_to_json(const GroupReport& rep);
Json classify_report_to_json(const ClassifyReport& rep);

}  // namespace petit
