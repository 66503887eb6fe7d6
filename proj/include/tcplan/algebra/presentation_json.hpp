#pragma once

#include <string>

#include <json.hpp>

#include "tcplan/algebra/graded_algebra.hpp"

namespace tcplan::algebra {

// {"basis": [{"name", "degree"}], "unit", "products": [{"left", "right",
//  "result": [{"name", "coeff": "p/q"}]}], "generators"?: [name]}
// Throws AlgebraError(MalformedPresentation / BadCoefficient).
Presentation presentation_from_json(const nlohmann::json& doc);
Presentation load_presentation(const std::string& path);

nlohmann::ordered_json presentation_to_json(const Presentation& p);
nlohmann::ordered_json element_to_json(const AlgElement& x);

}  // namespace tcplan::algebra
