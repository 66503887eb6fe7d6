#pragma once

#include <json.hpp>

#include "tcplan/verify/discontinuity.hpp"
#include "tcplan/verify/reconcile.hpp"
#include "tcplan/verify/verifier.hpp"

namespace tcplan::verify {

nlohmann::ordered_json to_json(const VerifyConfig& cfg);
nlohmann::ordered_json to_json(const VerifyReport& report);
nlohmann::ordered_json to_json(const ReconcileReport& report);
nlohmann::ordered_json to_json(const DivergenceReport& report);

}  // namespace tcplan::verify
