#pragma once

#include <cstddef>
#include <string>

#include "tcplan/catalog/bounds.hpp"
#include "tcplan/planner/planner.hpp"

namespace tcplan::verify {

struct ReconcileReport {
  std::size_t rule_count = 0;
  int known_tc = 0;
  catalog::BoundsReport bounds;
};

// Requires space.known_tc (std::invalid_argument otherwise). Throws
// VerifyError(Mismatch) naming both numbers unless the rule count equals
// known_tc and tc_bounds(space, rule count) is exact at that value.
ReconcileReport reconcile(const planner::Planner& p, const catalog::SpaceDescriptor& space);

}  // namespace tcplan::verify
