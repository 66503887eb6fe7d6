#pragma once

#include <optional>
#include <string>

#include "tcplan/catalog/catalog.hpp"

namespace tcplan::catalog {

// Provenance tags:
//   lower: "zdcl" (cup-length of zero divisors + 1), "category" (cat <= TC),
//          "noncontractible" (TC >= 2), "contractible" (TC = 1)
//   upper: "planner" (rule count of an explicit planner), "product_inequality"
//          (TC(XxY) <= TC(X) + TC(Y) - 1), "dimension" (2 dim + 1),
//          "category" (2 cat - 1), "contractible"
struct BoundsReport {
  int lower = 1;
  int upper = 1;
  std::string lower_provenance;
  std::string upper_provenance;
  bool exact = false;
  unsigned zdcl = 0;
};

BoundsReport tc_bounds(const SpaceDescriptor& space, std::optional<int> planner_rule_count = std::nullopt);

// Bounds for a bare cohomology algebra: lower from zdcl + 1, upper from
// 2 * (top degree) + 1 with the dimension taken to be the top degree.
BoundsReport algebra_bounds(const AlgebraPtr& algebra);

}  // namespace tcplan::catalog
