#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "tcplan/verify/verifier.hpp"

namespace tcplan::verify {

using planner::ConfigPoint;

// offset > 0 -> pair inside the rule's domain; offset -> 0 approaches a
// boundary pair.
using PairFamily = std::function<std::pair<ConfigPoint, ConfigPoint>(double offset)>;

struct DivergencePoint {
  double offset = 0.0;
  double gap = 0.0;  // sup over t of |s(family1)(t) - s(family2)(t)|
};

struct DivergenceReport {
  std::size_t rule_index = 0;  // 1-based
  std::vector<DivergencePoint> points;
  double min_gap = 0.0;
};

// Evaluates the rule's own section on both families at each offset.
// Throws VerifyError(FamilyLeavesDomain) if a family member has weight 0.
DivergenceReport demonstrate_discontinuity(const Planner& p, std::size_t rule_index, const PairFamily& first,
                                           const PairFamily& second, const std::vector<double>& offsets,
                                           std::size_t samples = 129);

// A = (1,0), B at angle pi - offset and pi + offset.
std::pair<PairFamily, PairFamily> circle_antipodal_families();
// A = north pole of S^n, B approaching the south pole from the +e1 and -e1
// sides along two halves of one great circle.
std::pair<PairFamily, PairFamily> sphere_antipodal_families(int n);

}  // namespace tcplan::verify
