#pragma once

#include <vector>

#include "tcplan/planner/planner.hpp"

namespace tcplan::planner {

enum class ArmKind { Planar, Spatial };

// Left fold of product_planner over n circle planners (planar, n + 1 rules)
// or n sphere:2 planners (spatial, 2n + 1 rules).
Planner arm_planner(ArmKind kind, int bars);

// Joint positions of a bar chain anchored at the origin. Each factor of the
// configuration is a unit direction: a circle factor (cos a, sin a) for
// planar arms, a 2-sphere factor for spatial ones. Returns bars + 1 points.
// Throws LengthMismatch when lengths and factors disagree.
std::vector<std::vector<double>> forward_kinematics(const Space& space, const ConfigPoint& config,
                                                    const std::vector<double>& bar_lengths);

}  // namespace tcplan::planner
