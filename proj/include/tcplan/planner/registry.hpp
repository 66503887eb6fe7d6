#pragma once

#include "tcplan/catalog/space_spec.hpp"
#include "tcplan/planner/planner.hpp"

namespace tcplan::planner {

// Explicit planner for a catalog space: convex, circle, spheres, tori,
// surfaces of genus <= 1 and products of these. Throws NoPlanner for
// surface:g (g >= 2) and cpn:n.
Planner make_planner(const catalog::SpaceSpec& spec);

bool has_planner(const catalog::SpaceSpec& spec);

}  // namespace tcplan::planner
