#include "tcplan/planner/registry.hpp"

#include "tcplan/planner/arm.hpp"
#include "tcplan/planner/product.hpp"
#include "tcplan/planner/spheres.hpp"

namespace tcplan::planner {

using catalog::SpaceKind;

namespace {

Planner build(const catalog::SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::Convex: return straight_line_planner(spec.param);
    case SpaceKind::Circle: return circle_planner();
    case SpaceKind::Sphere: return sphere_planner(spec.param);
    case SpaceKind::Torus: return spec.param == 1 ? circle_planner() : arm_planner(ArmKind::Planar, spec.param);
    case SpaceKind::Surface:
      if (spec.param == 0) return sphere_planner(2);
      if (spec.param == 1) return arm_planner(ArmKind::Planar, 2);
      throw PlannerError(PlannerErrc::NoPlanner, spec.to_string() +
                                                     ": no explicit planner is known for surfaces of genus >= 2");
    case SpaceKind::ComplexProjective:
      throw PlannerError(PlannerErrc::NoPlanner,
                         spec.to_string() + ": no explicit planner is known for complex projective spaces");
    case SpaceKind::Product: {
      Planner acc = build(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i) acc = product_planner(acc, build(spec.factors[i]));
      return acc;
    }
  }
  throw PlannerError(PlannerErrc::NoPlanner, spec.to_string());
}

}  // namespace

Planner make_planner(const catalog::SpaceSpec& spec) {
  Planner p = build(spec);
  p.set_name(spec.to_string());
  return p;
}

bool has_planner(const catalog::SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::Surface: return spec.param <= 1;
    case SpaceKind::ComplexProjective: return false;
    case SpaceKind::Product:
      for (const auto& f : spec.factors) {
        if (!has_planner(f)) return false;
      }
      return true;
    default: return true;
  }
}

}  // namespace tcplan::planner
