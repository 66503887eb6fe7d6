#include "tcplan/planner/arm.hpp"

#include "tcplan/planner/product.hpp"
#include "tcplan/planner/spheres.hpp"

namespace tcplan::planner {

Planner arm_planner(ArmKind kind, int bars) {
  if (bars < 1) throw std::invalid_argument("arm_planner: need at least one bar");
  auto link = [kind] { return kind == ArmKind::Planar ? circle_planner() : sphere_planner(2); };
  Planner acc = link();
  for (int i = 1; i < bars; ++i) acc = product_planner(acc, link());
  if (bars > 1) {
    acc.set_name(kind == ArmKind::Planar ? "torus:" + std::to_string(bars)
                                         : "spatial_arm:" + std::to_string(bars));
  }
  return acc;
}

std::vector<std::vector<double>> forward_kinematics(const Space& space, const ConfigPoint& config,
                                                    const std::vector<double>& bar_lengths) {
  const auto& factors = space.factors();
  if (bar_lengths.size() != factors.size()) {
    throw PlannerError(PlannerErrc::LengthMismatch, std::to_string(bar_lengths.size()) + " bar lengths for " +
                                                        std::to_string(factors.size()) + " joints");
  }
  if (factors.empty()) return {};
  const std::size_t dim = factors.front().ambient();
  for (const auto& f : factors) {
    if (f.kind != FactorKind::Sphere || f.ambient() != dim || (dim != 2 && dim != 3)) {
      throw PlannerError(PlannerErrc::LengthMismatch, "arm kinematics needs all-circle or all-2-sphere factors");
    }
  }
  std::vector<std::vector<double>> joints{std::vector<double>(dim, 0.0)};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (!(bar_lengths[k] > 0.0)) throw PlannerError(PlannerErrc::LengthMismatch, "bar lengths must be positive");
    const auto dir = space.slice(config, k);
    std::vector<double> next = joints.back();
    for (std::size_t i = 0; i < dim; ++i) next[i] += bar_lengths[k] * dir[i];
    joints.push_back(std::move(next));
  }
  return joints;
}

}  // namespace tcplan::planner
