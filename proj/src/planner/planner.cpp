#include "tcplan/planner/planner.hpp"

namespace tcplan::planner {

Planner::Planner(std::string name, Space space, std::vector<PlannerRule> rules)
    : name_(std::move(name)), space_(std::move(space)), rules_(std::move(rules)) {}

std::vector<double> Planner::raw_weights(const ConfigPoint& a, const ConfigPoint& b) const {
  if (weights_fn_) return weights_fn_(a, b);
  std::vector<double> w;
  w.reserve(rules_.size());
  for (const auto& r : rules_) w.push_back(r.weight(a, b));
  return w;
}

std::vector<double> Planner::weights(const ConfigPoint& a, const ConfigPoint& b) const {
  std::vector<double> w = raw_weights(a, b);
  double total = 0.0;
  for (double v : w) total += v;
  if (!(total > 0.0)) throw PlannerError(PlannerErrc::CoverageGap, name_ + ": no rule covers the pair");
  for (double& v : w) v /= total;
  return w;
}

std::size_t Planner::first_rule(const ConfigPoint& a, const ConfigPoint& b) const {
  if (weights_fn_) {
    const auto w = weights_fn_(a, b);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] > 0.0) return i;
    }
  } else {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (rules_[i].contains(a, b)) return i;
    }
  }
  throw PlannerError(PlannerErrc::CoverageGap, name_ + ": no rule covers the pair");
}

PlanResult Planner::plan(const ConfigPoint& a, const ConfigPoint& b) const {
  const std::size_t i = first_rule(a, b);
  return {i + 1, rules_[i].section(a, b)};
}

CellSignature Planner::signature(std::size_t rule_index0, const ConfigPoint& a, const ConfigPoint& b) const {
  if (signature_fn_) return signature_fn_(rule_index0, a, b);
  return {rule_index0};
}

PlanResult plan(const Planner& p, const ConfigPoint& a, const ConfigPoint& b) { return p.plan(a, b); }

}  // namespace tcplan::planner
