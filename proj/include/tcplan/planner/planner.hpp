#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tcplan/planner/geometry.hpp"
#include "tcplan/planner/path.hpp"

namespace tcplan::planner {

// One open set U_i of X x X with its continuous section. The rule's domain is
// exactly {weight > 0}; weight is continuous with values in [0,1].
struct PlannerRule {
  std::function<double(const ConfigPoint&, const ConfigPoint&)> weight;
  std::function<Path(const ConfigPoint&, const ConfigPoint&)> section;
  std::string description;

  bool contains(const ConfigPoint& a, const ConfigPoint& b) const { return weight(a, b) > 0.0; }
};

struct PlanResult {
  std::size_t rule_index = 0;  // 1-based
  Path path;
};

// Identifies the piece of a rule's domain whose section formula is in use;
// pairs with equal signatures are planned by the same continuous formula.
using CellSignature = std::vector<std::uint64_t>;

class Planner {
 public:
  using WeightsFn = std::function<std::vector<double>(const ConfigPoint&, const ConfigPoint&)>;
  using SignatureFn = std::function<CellSignature(std::size_t, const ConfigPoint&, const ConfigPoint&)>;

  Planner(std::string name, Space space, std::vector<PlannerRule> rules);

  const std::string& name() const { return name_; }
  const Space& space() const { return space_; }
  std::size_t rule_count() const { return rules_.size(); }
  const PlannerRule& rule(std::size_t index0) const { return rules_.at(index0); }

  // Unnormalized weights of every rule.
  std::vector<double> raw_weights(const ConfigPoint& a, const ConfigPoint& b) const;
  // Partition of unity subordinate to the rule domains. Throws CoverageGap
  // if every weight vanishes.
  std::vector<double> weights(const ConfigPoint& a, const ConfigPoint& b) const;

  // Lowest-index rule whose domain contains (a, b).
  PlanResult plan(const ConfigPoint& a, const ConfigPoint& b) const;
  std::size_t first_rule(const ConfigPoint& a, const ConfigPoint& b) const;

  // rule_index0 is 0-based; (a, b) must lie in that rule's domain.
  CellSignature signature(std::size_t rule_index0, const ConfigPoint& a, const ConfigPoint& b) const;

  // Faster joint evaluation of all weights; must agree with the per-rule ones.
  void set_weights_fn(WeightsFn fn) { weights_fn_ = std::move(fn); }
  void set_name(std::string name) { name_ = std::move(name); }
  void set_signature_fn(SignatureFn fn) { signature_fn_ = std::move(fn); }

 private:
  std::string name_;
  Space space_;
  std::vector<PlannerRule> rules_;
  WeightsFn weights_fn_;
  SignatureFn signature_fn_;
};

PlanResult plan(const Planner& p, const ConfigPoint& a, const ConfigPoint& b);

}  // namespace tcplan::planner
