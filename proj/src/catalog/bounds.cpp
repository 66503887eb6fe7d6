#include "tcplan/catalog/bounds.hpp"

#include <vector>

#include "tcplan/algebra/zero_divisors.hpp"

namespace tcplan::catalog {

namespace {

struct Candidate {
  int value;
  const char* provenance;
};

// Candidates are listed in order of preference; ties keep the earlier one.
Candidate best_lower(const std::vector<Candidate>& cs) {
  Candidate best = cs.front();
  for (const auto& c : cs) {
    if (c.value > best.value) best = c;
  }
  return best;
}

Candidate best_upper(const std::vector<Candidate>& cs) {
  Candidate best = cs.front();
  for (const auto& c : cs) {
    if (c.value < best.value) best = c;
  }
  return best;
}

unsigned zero_divisor_cup_length(const AlgebraPtr& a) {
  const unsigned cap = algebra::zdcl_length_cap(a);
  if (cap == 0) return 0;
  algebra::ZdclOptions opts;
  opts.mode = algebra::ZdclMode::Canonical;
  opts.max_len = cap;
  if (!a->generators().empty()) opts.generators = a->generators();
  return algebra::zdcl(a, opts).length;
}

}  // namespace

BoundsReport tc_bounds(const SpaceDescriptor& space, std::optional<int> planner_rule_count) {
  BoundsReport r;
  if (space.contractible) {
    r.lower = r.upper = 1;
    r.lower_provenance = r.upper_provenance = "contractible";
    r.exact = true;
    return r;
  }
  r.zdcl = zero_divisor_cup_length(space.algebra);

  std::vector<Candidate> lower{{static_cast<int>(r.zdcl) + 1, "zdcl"}};
  if (space.cat) lower.push_back({*space.cat, "category"});
  lower.push_back({2, "noncontractible"});

  std::vector<Candidate> upper;
  if (planner_rule_count) upper.push_back({*planner_rule_count, "planner"});
  if (space.planner_rules) upper.push_back({*space.planner_rules, "planner"});
  if (!space.factors.empty()) {
    int sum = 0;
    for (const auto& f : space.factors) sum += tc_bounds(f).upper;
    upper.push_back({sum - static_cast<int>(space.factors.size() - 1), "product_inequality"});
  }
  upper.push_back({2 * space.geometry_dim + 1, "dimension"});
  if (space.cat) upper.push_back({2 * *space.cat - 1, "category"});

  const Candidate lo = best_lower(lower);
  const Candidate hi = best_upper(upper);
  r.lower = lo.value;
  r.lower_provenance = lo.provenance;
  r.upper = hi.value;
  r.upper_provenance = hi.provenance;
  r.exact = r.lower == r.upper;
  return r;
}

BoundsReport algebra_bounds(const AlgebraPtr& algebra) {
  BoundsReport r;
  r.zdcl = zero_divisor_cup_length(algebra);
  r.lower = static_cast<int>(r.zdcl) + 1;
  r.lower_provenance = "zdcl";
  r.upper = 2 * algebra->top_degree() + 1;
  r.upper_provenance = "dimension";
  r.exact = r.lower == r.upper;
  return r;
}

}  // namespace tcplan::catalog
