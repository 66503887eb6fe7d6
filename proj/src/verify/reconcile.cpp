#include "tcplan/verify/reconcile.hpp"

#include <stdexcept>

#include "tcplan/verify/verifier.hpp"

namespace tcplan::verify {

ReconcileReport reconcile(const planner::Planner& p, const catalog::SpaceDescriptor& space) {
  if (!space.known_tc) throw std::invalid_argument("no known TC recorded for " + space.name());
  ReconcileReport r;
  r.rule_count = p.rule_count();
  r.known_tc = space.known_tc->value;
  r.bounds = catalog::tc_bounds(space, static_cast<int>(r.rule_count));
  const auto rules = static_cast<int>(r.rule_count);
  if (rules != r.known_tc) {
    throw VerifyError(VerifyErrc::Mismatch, "planner has " + std::to_string(rules) + " rules, known TC is " +
                                                std::to_string(r.known_tc));
  }
  if (!r.bounds.exact || r.bounds.upper != r.known_tc) {
    throw VerifyError(VerifyErrc::Mismatch, "bounds [" + std::to_string(r.bounds.lower) + ", " +
                                                std::to_string(r.bounds.upper) + "] do not pin known TC " +
                                                std::to_string(r.known_tc));
  }
  return r;
}

}  // namespace tcplan::verify
