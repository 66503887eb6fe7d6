#include "tcplan/verify/discontinuity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace tcplan::verify {

DivergenceReport demonstrate_discontinuity(const Planner& p, std::size_t rule_index, const PairFamily& first,
                                           const PairFamily& second, const std::vector<double>& offsets,
                                           std::size_t samples) {
  if (rule_index < 1 || rule_index > p.rule_count()) {
    throw VerifyError(VerifyErrc::BadConfig, "rule index " + std::to_string(rule_index) + " out of range");
  }
  const auto& rule = p.rule(rule_index - 1);
  DivergenceReport report;
  report.rule_index = rule_index;
  report.min_gap = offsets.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (double offset : offsets) {
    const auto [a1, b1] = first(offset);
    const auto [a2, b2] = second(offset);
    if (!rule.contains(a1, b1) || !rule.contains(a2, b2)) {
      throw VerifyError(VerifyErrc::FamilyLeavesDomain,
                        "family leaves the domain of rule " + std::to_string(rule_index) + " at offset " +
                            std::to_string(offset));
    }
    const auto s1 = planner::sample_path(rule.section(a1, b1), samples);
    const auto s2 = planner::sample_path(rule.section(a2, b2), samples);
    double gap = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      gap = std::max(gap, planner::distance(s1[k].point.coords, s2[k].point.coords));
    }
    report.points.push_back({offset, gap});
    report.min_gap = std::min(report.min_gap, gap);
  }
  return report;
}

std::pair<PairFamily, PairFamily> circle_antipodal_families() {
  auto family = [](double sign) {
    return [sign](double offset) {
      const double angle = std::numbers::pi + sign * offset;
      return std::pair{ConfigPoint{{1.0, 0.0}}, ConfigPoint{{std::cos(angle), std::sin(angle)}}};
    };
  };
  return {family(-1.0), family(1.0)};
}

std::pair<PairFamily, PairFamily> sphere_antipodal_families(int n) {
  const auto dim = static_cast<std::size_t>(n) + 1;
  auto family = [dim](double sign) {
    return [dim, sign](double offset) {
      ConfigPoint a{planner::unit_vector(dim, dim - 1)};
      ConfigPoint b{std::vector<double>(dim, 0.0)};
      b[0] = sign * std::sin(offset);
      b[dim - 1] = -std::cos(offset);
      return std::pair{std::move(a), std::move(b)};
    };
  };
  return {family(1.0), family(-1.0)};
}

}  // namespace tcplan::verify
