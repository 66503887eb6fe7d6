#include "tcplan/verify/report_json.hpp"

namespace tcplan::verify {

using nlohmann::ordered_json;

ordered_json to_json(const VerifyConfig& cfg) {
  return ordered_json{{"seed", cfg.seed},
                      {"pairs", cfg.pairs},
                      {"delta", cfg.delta},
                      {"margin_eta", cfg.margin_eta},
                      {"tolerance", cfg.tolerance},
                      {"samples_per_path", cfg.samples_per_path},
                      {"continuity_bound", cfg.continuity_bound},
                      {"speed_tolerance", cfg.speed_tolerance},
                      {"min_radius", cfg.min_radius},
                      {"adversarial_cap", cfg.adversarial_cap}};
}

ordered_json to_json(const VerifyReport& r) {
  ordered_json checks;
  checks["section"] = {{"pass", r.section_pass},
                       {"max_endpoint_error", r.max_endpoint_error},
                       {"evaluation_errors", r.evaluation_errors}};
  if (!r.first_error.empty()) checks["section"]["first_error"] = r.first_error;
  checks["coverage"] = {{"pass", r.coverage_pass}, {"uncovered_pairs", r.uncovered_pairs}};
  checks["continuity"] = {{"pass", r.continuity_pass},
                          {"tested_pairs", r.continuity_tested},
                          {"max_ratio", r.max_continuity_ratio},
                          {"bound", r.config.continuity_bound}};
  checks["geometry"] = {{"pass", r.geometry_pass},
                        {"max_norm_deviation", r.max_norm_deviation},
                        {"min_radius", r.min_radius ? ordered_json(*r.min_radius) : ordered_json(nullptr)},
                        {"max_speed_variation", r.max_speed_variation}};

  ordered_json j;
  j["planner"] = r.planner;
  j["rule_count"] = r.rule_count;
  j["pass"] = r.pass();
  j["config"] = to_json(r.config);
  j["pairs"] = {{"random", r.random_pairs}, {"adversarial", r.adversarial_pairs}};
  j["checks"] = std::move(checks);
  j["rule_usage"] = r.rule_usage;
  j["rule_domain_hits"] = r.rule_domain_hits;
  return j;
}

ordered_json to_json(const ReconcileReport& r) {
  return ordered_json{{"rule_count", r.rule_count},
                      {"known_tc", r.known_tc},
                      {"lower", r.bounds.lower},
                      {"upper", r.bounds.upper},
                      {"exact", r.bounds.exact},
                      {"reconciled", true}};
}

ordered_json to_json(const DivergenceReport& r) {
  ordered_json points = ordered_json::array();
  for (const auto& p : r.points) points.push_back({{"offset", p.offset}, {"gap", p.gap}});
  return ordered_json{{"rule_index", r.rule_index}, {"points", std::move(points)}, {"min_gap", r.min_gap}};
}

}  // namespace tcplan::verify
