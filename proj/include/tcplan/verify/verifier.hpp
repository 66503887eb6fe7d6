#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcplan/planner/planner.hpp"

namespace tcplan::verify {

using planner::Planner;

enum class VerifyErrc { FamilyLeavesDomain, Mismatch, BadConfig };

const char* to_string(VerifyErrc code);

class VerifyError : public std::runtime_error {
 public:
  VerifyError(VerifyErrc code, const std::string& what);
  VerifyErrc code() const noexcept { return code_; }

 private:
  VerifyErrc code_;
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t pairs = 10000;
  double delta = 1e-4;
  double margin_eta = 0.1;
  double tolerance = 1e-9;
  std::size_t samples_per_path = 33;
  // Empirical regression guard on sup-distance / delta.
  double continuity_bound = 200.0;
  double speed_tolerance = 0.01;
  double min_radius = 1e-6;
  std::size_t adversarial_cap = 2048;

  // Throws VerifyError(BadConfig).
  void validate() const;
  friend bool operator==(const VerifyConfig&, const VerifyConfig&) = default;
};

struct VerifyReport {
  std::string planner;
  std::size_t rule_count = 0;
  VerifyConfig config;
  std::size_t random_pairs = 0;
  std::size_t adversarial_pairs = 0;

  bool section_pass = false;
  double max_endpoint_error = 0.0;
  std::size_t evaluation_errors = 0;
  std::string first_error;

  bool coverage_pass = false;
  std::size_t uncovered_pairs = 0;

  bool continuity_pass = false;
  std::size_t continuity_tested = 0;
  double max_continuity_ratio = 0.0;

  bool geometry_pass = false;
  double max_norm_deviation = 0.0;
  std::optional<double> min_radius;  // punctured-plane factors only
  double max_speed_variation = 0.0;

  // Index r - 1 counts pairs planned by rule r (first match) and pairs in
  // the domain of rule r, respectively.
  std::vector<std::size_t> rule_usage;
  std::vector<std::size_t> rule_domain_hits;

  bool pass() const { return section_pass && coverage_pass && continuity_pass && geometry_pass; }
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// Random pairs are seeded per index, so both versions return identical
// reports. verify_planner spreads the pairs over OpenMP threads.
VerifyReport verify_planner(const Planner& p, const VerifyConfig& cfg = {});
VerifyReport verify_planner_serial(const Planner& p, const VerifyConfig& cfg = {});

}  // namespace tcplan::verify
