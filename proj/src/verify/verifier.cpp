#include "tcplan/verify/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "tcplan/verify/sampling.hpp"

namespace tcplan::verify {

using planner::ConfigPoint;
using planner::FactorKind;
using planner::Path;
using planner::PlannerErrc;
using planner::PlannerError;
using planner::Space;

const char* to_string(VerifyErrc code) {
  switch (code) {
    case VerifyErrc::FamilyLeavesDomain: return "FamilyLeavesDomain";
    case VerifyErrc::Mismatch: return "Mismatch";
    case VerifyErrc::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

VerifyError::VerifyError(VerifyErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void VerifyConfig::validate() const {
  if (pairs < 1) throw VerifyError(VerifyErrc::BadConfig, "pairs must be at least 1");
  if (!(delta > 0.0)) throw VerifyError(VerifyErrc::BadConfig, "delta must be positive");
  if (!(margin_eta >= 0.0 && margin_eta < 1.0)) throw VerifyError(VerifyErrc::BadConfig, "eta must lie in [0, 1)");
  if (!(tolerance > 0.0)) throw VerifyError(VerifyErrc::BadConfig, "tolerance must be positive");
  if (samples_per_path < 2) throw VerifyError(VerifyErrc::BadConfig, "samples_per_path must be at least 2");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kPerturbStream = 0x70E27B;
constexpr int kSpeedProbes = 4;

struct PairOutcome {
  bool covered = true;
  bool errored = false;
  std::string error;
  std::size_t rule = 0;  // 1-based; 0 when uncovered or errored
  std::vector<std::size_t> domain;
  double endpoint_error = 0.0;
  bool continuity_tested = false;
  double continuity_ratio = 0.0;
  double norm_deviation = 0.0;
  double min_radius = kInf;
  double speed_variation = 0.0;
};

double endpoint_error(const Path& path, const ConfigPoint& a, const ConfigPoint& b) {
  return std::max(planner::distance(path(0.0).coords, a.coords), planner::distance(path(1.0).coords, b.coords));
}

void check_geometry(const Space& space, const Path& path, std::size_t samples, PairOutcome& out) {
  for (const auto& s : planner::sample_path(path, samples)) {
    for (std::size_t k = 0; k < space.factors().size(); ++k) {
      const auto kind = space.factors()[k].kind;
      const double n = planner::norm(space.slice(s.point, k));
      if (kind == FactorKind::Sphere) out.norm_deviation = std::max(out.norm_deviation, std::abs(n - 1.0));
      if (kind == FactorKind::PuncturedPlane) out.min_radius = std::min(out.min_radius, n);
    }
  }
  for (const auto& seg : path.segments()) {
    const double len = seg.t1 - seg.t0;
    if (!seg.uniform_speed || !(len > 0.0)) continue;
    const double eps = 1e-4 * len;
    double lo = kInf, hi = 0.0;
    for (int k = 0; k < kSpeedProbes; ++k) {
      const double t = seg.t0 + (k + 0.5) / kSpeedProbes * len;
      const double v = planner::distance(path(t + eps).coords, path(t).coords) / eps;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    // A constant piece has no speed to compare.
    if (hi > 1e-9) out.speed_variation = std::max(out.speed_variation, (hi - lo) / hi);
  }
}

double sup_distance(const Path& x, const Path& y, std::size_t samples) {
  double sup = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = k + 1 == samples ? 1.0 : static_cast<double>(k) / static_cast<double>(samples - 1);
    sup = std::max(sup, planner::distance(x(t).coords, y(t).coords));
  }
  return sup;
}

void check_continuity(const Planner& p, const VerifyConfig& cfg, const ConfigPoint& a, const ConfigPoint& b,
                      const Path& path, std::uint64_t seed, PairOutcome& out) {
  const std::size_t i0 = out.rule - 1;
  if (p.weights(a, b)[i0] < cfg.margin_eta) return;
  Rng rng(seed);
  const ConfigPoint a2 = perturb(p.space(), a, cfg.delta, rng);
  const ConfigPoint b2 = perturb(p.space(), b, cfg.delta, rng);
  if (p.first_rule(a2, b2) != i0) return;
  if (p.signature(i0, a, b) != p.signature(i0, a2, b2)) return;
  const Path moved = p.rule(i0).section(a2, b2);
  out.continuity_tested = true;
  out.continuity_ratio = sup_distance(path, moved, cfg.samples_per_path) / cfg.delta;
}

PairOutcome evaluate_pair(const Planner& p, const VerifyConfig& cfg, const ConfigPoint& a, const ConfigPoint& b,
                          std::uint64_t perturb_seed) noexcept {
  PairOutcome out;
  try {
    const auto raw = p.raw_weights(a, b);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] > 0.0) out.domain.push_back(i + 1);
    }
    if (out.domain.empty()) {
      out.covered = false;
      return out;
    }
    out.rule = out.domain.front();
    const Path path = p.rule(out.rule - 1).section(a, b);
    out.endpoint_error = endpoint_error(path, a, b);
    for (std::size_t r : out.domain) {
      if (r != out.rule) out.endpoint_error = std::max(out.endpoint_error, endpoint_error(p.rule(r - 1).section(a, b), a, b));
    }
    check_geometry(p.space(), path, cfg.samples_per_path, out);
    check_continuity(p, cfg, a, b, path, perturb_seed, out);
  } catch (const PlannerError& e) {
    if (e.code() == PlannerErrc::CoverageGap) {
      out.covered = false;
    } else {
      out.errored = true;
      out.error = e.what();
    }
  } catch (const std::exception& e) {
    out.errored = true;
    out.error = e.what();
  }
  return out;
}

// Pairs 0 .. cfg.pairs - 1 are random, the rest come from the injection list.
struct PairSource {
  const Planner& p;
  const VerifyConfig& cfg;
  std::vector<std::pair<ConfigPoint, ConfigPoint>> adversarial;

  PairSource(const Planner& planner, const VerifyConfig& config)
      : p(planner), cfg(config), adversarial(adversarial_pairs(planner.space(), config.seed, config.adversarial_cap)) {}

  std::size_t size() const { return cfg.pairs + adversarial.size(); }

  PairOutcome run(std::size_t i) const {
    const std::uint64_t perturb_seed = stream_seed(cfg.seed ^ kPerturbStream, i);
    if (i >= cfg.pairs) {
      const auto& [a, b] = adversarial[i - cfg.pairs];
      return evaluate_pair(p, cfg, a, b, perturb_seed);
    }
    Rng rng(stream_seed(cfg.seed, i));
    const ConfigPoint a = random_point(p.space(), rng);
    const ConfigPoint b = random_point(p.space(), rng);
    return evaluate_pair(p, cfg, a, b, perturb_seed);
  }
};

VerifyReport reduce(const Planner& p, const VerifyConfig& cfg, const PairSource& source,
                    const std::vector<PairOutcome>& outcomes) {
  VerifyReport r;
  r.planner = p.name();
  r.rule_count = p.rule_count();
  r.config = cfg;
  r.random_pairs = cfg.pairs;
  r.adversarial_pairs = source.adversarial.size();
  r.rule_usage.assign(p.rule_count(), 0);
  r.rule_domain_hits.assign(p.rule_count(), 0);

  bool has_punctured = false;
  for (const auto& f : p.space().factors()) has_punctured = has_punctured || f.kind == FactorKind::PuncturedPlane;
  double min_radius = kInf;

  for (const auto& o : outcomes) {
    if (o.errored) {
      if (r.evaluation_errors++ == 0) r.first_error = o.error;
      continue;
    }
    if (!o.covered) {
      ++r.uncovered_pairs;
      continue;
    }
    ++r.rule_usage[o.rule - 1];
    for (std::size_t d : o.domain) ++r.rule_domain_hits[d - 1];
    r.max_endpoint_error = std::max(r.max_endpoint_error, o.endpoint_error);
    if (o.continuity_tested) {
      ++r.continuity_tested;
      // NaN must not hide behind std::max
      r.max_continuity_ratio = std::isnan(o.continuity_ratio) ? kInf : std::max(r.max_continuity_ratio, o.continuity_ratio);
    }
    r.max_norm_deviation = std::isnan(o.norm_deviation) ? kInf : std::max(r.max_norm_deviation, o.norm_deviation);
    min_radius = std::min(min_radius, o.min_radius);
    r.max_speed_variation = std::isnan(o.speed_variation) ? kInf : std::max(r.max_speed_variation, o.speed_variation);
  }
  if (has_punctured) r.min_radius = min_radius;

  r.section_pass = r.evaluation_errors == 0 && r.max_endpoint_error <= cfg.tolerance;
  r.coverage_pass = r.uncovered_pairs == 0;
  r.continuity_pass = std::isfinite(r.max_continuity_ratio) && r.max_continuity_ratio <= cfg.continuity_bound;
  r.geometry_pass = r.max_norm_deviation <= cfg.tolerance && r.max_speed_variation < cfg.speed_tolerance &&
                    (!r.min_radius || *r.min_radius > cfg.min_radius);
  return r;
}

}  // namespace

VerifyReport verify_planner(const Planner& p, const VerifyConfig& cfg) {
  cfg.validate();
  const PairSource source(p, cfg);
  const auto n = static_cast<std::int64_t>(source.size());
  std::vector<PairOutcome> outcomes(source.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = source.run(static_cast<std::size_t>(i));
  return reduce(p, cfg, source, outcomes);
}

VerifyReport verify_planner_serial(const Planner& p, const VerifyConfig& cfg) {
  cfg.validate();
  const PairSource source(p, cfg);
  std::vector<PairOutcome> outcomes;
  outcomes.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) outcomes.push_back(source.run(i));
  return reduce(p, cfg, source, outcomes);
}

}  // namespace tcplan::verify
