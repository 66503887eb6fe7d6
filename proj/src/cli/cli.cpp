#include "tcplan/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcplan/algebra/presentation_json.hpp"
#include "tcplan/algebra/zero_divisors.hpp"
#include "tcplan/catalog/bounds.hpp"
#include "tcplan/planner/arm.hpp"
#include "tcplan/planner/registry.hpp"
#include "tcplan/verify/report_json.hpp"

namespace tcplan::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

// Bad command-line values detected after parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Diagnostics {
 public:
  Diagnostics(std::ostream& err, bool color, bool quiet) : err_(err), color_(color), quiet_(quiet) {}

  void error(const std::string& msg) const { err_ << paint("31", "error:") << ' ' << msg << '\n'; }
  void status(bool ok, const std::string& msg) const {
    if (quiet_) return;
    err_ << (ok ? paint("32", "ok:") : paint("31", "FAIL:")) << ' ' << msg << '\n';
  }
  void note(const std::string& msg) const {
    if (!quiet_) err_ << msg << '\n';
  }

 private:
  std::string paint(const char* code, const std::string& text) const {
    return color_ ? "\033[" + std::string(code) + "m" + text + "\033[0m" : text;
  }
  std::ostream& err_;
  bool color_;
  bool quiet_;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (item.empty() || used != item.size()) throw InputError(what + ": bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError(what + ": no coordinates");
  return out;
}

struct Common {
  bool quiet = false;
};

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs : Common {
  std::string spec;
  std::string file;
};

ordered_json bounds_json(const std::string& space, const catalog::BoundsReport& b) {
  return ordered_json{{"space", space},
                      {"lower", b.lower},
                      {"upper", b.upper},
                      {"lower_provenance", b.lower_provenance},
                      {"upper_provenance", b.upper_provenance},
                      {"exact", b.exact}};
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out, const Diagnostics& diag) {
  if (a.spec.empty() == a.file.empty()) throw InputError("bounds takes exactly one of <spec> or --file");
  ordered_json j;
  if (!a.file.empty()) {
    const auto alg = algebra::validate_algebra(algebra::load_presentation(a.file));
    j = bounds_json(a.file, catalog::algebra_bounds(alg));
    j["note"] = "dimension inferred from the algebra's top degree (" + std::to_string(alg->top_degree()) + ")";
  } else {
    const auto space = catalog::catalog_space(a.spec);
    j = bounds_json(space.name(), catalog::tc_bounds(space));
  }
  out << j.dump(2) << '\n';
  diag.status(true, "TC in [" + std::to_string(j["lower"].get<int>()) + ", " + std::to_string(j["upper"].get<int>()) + "]");
  return kOk;
}

// ---- plan -----------------------------------------------------------------

struct PlanArgs : Common {
  std::string spec;
  std::string from;
  std::string to;
  std::size_t samples = 33;
  std::string format = "json";
  std::string kinematics;
};

int cmd_plan(const PlanArgs& a, std::ostream& out, const Diagnostics& diag) {
  const auto spec = catalog::parse_space_spec(a.spec);
  const planner::Planner p = planner::make_planner(spec);
  const auto& space = p.space();
  const planner::ConfigPoint from = space.canonicalize({parse_numbers(a.from, "--from")});
  const planner::ConfigPoint to = space.canonicalize({parse_numbers(a.to, "--to")});
  if (a.samples < 2) throw InputError("--samples must be at least 2");

  std::optional<std::vector<double>> lengths;
  if (!a.kinematics.empty()) lengths = parse_numbers(a.kinematics, "--kinematics");

  const auto result = p.plan(from, to);
  const auto samples = planner::sample_path(result.path, a.samples);
  std::vector<std::vector<std::vector<double>>> joints;
  if (lengths) {
    for (const auto& s : samples) joints.push_back(planner::forward_kinematics(space, s.point, *lengths));
  }

  if (a.format == "csv") {
    out << 't';
    for (std::size_t i = 1; i <= space.ambient_dim(); ++i) out << ",c" << i;
    if (lengths) {
      const std::size_t d = joints.front().front().size();
      for (std::size_t k = 0; k < joints.front().size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) out << ",j" << k << '_' << "xyz"[i];
      }
    }
    out << '\n';
    for (std::size_t n = 0; n < samples.size(); ++n) {
      out << format_double(samples[n].t);
      for (double c : samples[n].point.coords) out << ',' << format_double(c);
      if (lengths) {
        for (const auto& joint : joints[n]) {
          for (double c : joint) out << ',' << format_double(c);
        }
      }
      out << '\n';
    }
  } else {
    ordered_json j;
    j["space"] = p.name();
    j["from"] = from.coords;
    j["to"] = to.coords;
    j["rule_index"] = result.rule_index;
    j["rule"] = p.rule(result.rule_index - 1).description;
    ordered_json rows = ordered_json::array();
    for (const auto& s : samples) {
      ordered_json row = ordered_json::array({s.t});
      for (double c : s.point.coords) row.push_back(c);
      rows.push_back(std::move(row));
    }
    j["samples"] = std::move(rows);
    if (lengths) {
      j["bar_lengths"] = *lengths;
      j["joints"] = joints;
    }
    out << j.dump(2) << '\n';
  }
  diag.status(true, "planned by rule " + std::to_string(result.rule_index) + " of " + std::to_string(p.rule_count()));
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs : Common {
  std::string spec;
  verify::VerifyConfig cfg;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, const Diagnostics& diag) {
  const auto spec = catalog::parse_space_spec(a.spec);
  const planner::Planner p = planner::make_planner(spec);
  const auto space = catalog::catalog_space(spec);

  const auto report = verify::verify_planner(p, a.cfg);
  ordered_json j = verify::to_json(report);
  bool reconciled = true;
  if (space.known_tc) {
    try {
      j["reconcile"] = verify::to_json(verify::reconcile(p, space));
    } catch (const verify::VerifyError& e) {
      reconciled = false;
      j["reconcile"] = {{"rule_count", p.rule_count()},
                        {"known_tc", space.known_tc->value},
                        {"reconciled", false},
                        {"error", e.what()}};
    }
  }
  out << j.dump(2) << '\n';
  const bool ok = report.pass() && reconciled;
  diag.status(ok, p.name() + ": " + std::to_string(report.random_pairs + report.adversarial_pairs) + " pairs, " +
                      std::to_string(p.rule_count()) + " rules");
  return ok ? kOk : kFail;
}

// ---- algebra --------------------------------------------------------------

struct AlgebraArgs : Common {
  std::string file;
  std::string preset;
  bool exhaustive = false;
  bool do_export = false;
  std::optional<unsigned> max_len;
};

int cmd_algebra(const AlgebraArgs& a, std::ostream& out, const Diagnostics& diag) {
  if (a.file.empty() == a.preset.empty()) throw InputError("algebra takes exactly one of --file or --preset");
  if (a.do_export && a.preset.empty()) throw InputError("--export needs --preset");

  const algebra::AlgebraPtr alg = a.file.empty() ? catalog::catalog_space(a.preset).algebra
                                                 : algebra::validate_algebra(algebra::load_presentation(a.file));
  if (a.do_export) {
    out << algebra::presentation_to_json(alg->presentation()).dump(2) << '\n';
    return kOk;
  }

  algebra::ZdclOptions opts;
  opts.mode = a.exhaustive ? algebra::ZdclMode::Exhaustive : algebra::ZdclMode::Canonical;
  opts.max_len = a.max_len.value_or(std::max(1u, algebra::zdcl_length_cap(alg)));
  if (opts.max_len == 0) throw InputError("--max-len must be positive");
  if (!alg->generators().empty()) opts.generators = alg->generators();
  const auto result = algebra::zdcl(alg, opts);

  ordered_json j;
  j["source"] = a.file.empty() ? a.preset : a.file;
  j["dimension"] = alg->dimension();
  j["top_degree"] = alg->top_degree();
  j["mode"] = a.exhaustive ? "exhaustive" : "canonical";
  j["max_len"] = opts.max_len;
  j["length"] = result.length;
  ordered_json witness = ordered_json::array();
  for (const auto& w : result.witness) witness.push_back(algebra::element_to_json(w));
  j["witness"] = std::move(witness);
  j["product_value"] = algebra::element_to_json(result.product_value);
  j["tc_lower_bound"] = result.length + 1;
  out << j.dump(2) << '\n';
  diag.status(true, "zero-divisor cup-length " + std::to_string(result.length));
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color_allowed) {
  const bool color = color_allowed && std::getenv("NO_COLOR") == nullptr;

  CLI::App app{"Topological complexity bounds and explicit motion planners"};
  app.name("tcplan");
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Lower and upper bounds on TC for a catalog space or an algebra file");
  b->add_option("spec", bounds.spec, "Space, e.g. sphere:4 or product(sphere:2,sphere:2)");
  b->add_option("--file", bounds.file, "Algebra presentation (JSON)");
  b->add_flag("-q,--quiet", bounds.quiet, "Only print the JSON");

  PlanArgs plan;
  auto* p = app.add_subcommand("plan", "Plan a motion between two configurations");
  p->add_option("spec", plan.spec, "Space")->required();
  p->add_option("--from", plan.from, "Start point, comma-separated coordinates")->required();
  p->add_option("--to", plan.to, "End point, comma-separated coordinates")->required();
  p->add_option("--samples", plan.samples, "Number of path samples (>= 2)")->capture_default_str();
  p->add_option("--format", plan.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  p->add_option("--kinematics", plan.kinematics, "Bar lengths l1,l2,...; adds joint positions");
  p->add_flag("-q,--quiet", plan.quiet, "Only print the output");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a planner's section, coverage, continuity and geometry");
  v->add_option("spec", ver.spec, "Space")->required();
  v->add_option("--pairs", ver.cfg.pairs, "Random pairs")->capture_default_str();
  v->add_option("--seed", ver.cfg.seed, "Seed")->capture_default_str();
  v->add_option("--delta", ver.cfg.delta, "Perturbation size")->capture_default_str();
  v->add_option("--eta", ver.cfg.margin_eta, "Interior margin for the continuity check")->capture_default_str();
  v->add_option("--tol", ver.cfg.tolerance, "Endpoint and norm tolerance")->capture_default_str();
  v->add_flag("-q,--quiet", ver.quiet, "Only print the JSON");

  AlgebraArgs alg;
  auto* a = app.add_subcommand("algebra", "Zero-divisor cup-length of an algebra");
  a->add_option("--file", alg.file, "Algebra presentation (JSON)");
  a->add_option("--preset", alg.preset, "Use the algebra of a catalog space instead");
  a->add_flag("--exhaustive", alg.exhaustive, "Search products of a kernel basis instead of canonical divisors");
  a->add_option("--max-len", alg.max_len, "Longest product to search");
  a->add_flag("--export", alg.do_export, "With --preset: print the presentation JSON");
  a->add_flag("-q,--quiet", alg.quiet, "Only print the JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto run = [&](const Common& common, auto&& body) -> int {
    const Diagnostics diag(err, color, common.quiet);
    try {
      return body(diag);
    } catch (const planner::PlannerError& e) {
      diag.error(e.what());
      return e.code() == planner::PlannerErrc::CoverageGap ? kFail : kInputError;
    } catch (const InputError& e) {
      diag.error(e.what());
    } catch (const catalog::CatalogError& e) {
      diag.error(e.what());
    } catch (const algebra::AlgebraError& e) {
      diag.error(e.what());
    } catch (const verify::VerifyError& e) {
      diag.error(e.what());
    } catch (const std::exception& e) {
      diag.error(e.what());
    }
    return kInputError;
  };

  if (b->parsed()) return run(bounds, [&](const Diagnostics& d) { return cmd_bounds(bounds, out, d); });
  if (p->parsed()) return run(plan, [&](const Diagnostics& d) { return cmd_plan(plan, out, d); });
  if (v->parsed()) return run(ver, [&](const Diagnostics& d) { return cmd_verify(ver, out, d); });
  return run(alg, [&](const Diagnostics& d) { return cmd_algebra(alg, out, d); });
}

}  // namespace tcplan::cli
