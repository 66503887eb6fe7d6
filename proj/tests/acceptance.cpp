// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tcplan/algebra/zero_divisors.hpp"
#include "tcplan/catalog/bounds.hpp"
#include "tcplan/catalog/catalog.hpp"
#include "tcplan/planner/registry.hpp"
#include "tcplan/planner/spheres.hpp"
#include "tcplan/planner/transfer.hpp"
#include "tcplan/verify/discontinuity.hpp"
#include "tcplan/verify/reconcile.hpp"
#include "tcplan/verify/verifier.hpp"

using namespace tcplan;
using algebra::AlgElement;
using algebra::Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

algebra::ZdclResult canonical_zdcl(const algebra::AlgebraPtr& a, unsigned max_len) {
  algebra::ZdclOptions o;
  o.max_len = max_len;
  if (!a->generators().empty()) o.generators = a->generators();
  return algebra::zdcl(a, o);
}

std::string product_of_spheres(int n) {
  std::string s = "product(";
  for (int i = 0; i < n; ++i) s += (i ? ",sphere:2" : "sphere:2");
  return s + ")";
}

void algebraic_identities(Outcome& o, double& budget) {
  budget = 1.0;
  for (int n : {2, 3}) {
    const auto sq = algebra::tensor_square(catalog::sphere_algebra(n));
    const auto bar = algebra::canonical_divisor(sq, "u");
    const auto expected = n == 2 ? AlgElement::from_labels(sq, {{"u⊗u", Rational(-2)}}) : AlgElement(sq);
    o.require(bar * bar == expected, "S^" + std::to_string(n) + " square");
  }
  for (int n = 1; n <= 4; ++n) {
    const auto sq = algebra::tensor_square(catalog::cpn_algebra(n));
    const auto bar = algebra::canonical_divisor(sq, "u");
    const std::string top = n == 1 ? "u" : "u^" + std::to_string(n);
    const Rational c((n % 2 == 0 ? 1 : -1) * binomial(2 * n, n));
    o.require(algebra::power(bar, 2 * n) == AlgElement::from_labels(sq, {{top + "⊗" + top, c}}),
              "CP^" + std::to_string(n) + " power");
  }
  const auto sq = algebra::tensor_square(catalog::surface_algebra(2));
  AlgElement prod = AlgElement::unit(sq);
  for (const char* g : {"u1", "v1", "u2", "v2"}) prod = prod * algebra::canonical_divisor(sq, g);
  o.require(prod == AlgElement::from_labels(sq, {{"A⊗A", Rational(2)}}), "genus-2 product");
  if (o.pass) o.detail << "S^2, S^3, CP^1..4, genus 2 exact";
}

void zdcl_values(Outcome& o, double& budget) {
  budget = 30.0;
  for (int n = 1; n <= 7; ++n) {
    const unsigned want = n % 2 == 0 ? 2 : 1;
    o.require(canonical_zdcl(catalog::sphere_algebra(n), 8).length == want, "S^" + std::to_string(n));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto a = n == 1 ? catalog::sphere_algebra(1, "a1") : catalog::torus_algebra(n);
    o.require(canonical_zdcl(a, 2 * n).length == static_cast<unsigned>(n), "T^" + std::to_string(n));
  }
  for (int n = 1; n <= 3; ++n) {
    const auto space = catalog::catalog_space(n == 1 ? std::string("sphere:2") : product_of_spheres(n));
    o.require(canonical_zdcl(space.algebra, 4 * n).length == static_cast<unsigned>(2 * n),
              "(S^2)^" + std::to_string(n));
  }
  if (o.pass) o.detail << "spheres 1..7, tori 1..4, (S^2)^1..3";
}

void bounds_exactness(Outcome& o, double& budget) {
  budget = 30.0;
  std::vector<std::pair<std::string, int>> cases;
  for (int n = 1; n <= 7; ++n) cases.emplace_back("sphere:" + std::to_string(n), n % 2 == 0 ? 3 : 2);
  for (int n = 1; n <= 6; ++n) cases.emplace_back("torus:" + std::to_string(n), n + 1);
  for (int n = 2; n <= 3; ++n) cases.emplace_back(product_of_spheres(n), 2 * n + 1);
  for (int g = 0; g <= 3; ++g) cases.emplace_back("surface:" + std::to_string(g), g <= 1 ? 3 : 5);
  for (const auto& [spec, tc] : cases) {
    const auto b = catalog::tc_bounds(catalog::catalog_space(spec));
    o.require(b.exact && b.lower == tc && b.upper == tc,
              spec + " gave [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]");
  }
  if (o.pass) o.detail << cases.size() << " spaces exact";
}

void planner_contracts(Outcome& o, double& budget) {
  budget = 120.0;
  verify::VerifyConfig cfg;  // seed 42, 1e4 pairs, tol 1e-9, delta 1e-4, eta 0.1
  for (const char* spec : {"convex:3", "circle", "sphere:2", "sphere:3", "torus:2", "torus:3", "torus:4",
                           "product(sphere:2,sphere:2)"}) {
    const auto p = planner::make_planner(catalog::parse_space_spec(spec));
    const auto r = verify::verify_planner(p, cfg);
    o.require(r.pass(), std::string(spec) + " failed verification");
    try {
      verify::reconcile(p, catalog::catalog_space(spec));
    } catch (const std::exception& e) {
      o.require(false, std::string(spec) + ": " + e.what());
    }
  }
  if (o.pass) o.detail << "8 planners pass and reconcile";
}

void oracle_equivalence(Outcome& o, double& budget) {
  budget = 60.0;
  const std::vector<std::pair<std::string, algebra::AlgebraPtr>> algebras{
      {"S^1", catalog::sphere_algebra(1)}, {"S^2", catalog::sphere_algebra(2)}, {"S^3", catalog::sphere_algebra(3)},
      {"T^2", catalog::torus_algebra(2)},  {"CP^1", catalog::cpn_algebra(1)}};
  for (const auto& [name, a] : algebras) {
    algebra::ZdclOptions ex;
    ex.mode = algebra::ZdclMode::Exhaustive;
    ex.max_len = 4;
    const auto e = algebra::zdcl(a, ex).length, c = canonical_zdcl(a, 4).length;
    o.require(e == c, name + ": exhaustive " + std::to_string(e) + " vs canonical " + std::to_string(c));
  }
  if (o.pass) o.detail << "5 algebras agree";
}

void discontinuity(Outcome& o, double& budget) {
  budget = 10.0;
  const std::vector<double> offsets{1e-1, 1e-2, 1e-3, 1e-4};
  const auto run = [&](const char* name, const planner::Planner& p, const auto& families) {
    const auto r = verify::demonstrate_discontinuity(p, 1, families.first, families.second, offsets);
    for (const auto& pt : r.points) {
      o.require(pt.gap > 0.0, std::string(name) + " gap vanished");
      if (pt.offset == 1e-3) o.require(pt.gap >= 1.0, std::string(name) + " gap below 1 at 1e-3");
    }
    return r.min_gap;
  };
  const double c = run("circle", planner::circle_planner(), verify::circle_antipodal_families());
  const double s = run("sphere:2", planner::sphere_planner(2), verify::sphere_antipodal_families(2));
  if (o.pass) o.detail << "min gap circle " << c << ", sphere:2 " << s;
}

void punctured_plane(Outcome& o, double& budget) {
  budget = 60.0;
  const auto p = planner::transfer_planner(planner::circle_planner(), planner::punctured_plane_retraction());
  o.require(p.rule_count() == 2, "rule count " + std::to_string(p.rule_count()));
  const auto r = verify::verify_planner(p, verify::VerifyConfig{});
  o.require(r.section_pass && r.max_endpoint_error <= 1e-9, "section property");
  o.require(r.coverage_pass, "coverage");
  o.require(r.min_radius && *r.min_radius > 1e-6, "path approaches the origin");
  if (o.pass) o.detail << "2 rules, max endpoint error " << r.max_endpoint_error << ", min radius " << *r.min_radius;
}

}  // namespace

int main() {
  using Check = void (*)(Outcome&, double&);
  const std::vector<std::pair<const char*, Check>> criteria{
      {"algebraic identities", algebraic_identities}, {"zdcl values", zdcl_values},
      {"tc_bounds exactness", bounds_exactness},      {"planner contracts", planner_contracts},
      {"oracle equivalence", oracle_equivalence},     {"discontinuity demonstrations", discontinuity},
      {"punctured-plane transfer planner", punctured_plane}};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    double budget = 0.0;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o, budget);
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < budget, "over time budget");
    std::printf("[%s] criterion %zu: %s (%s; %.2fs of %.0fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.str().c_str(), secs, budget);
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
