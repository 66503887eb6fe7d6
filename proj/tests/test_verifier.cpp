#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tcplan/catalog/catalog.hpp"
#include "tcplan/planner/registry.hpp"
#include "tcplan/planner/spheres.hpp"
#include "tcplan/planner/transfer.hpp"
#include "tcplan/verify/discontinuity.hpp"
#include "tcplan/verify/reconcile.hpp"
#include "tcplan/verify/report_json.hpp"
#include "tcplan/verify/sampling.hpp"
#include "tcplan/verify/verifier.hpp"

using namespace tcplan;
using namespace tcplan::verify;
using planner::ConfigPoint;

namespace {

planner::Planner planner_for(const char* spec) { return planner::make_planner(catalog::parse_space_spec(spec)); }

VerifyErrc verify_code(auto&& fn) {
  try {
    fn();
  } catch (const VerifyError& e) {
    return e.code();
  }
  FAIL("no VerifyError");
  return VerifyErrc::BadConfig;
}

// Circle planner variants that break one contract each.
planner::Planner broken_circle(int which) {
  using planner::PlannerRule;
  const auto good = planner::circle_planner();
  PlannerRule r1 = good.rule(0), r2 = good.rule(1);
  switch (which) {
    case 0:  // endpoints off by a quarter turn
      r2.section = [](const ConfigPoint& a, const ConfigPoint&) { return planner::geodesic_arc(a, ConfigPoint{{0.0, 1.0}}); };
      break;
    case 1:  // rule 2 dropped
      return planner::Planner("circle-gap", planner::Space::sphere(1), {r1});
    case 2:  // shortest arc claimed on all of X x X
      r1.weight = [](const ConfigPoint&, const ConfigPoint&) { return 1.0; };
      r1.section = [](const ConfigPoint& a, const ConfigPoint& b) {
        const double d = planner::distance(a.coords, b.coords);
        return d < 2.0 - 1e-15 ? planner::geodesic_arc(a, b) : planner::counterclockwise_arc(a, b);
      };
      break;
    case 3:  // chords leave the circle
      r1.section = [](const ConfigPoint& a, const ConfigPoint& b) { return planner::straight_segment(a, b); };
      break;
    default: break;
  }
  return planner::Planner("circle-broken", planner::Space::sphere(1), {r1, r2});
}

}  // namespace

TEST_SUITE("verify_planner") {
  TEST_CASE("circle passes and rule 2 fires") {
    const auto r = verify_planner(planner::circle_planner());
    CHECK(r.pass());
    CHECK(r.random_pairs == 10000);
    CHECK(r.adversarial_pairs > 0);
    REQUIRE(r.rule_usage.size() == 2);
    CHECK(r.rule_usage[1] > 0);
    CHECK(r.max_endpoint_error <= 1e-9);
    CHECK(r.continuity_tested > 1000);
    CHECK(std::isfinite(r.max_continuity_ratio));
    CHECK(r.max_continuity_ratio <= 200.0);
    CHECK_FALSE(r.min_radius.has_value());
  }

  TEST_CASE("sphere:2 passes and all three rules fire") {
    const auto p = planner_for("sphere:2");
    const auto r = verify_planner(p);
    CHECK(r.pass());
    REQUIRE(r.rule_usage.size() == 3);
    for (auto u : r.rule_usage) CHECK(u > 0);
    CHECK(p.plan(ConfigPoint{{0, 0, -1}}, ConfigPoint{{0, 0, 1}}).rule_index == 3);
  }

  TEST_CASE("torus:4 passes with every level exercised") {
    const auto r = verify_planner(planner_for("torus:4"));
    CHECK(r.pass());
    REQUIRE(r.rule_domain_hits.size() == 5);
    for (auto h : r.rule_domain_hits) CHECK(h > 0);
  }

  TEST_CASE("punctured plane reports its minimum radius") {
    const auto p = planner::transfer_planner(planner::circle_planner(), planner::punctured_plane_retraction());
    VerifyConfig cfg;
    cfg.pairs = 2000;
    const auto r = verify_planner(p, cfg);
    CHECK(r.pass());
    REQUIRE(r.min_radius.has_value());
    CHECK(*r.min_radius > 1e-6);
  }

  TEST_CASE("broken planners are caught") {
    VerifyConfig cfg;
    cfg.pairs = 3000;
    const auto section = verify_planner(broken_circle(0), cfg);
    CHECK_FALSE(section.section_pass);
    CHECK(section.max_endpoint_error > 0.5);

    const auto coverage = verify_planner(broken_circle(1), cfg);
    CHECK_FALSE(coverage.coverage_pass);
    CHECK(coverage.uncovered_pairs > 0);

    const auto continuity = verify_planner(broken_circle(2), cfg);
    CHECK_FALSE(continuity.continuity_pass);
    CHECK(continuity.max_continuity_ratio > 200.0);

    const auto geometry = verify_planner(broken_circle(3), cfg);
    CHECK_FALSE(geometry.geometry_pass);
    CHECK(geometry.max_norm_deviation > 0.1);
    for (const auto& r : {section, coverage, continuity, geometry}) CHECK_FALSE(r.pass());
  }

  TEST_CASE("parallel and serial reports agree and are reproducible") {
    for (const char* s : {"circle", "sphere:2", "torus:3", "product(sphere:2,sphere:2)"}) {
      CAPTURE(s);
      const auto p = planner_for(s);
      VerifyConfig cfg;
      cfg.pairs = 1500;
      cfg.seed = 7;
      const auto a = verify_planner(p, cfg), b = verify_planner(p, cfg), c = verify_planner_serial(p, cfg);
      CHECK(a == b);
      CHECK(a == c);
      CHECK(to_json(a).dump() == to_json(c).dump());
      cfg.seed = 8;
      CHECK(verify_planner(p, cfg).max_continuity_ratio != a.max_continuity_ratio);
    }
  }

  TEST_CASE("config validation") {
    const auto p = planner::circle_planner();
    auto bad = [&](auto mutate) {
      VerifyConfig cfg;
      mutate(cfg);
      CHECK(verify_code([&] { verify_planner(p, cfg); }) == VerifyErrc::BadConfig);
      CHECK(verify_code([&] { cfg.validate(); }) == VerifyErrc::BadConfig);
    };
    bad([](VerifyConfig& c) { c.pairs = 0; });
    bad([](VerifyConfig& c) { c.delta = 0.0; });
    bad([](VerifyConfig& c) { c.delta = -1e-4; });
    bad([](VerifyConfig& c) { c.margin_eta = 1.0; });
    bad([](VerifyConfig& c) { c.margin_eta = -0.1; });
    bad([](VerifyConfig& c) { c.tolerance = 0.0; });
    CHECK_NOTHROW(VerifyConfig{}.validate());
  }
}

TEST_SUITE("sampling") {
  TEST_CASE("random points lie on the space") {
    for (const char* s : {"sphere:4", "torus:3", "convex:2", "product(circle,sphere:3)"}) {
      const auto p = planner_for(s);
      Rng rng(stream_seed(1, 2));
      for (int k = 0; k < 500; ++k) CHECK(p.space().contains(random_point(p.space(), rng), 1e-12));
    }
  }

  TEST_CASE("stream seeds differ per index") {
    CHECK(stream_seed(42, 0) != stream_seed(42, 1));
    CHECK(stream_seed(42, 0) != stream_seed(43, 0));
    CHECK(stream_seed(42, 5) == stream_seed(42, 5));
  }

  TEST_CASE("adversarial list contains the hard pairs") {
    const auto p = planner_for("sphere:2");
    const auto pairs = adversarial_pairs(p.space(), 42, 2048);
    const ConfigPoint south{{0, 0, -1}}, north{{0, 0, 1}};
    bool found = false;
    for (const auto& [a, b] : pairs) found = found || (a == south && b == north);
    CHECK(found);
    // 12 injections per circle factor, combined across factors
    const auto torus = planner_for("torus:2");
    CHECK(adversarial_pairs(torus.space(), 42, 2048).size() == 144);
    CHECK(adversarial_pairs(planner_for("torus:4").space(), 42, 2048).size() == 2048);
    CHECK(adversarial_pairs(torus.space(), 42, 10).size() == 10);
  }

  TEST_CASE("perturbation keeps points on the space at distance about delta") {
    const auto p = planner_for("product(sphere:2,circle)");
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
      const auto x = random_point(p.space(), rng);
      const auto y = perturb(p.space(), x, 1e-4, rng);
      CHECK(p.space().contains(y, 1e-12));
      CHECK(planner::distance(x.coords, y.coords) <= 2e-4);
    }
  }
}

TEST_SUITE("demonstrate_discontinuity") {
  TEST_CASE("circle rule 1 splits at the antipode") {
    const auto [f, g] = circle_antipodal_families();
    const auto r = demonstrate_discontinuity(planner::circle_planner(), 1, f, g, {1e-1, 1e-2, 1e-3, 1e-4});
    REQUIRE(r.points.size() == 4);
    CHECK(r.points[2].offset == 1e-3);
    CHECK(r.points[2].gap >= 1.9);
    // exact sup is 2 at every offset; the sampled sup is within grid error
    double lowest = 10.0;
    for (const auto& pt : r.points) {
      CHECK(pt.gap >= 1.0);
      CHECK(pt.gap == doctest::Approx(2.0).epsilon(1e-3));
      lowest = std::min(lowest, pt.gap);
    }
    CHECK(r.min_gap == lowest);
  }

  TEST_CASE("sphere:2 rule 1 flips hemisphere") {
    const auto [f, g] = sphere_antipodal_families(2);
    const auto r = demonstrate_discontinuity(planner_for("sphere:2"), 1, f, g, {1e-1, 1e-2, 1e-3, 1e-4});
    for (const auto& pt : r.points) CHECK(pt.gap >= 1.0);
    CHECK(r.points[2].gap >= 1.9);
  }

  TEST_CASE("identical families give zero gap") {
    const auto [f, g] = circle_antipodal_families();
    const auto r = demonstrate_discontinuity(planner::circle_planner(), 1, f, f, {1e-1, 1e-3});
    CHECK(r.min_gap == 0.0);
    (void)g;
  }

  TEST_CASE("family leaving the domain") {
    const auto [f, g] = circle_antipodal_families();
    const PairFamily antipodal = [](double) { return std::pair{ConfigPoint{{1, 0}}, ConfigPoint{{-1, 0}}}; };
    CHECK(verify_code([&] { demonstrate_discontinuity(planner::circle_planner(), 1, f, antipodal, {0.1}); }) ==
          VerifyErrc::FamilyLeavesDomain);
    const PairFamily equal = [](double) { return std::pair{ConfigPoint{{1, 0}}, ConfigPoint{{1, 0}}}; };
    CHECK(verify_code([&] { demonstrate_discontinuity(planner::circle_planner(), 2, equal, equal, {0.1}); }) ==
          VerifyErrc::FamilyLeavesDomain);
    CHECK(verify_code([&] { demonstrate_discontinuity(planner::circle_planner(), 3, f, g, {0.1}); }) ==
          VerifyErrc::BadConfig);
    CHECK(verify_code([&] { demonstrate_discontinuity(planner::circle_planner(), 0, f, g, {0.1}); }) ==
          VerifyErrc::BadConfig);
  }
}

TEST_SUITE("reconcile") {
  TEST_CASE("examples") {
    const auto t3 = reconcile(planner_for("torus:3"), catalog::catalog_space("torus:3"));
    CHECK(t3.rule_count == 4);
    CHECK(t3.known_tc == 4);
    CHECK(t3.bounds.exact);
    const char* s3 = "product(sphere:2,sphere:2,sphere:2)";
    CHECK(reconcile(planner_for(s3), catalog::catalog_space(s3)).rule_count == 7);
    CHECK(reconcile(planner_for("sphere:3"), catalog::catalog_space("sphere:3")).known_tc == 2);
  }

  TEST_CASE("every catalog planner reconciles") {
    for (const char* s : {"convex:3", "circle", "sphere:2", "sphere:5", "torus:2", "torus:4", "torus:6", "surface:0",
                          "surface:1", "product(sphere:2,sphere:2)"}) {
      CAPTURE(s);
      CHECK_NOTHROW(reconcile(planner_for(s), catalog::catalog_space(s)));
    }
  }

  TEST_CASE("mismatch names both numbers") {
    try {
      reconcile(planner_for("torus:2"), catalog::catalog_space("circle"));
      FAIL("mismatch accepted");
    } catch (const VerifyError& e) {
      CHECK(e.code() == VerifyErrc::Mismatch);
      const std::string what = e.what();
      CHECK(what.find('3') != std::string::npos);
      CHECK(what.find('2') != std::string::npos);
    }
    CHECK_THROWS_AS(reconcile(planner::circle_planner(), catalog::catalog_space("cpn:2")), std::invalid_argument);
  }
}

TEST_SUITE("report json") {
  TEST_CASE("stable key order") {
    VerifyConfig cfg;
    cfg.pairs = 200;
    const auto j = to_json(verify_planner(planner::circle_planner(), cfg));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"planner", "rule_count", "pass", "config", "pairs", "checks", "rule_usage",
                                           "rule_domain_hits"});
    std::vector<std::string> checks;
    for (const auto& [k, v] : j["checks"].items()) checks.push_back(k);
    CHECK(checks == std::vector<std::string>{"section", "coverage", "continuity", "geometry"});
    CHECK(j["config"]["seed"] == 42);
    CHECK(j["pass"] == true);
    CHECK(j["checks"]["geometry"]["min_radius"].is_null());
  }
}
