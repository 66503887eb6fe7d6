#include "tcplan/catalog/catalog.hpp"

namespace tcplan::catalog {

using algebra::BasisElement;
using algebra::GradedAlgebra;
using algebra::Presentation;
using algebra::Rational;

AlgebraPtr point_algebra() {
  Presentation p;
  p.basis = {{"1", 0}};
  p.unit = "1";
  return algebra::validate_algebra(p);
}

AlgebraPtr sphere_algebra(int n, const std::string& generator) {
  Presentation p;
  p.basis = {{"1", 0}, {generator, n}};
  p.unit = "1";
  p.generators = {generator};
  return algebra::validate_algebra(p);
}

namespace {

AlgebraPtr surface_algebra_labeled(int genus, const std::string& suffix) {
  Presentation p;
  p.unit = "1";
  p.basis.push_back({"1", 0});
  const std::string top = "A" + suffix;
  for (int i = 1; i <= genus; ++i) {
    const std::string u = "u" + std::to_string(i) + suffix;
    const std::string v = "v" + std::to_string(i) + suffix;
    p.basis.push_back({u, 1});
    p.basis.push_back({v, 1});
    p.generators.push_back(u);
    p.generators.push_back(v);
    p.products.push_back({u, v, {{top, Rational(1)}}});
    p.products.push_back({v, u, {{top, Rational(-1)}}});
  }
  p.basis.push_back({top, 2});
  return algebra::validate_algebra(p);
}

AlgebraPtr cpn_algebra_labeled(int n, const std::string& suffix) {
  Presentation p;
  p.unit = "1";
  auto power = [&](int k) { return k == 1 ? "u" + suffix : "u" + suffix + "^" + std::to_string(k); };
  p.basis.push_back({"1", 0});
  for (int k = 1; k <= n; ++k) p.basis.push_back({power(k), 2 * k});
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n; ++j) p.products.push_back({power(i), power(j), {{power(i + j), Rational(1)}}});
  }
  p.generators = {power(1)};
  return algebra::validate_algebra(p);
}

// Indecomposable pieces of a space up to homotopy; contractible pieces are
// dropped by the algebra fold but kept for known-TC bookkeeping.
struct Leaf {
  enum class Kind { Sphere, Surface, Cpn, Point } kind;
  int param;
};

void flatten(const SpaceSpec& s, std::vector<Leaf>& out) {
  switch (s.kind) {
    case SpaceKind::Circle: out.push_back({Leaf::Kind::Sphere, 1}); break;
    case SpaceKind::Sphere: out.push_back({Leaf::Kind::Sphere, s.param}); break;
    case SpaceKind::Torus:
      for (int i = 0; i < s.param; ++i) out.push_back({Leaf::Kind::Sphere, 1});
      break;
    case SpaceKind::Surface:
      if (s.param == 0) {
        out.push_back({Leaf::Kind::Sphere, 2});
      } else if (s.param == 1) {
        out.push_back({Leaf::Kind::Sphere, 1});
        out.push_back({Leaf::Kind::Sphere, 1});
      } else {
        out.push_back({Leaf::Kind::Surface, s.param});
      }
      break;
    case SpaceKind::ComplexProjective: out.push_back({Leaf::Kind::Cpn, s.param}); break;
    case SpaceKind::Convex: out.push_back({Leaf::Kind::Point, s.param}); break;
    case SpaceKind::Product:
      for (const auto& f : s.factors) flatten(f, out);
      break;
  }
}

AlgebraPtr leaf_algebra(const Leaf& leaf, int index, bool single) {
  const std::string suffix = single ? "" : std::to_string(index);
  switch (leaf.kind) {
    case Leaf::Kind::Sphere: return sphere_algebra(leaf.param, single ? "u" : "a" + suffix);
    case Leaf::Kind::Surface: return surface_algebra_labeled(leaf.param, single ? "" : "_" + suffix);
    case Leaf::Kind::Cpn: return cpn_algebra_labeled(leaf.param, single ? "" : "_" + suffix);
    case Leaf::Kind::Point: return point_algebra();
  }
  return point_algebra();
}

AlgebraPtr algebra_of(const std::vector<Leaf>& leaves) {
  std::vector<Leaf> live;
  for (const auto& l : leaves) {
    if (l.kind != Leaf::Kind::Point) live.push_back(l);
  }
  if (live.empty()) return point_algebra();
  AlgebraPtr acc;
  for (std::size_t i = 0; i < live.size(); ++i) {
    AlgebraPtr a = leaf_algebra(live[i], static_cast<int>(i + 1), live.size() == 1);
    acc = acc ? algebra::kunneth(acc, a) : a;
  }
  return acc;
}

int dimension_of(const SpaceSpec& s) {
  switch (s.kind) {
    case SpaceKind::Circle: return 1;
    case SpaceKind::Sphere: return s.param;
    case SpaceKind::Surface: return 2;
    case SpaceKind::ComplexProjective: return 2 * s.param;
    case SpaceKind::Torus: return s.param;
    case SpaceKind::Convex: return s.param;
    case SpaceKind::Product: {
      int d = 0;
      for (const auto& f : s.factors) d += dimension_of(f);
      return d;
    }
  }
  return 0;
}

std::optional<KnownTc> known_tc_of(const std::vector<Leaf>& leaves) {
  std::vector<Leaf> live;
  for (const auto& l : leaves) {
    if (l.kind != Leaf::Kind::Point) live.push_back(l);
  }
  if (live.empty()) return KnownTc{1, "contractible"};
  if (live.size() == 1) {
    const Leaf& l = live.front();
    if (l.kind == Leaf::Kind::Sphere) return KnownTc{l.param % 2 == 1 ? 2 : 3, "sphere_tc"};
    if (l.kind == Leaf::Kind::Surface) return KnownTc{5, "surface_tc"};
    return std::nullopt;
  }
  const int m = live.front().param;
  for (const auto& l : live) {
    if (l.kind != Leaf::Kind::Sphere || l.param != m) return std::nullopt;
  }
  const int n = static_cast<int>(live.size());
  return KnownTc{m % 2 == 1 ? n + 1 : 2 * n + 1, "sphere_product_tc"};
}

SpaceDescriptor circle_descriptor() { return catalog_space(SpaceSpec{SpaceKind::Circle, 1, {}}); }

}  // namespace

AlgebraPtr surface_algebra(int genus) { return surface_algebra_labeled(genus, ""); }

AlgebraPtr cpn_algebra(int n) { return cpn_algebra_labeled(n, ""); }

AlgebraPtr torus_algebra(int n) {
  return algebra_of(std::vector<Leaf>(static_cast<std::size_t>(n), Leaf{Leaf::Kind::Sphere, 1}));
}

SpaceDescriptor catalog_space(const SpaceSpec& spec) {
  SpaceDescriptor d;
  d.spec = spec;
  d.geometry_dim = dimension_of(spec);
  std::vector<Leaf> leaves;
  flatten(spec, leaves);
  d.algebra = algebra_of(leaves);
  d.known_tc = known_tc_of(leaves);

  switch (spec.kind) {
    case SpaceKind::Circle:
      d.cat = 2;
      d.planner_rules = 2;
      break;
    case SpaceKind::Sphere:
      d.cat = 2;
      d.planner_rules = spec.param % 2 == 1 ? 2 : 3;
      break;
    case SpaceKind::Surface:
      if (spec.param == 0) {
        d.cat = 2;
        d.planner_rules = 3;
      } else {
        d.cat = 3;
        if (spec.param == 1) d.factors = {circle_descriptor(), circle_descriptor()};
      }
      break;
    case SpaceKind::ComplexProjective:
      // cat(CP^n) = n + 1 left out on purpose; its 2n + 1 upper bound would
      // replace the dimension bound reported for these spaces.
      break;
    case SpaceKind::Torus:
      d.cat = spec.param + 1;
      if (spec.param == 1) {
        d.planner_rules = 2;
      } else {
        for (int i = 0; i < spec.param; ++i) d.factors.push_back(circle_descriptor());
      }
      break;
    case SpaceKind::Convex:
      d.cat = 1;
      d.contractible = true;
      d.planner_rules = 1;
      break;
    case SpaceKind::Product:
      d.contractible = true;
      for (const auto& f : spec.factors) {
        d.factors.push_back(catalog_space(f));
        d.contractible = d.contractible && d.factors.back().contractible;
      }
      break;
  }
  return d;
}

SpaceDescriptor catalog_space(std::string_view spec) { return catalog_space(parse_space_spec(spec)); }

}  // namespace tcplan::catalog
