#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcplan/algebra/graded_algebra.hpp"
#include "tcplan/catalog/space_spec.hpp"

namespace tcplan::catalog {

using algebra::AlgebraPtr;

// Exact TC value together with the result that establishes it.
struct KnownTc {
  int value = 0;
  std::string provenance;
};

struct SpaceDescriptor {
  SpaceSpec spec;
  int geometry_dim = 0;
  AlgebraPtr algebra;
  // Literature value of the Lusternik-Schnirelmann category; never computed.
  std::optional<int> cat;
  std::optional<KnownTc> known_tc;
  bool contractible = false;
  // Rule count of the explicit planner for an indecomposable space.
  std::optional<int> planner_rules;
  // Factors used by the product inequality (torus:n is n circles).
  std::vector<SpaceDescriptor> factors;

  std::string name() const { return spec.to_string(); }
};

SpaceDescriptor catalog_space(const SpaceSpec& spec);
SpaceDescriptor catalog_space(std::string_view spec);

// Cohomology presets over Q.
AlgebraPtr point_algebra();
AlgebraPtr sphere_algebra(int n, const std::string& generator = "u");
// 1, u_i, v_i (degree 1), A (degree 2) with u_i v_i = A = -v_i u_i.
AlgebraPtr surface_algebra(int genus);
// Truncated polynomial algebra Q[u]/u^{n+1}, |u| = 2.
AlgebraPtr cpn_algebra(int n);
// Iterated kunneth of n circles, generators a1..an.
AlgebraPtr torus_algebra(int n);

}  // namespace tcplan::catalog
