#pragma once

#include <span>
#include <vector>

#include "tcplan/planner/planner.hpp"

namespace tcplan::planner {

// One rule over all of R^n: the constant-velocity segment.
Planner straight_line_planner(int dim);

// Rule 1 on {A != -B}: shortest arc. Rule 2 on {A != B}: counterclockwise arc.
Planner circle_planner();

// v(x) = (-x2, x1, -x4, x3, ...); unit and tangent on S^n for odd n.
// Throws ParityError for even n.
std::vector<double> odd_vector_field(std::span<const double> x);

// Tangent field on S^n (n even) vanishing only at b0: the image of a fixed
// direction e (orthogonal to b0) under the differential of the inverse
// stereographic chart from b0,
//   v(x) = (1 - <x,b0>) e - <x,e> (x - b0).
// Throws ParityError for odd n.
std::vector<double> even_vector_field(std::span<const double> x, std::span<const double> b0);

// Fixed points of the even-sphere planner: B0 = e_{n+1} (zero of the field)
// and C = e_1 (projection point of the third chart).
std::vector<double> sphere_pole(int n);
std::vector<double> sphere_chart_center(int n);

// Stereographic chart from `center` onto the hyperplane orthogonal to it,
// kept in ambient coordinates.
std::vector<double> stereographic(std::span<const double> x, std::span<const double> center);
std::vector<double> inverse_stereographic(std::span<const double> y, std::span<const double> center);

// Odd n: 2 rules (shortest arc; arc to -B then half great circle along the
// field). Even n: 3 rules (shortest arc; the same two-stage rule away from
// B0; straight segment in the stereographic chart from C).
Planner sphere_planner(int n);

}  // namespace tcplan::planner
