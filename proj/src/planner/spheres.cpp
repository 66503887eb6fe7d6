#include "tcplan/planner/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tcplan::planner {

namespace {

constexpr double kPi = std::numbers::pi;

ConfigPoint point(std::vector<double> v) { return ConfigPoint{std::move(v)}; }

ConfigPoint antipode(const ConfigPoint& b) { return point(negated(b.coords)); }

// Second stage of the two-stage rule: from -B to B along
//   -cos(pi s) B + sin(pi s) v(B),  v(B) a unit tangent at B.
Path half_turn(ConfigPoint b, std::vector<double> v) {
  return Path(
      [b = std::move(b), v = std::move(v)](double s) {
        if (s == 0.0) return antipode(b);
        if (s == 1.0) return b;
        const double c = -std::cos(kPi * s), sn = std::sin(kPi * s);
        ConfigPoint p = b;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = c * b[i] + sn * v[i];
        const double n = norm(p.coords);
        for (double& x : p.coords) x /= n;
        return p;
      },
      {{0.0, 1.0, true}});
}

std::vector<double> normalized(std::vector<double> v) {
  const double n = norm(v);
  for (double& x : v) x /= n;
  return v;
}

template <typename Field>
PlannerRule two_stage_rule(Field field, std::function<double(const ConfigPoint&, const ConfigPoint&)> weight,
                           std::string description) {
  PlannerRule r;
  r.weight = std::move(weight);
  r.section = [field](const ConfigPoint& a, const ConfigPoint& b) {
    return concatenate(geodesic_arc(a, antipode(b)), half_turn(b, normalized(field(b.coords))), 0.5);
  };
  r.description = std::move(description);
  return r;
}

PlannerRule shortest_arc_rule() {
  PlannerRule r;
  r.weight = [](const ConfigPoint& a, const ConfigPoint& b) {
    return geodesic_distance(a.coords, negated(b.coords)) / kPi;
  };
  r.section = [](const ConfigPoint& a, const ConfigPoint& b) { return geodesic_arc(a, b); };
  r.description = "shortest arc, A != -B";
  return r;
}

double distance_to(const ConfigPoint& a, const std::vector<double>& q) { return geodesic_distance(a.coords, q); }

}  // namespace

Planner straight_line_planner(int dim) {
  PlannerRule r;
  r.weight = [](const ConfigPoint&, const ConfigPoint&) { return 1.0; };
  r.section = [](const ConfigPoint& a, const ConfigPoint& b) { return straight_segment(a, b); };
  r.description = "straight segment";
  return Planner("convex:" + std::to_string(dim), Space::euclidean(dim), {r});
}

Planner circle_planner() {
  PlannerRule ccw;
  ccw.weight = [](const ConfigPoint& a, const ConfigPoint& b) { return geodesic_distance(a.coords, b.coords) / kPi; };
  ccw.section = [](const ConfigPoint& a, const ConfigPoint& b) { return counterclockwise_arc(a, b); };
  ccw.description = "counterclockwise arc, A != B";
  return Planner("circle", Space::sphere(1), {shortest_arc_rule(), ccw});
}

std::vector<double> odd_vector_field(std::span<const double> x) {
  if (x.size() % 2 != 0) {
    throw PlannerError(PlannerErrc::ParityError, "nonvanishing field needs an odd-dimensional sphere");
  }
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    v[i] = -x[i + 1];
    v[i + 1] = x[i];
  }
  return v;
}

std::vector<double> even_vector_field(std::span<const double> x, std::span<const double> b0) {
  if (x.size() % 2 != 1) {
    throw PlannerError(PlannerErrc::ParityError, "single-zero field is built for even-dimensional spheres");
  }
  // e: first coordinate axis made orthogonal to b0 (second axis if parallel).
  std::vector<double> e = unit_vector(x.size(), 0);
  double c = dot(e, b0);
  if (std::abs(c) > 0.9) {
    e = unit_vector(x.size(), 1);
    c = dot(e, b0);
  }
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= c * b0[i];
  e = normalized(std::move(e));

  const double along = 1.0 - dot(x, b0);
  const double xe = dot(x, e);
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = along * e[i] - xe * (x[i] - b0[i]);
  return v;
}

std::vector<double> sphere_pole(int n) { return unit_vector(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n)); }

std::vector<double> sphere_chart_center(int n) { return unit_vector(static_cast<std::size_t>(n) + 1, 0); }

std::vector<double> stereographic(std::span<const double> x, std::span<const double> center) {
  const double c = dot(x, center);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] - c * center[i]) / (1.0 - c);
  return y;
}

std::vector<double> inverse_stereographic(std::span<const double> y, std::span<const double> center) {
  const double r2 = dot(y, y);
  std::vector<double> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = (2.0 * y[i] + (r2 - 1.0) * center[i]) / (r2 + 1.0);
  return x;
}

Planner sphere_planner(int n) {
  const std::string name = "sphere:" + std::to_string(n);
  if (n % 2 == 1) {
    auto rule2 = two_stage_rule([](std::span<const double> x) { return odd_vector_field(x); },
                                [](const ConfigPoint& a, const ConfigPoint& b) {
                                  return geodesic_distance(a.coords, b.coords) / kPi;
                                },
                                "arc to -B, then along the nonvanishing field, A != B");
    return Planner(name, Space::sphere(n), {shortest_arc_rule(), rule2});
  }

  const auto b0 = sphere_pole(n);
  const auto center = sphere_chart_center(n);
  auto rule2 = two_stage_rule([b0](std::span<const double> x) { return even_vector_field(x, b0); },
                              [b0](const ConfigPoint& a, const ConfigPoint& b) {
                                return std::min(geodesic_distance(a.coords, b.coords), distance_to(b, b0)) / kPi;
                              },
                              "arc to -B, then along the field vanishing at B0, A != B and B != B0");
  PlannerRule rule3;
  rule3.weight = [center](const ConfigPoint& a, const ConfigPoint& b) {
    return std::min(distance_to(a, center), distance_to(b, center)) / kPi;
  };
  rule3.section = [center](const ConfigPoint& a, const ConfigPoint& b) {
    const auto ya = stereographic(a.coords, center);
    const auto yb = stereographic(b.coords, center);
    return Path(
        [a, b, ya, yb, center](double t) {
          if (t == 0.0) return a;
          if (t == 1.0) return b;
          std::vector<double> y(ya.size());
          for (std::size_t i = 0; i < y.size(); ++i) y[i] = (1.0 - t) * ya[i] + t * yb[i];
          return point(normalized(inverse_stereographic(y, center)));
        },
        {{0.0, 1.0, false}});
  };
  rule3.description = "straight segment in the stereographic chart from C, A != C and B != C";
  return Planner(name, Space::sphere(n), {shortest_arc_rule(), rule2, rule3});
}

}  // namespace tcplan::planner
