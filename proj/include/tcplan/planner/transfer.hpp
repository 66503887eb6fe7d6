#pragma once

#include <functional>
#include <vector>

#include "tcplan/planner/planner.hpp"

namespace tcplan::planner {

// Maps transporting a planner on Y to X: f: X -> Y, g: Y -> X and a homotopy
// h_t on X from the identity (t = 0) to g∘f (t = 1).
struct TransferMaps {
  Space x_space;
  std::string x_name;
  std::function<ConfigPoint(const ConfigPoint&)> to_y;    // f
  std::function<ConfigPoint(const ConfigPoint&)> to_x;    // g
  std::function<ConfigPoint(double, const ConfigPoint&)> homotopy;
  // Points of X on which the homotopy endpoints are checked.
  std::vector<ConfigPoint> probes;
};

// Same rule count as q. Rule i has domain (f x f)^{-1}(U_i), pulled-back
// weight, and section
//   tau in [0,1/3]: h_{3 tau}(A)
//   tau in [1/3,2/3]: g(s_i(fA, fB)(3 tau - 1))
//   tau in [2/3,1]: h_{3(1 - tau)}(B)
// Throws HomotopyEndpointMismatch if h_0 != id or h_1 != g∘f on a probe
// (tolerance 1e-6).
Planner transfer_planner(const Planner& q, TransferMaps maps);

// X = R^2 \ {0}, Y = circle, f = radial retraction, g = inclusion,
// h_t(x) = (1 - t) x + t x/|x|.
TransferMaps punctured_plane_retraction();

}  // namespace tcplan::planner
