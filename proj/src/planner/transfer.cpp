#include "tcplan/planner/transfer.hpp"

#include <cmath>
#include <memory>

namespace tcplan::planner {

namespace {

constexpr double kEndpointTolerance = 1e-6;

void check_endpoints(const TransferMaps& maps) {
  for (const auto& x : maps.probes) {
    const double start = distance(maps.homotopy(0.0, x).coords, x.coords);
    const double end = distance(maps.homotopy(1.0, x).coords, maps.to_x(maps.to_y(x)).coords);
    if (start > kEndpointTolerance || end > kEndpointTolerance) {
      throw PlannerError(PlannerErrc::HomotopyEndpointMismatch,
                         "homotopy endpoints off by " + std::to_string(std::max(start, end)));
    }
  }
}

}  // namespace

Planner transfer_planner(const Planner& q, TransferMaps maps) {
  check_endpoints(maps);
  auto inner = std::make_shared<const Planner>(q);
  auto m = std::make_shared<const TransferMaps>(std::move(maps));

  std::vector<PlannerRule> rules;
  for (std::size_t i = 0; i < q.rule_count(); ++i) {
    PlannerRule r;
    r.weight = [inner, m, i](const ConfigPoint& a, const ConfigPoint& b) {
      return inner->rule(i).weight(m->to_y(a), m->to_y(b));
    };
    r.section = [inner, m, i](const ConfigPoint& a, const ConfigPoint& b) {
      Path middle = inner->rule(i).section(m->to_y(a), m->to_y(b));
      return Path(
          [m, a, b, middle = std::move(middle)](double tau) {
            if (tau <= 1.0 / 3.0) return m->homotopy(3.0 * tau, a);
            if (tau <= 2.0 / 3.0) return m->to_x(middle(3.0 * tau - 1.0));
            return m->homotopy(3.0 * (1.0 - tau), b);
          },
          {{0.0, 1.0 / 3.0, false}, {1.0 / 3.0, 2.0 / 3.0, false}, {2.0 / 3.0, 1.0, false}});
    };
    r.description = "transferred: " + q.rule(i).description;
    rules.push_back(std::move(r));
  }
  Planner out(m->x_name, m->x_space, std::move(rules));
  out.set_weights_fn([inner, m](const ConfigPoint& a, const ConfigPoint& b) {
    return inner->raw_weights(m->to_y(a), m->to_y(b));
  });
  out.set_signature_fn([inner, m](std::size_t i, const ConfigPoint& a, const ConfigPoint& b) {
    return inner->signature(i, m->to_y(a), m->to_y(b));
  });
  return out;
}

TransferMaps punctured_plane_retraction() {
  TransferMaps maps;
  maps.x_space = Space::punctured_plane();
  maps.x_name = "punctured_plane";
  maps.to_y = [](const ConfigPoint& x) {
    const double r = std::hypot(x[0], x[1]);
    return ConfigPoint{{x[0] / r, x[1] / r}};
  };
  maps.to_x = [](const ConfigPoint& y) { return y; };
  maps.homotopy = [](double t, const ConfigPoint& x) {
    if (t == 0.0) return x;
    const double r = std::hypot(x[0], x[1]);
    const double s = (1.0 - t) + t / r;
    return ConfigPoint{{s * x[0], s * x[1]}};
  };
  for (int k = 0; k < 16; ++k) {
    const double angle = 0.4 * k;
    const double radius = 0.05 + 0.6 * k;
    maps.probes.push_back(ConfigPoint{{radius * std::cos(angle), radius * std::sin(angle)}});
  }
  return maps;
}

}  // namespace tcplan::planner
