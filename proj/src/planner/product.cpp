#include "tcplan/planner/product.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tcplan::planner {

std::size_t ProductCell::level() const {
  return static_cast<std::size_t>(std::popcount(s_mask) + std::popcount(t_mask));
}

double cell_margin(std::span<const double> f, std::span<const double> g, const ProductCell& cell) {
  double inside = 0.0, outside = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double p = f[i] * g[j];
      const bool in = ((cell.s_mask >> i) & 1u) && ((cell.t_mask >> j) & 1u);
      if (in) {
        inside = first ? p : std::min(inside, p);
        first = false;
      } else {
        outside = std::max(outside, p);
      }
    }
  }
  return inside - outside;
}

namespace {

std::vector<std::size_t> descending_order(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return order;
}

std::uint64_t prefix_mask(const std::vector<std::size_t>& order, std::size_t count) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < count; ++k) mask |= std::uint64_t{1} << order[k];
  return mask;
}

// Margin of the cell formed by the top `a` entries of f and top `b` of g.
double prefix_margin(std::span<const double> f, std::span<const double> g, const std::vector<std::size_t>& of,
                     const std::vector<std::size_t>& og, std::size_t a, std::size_t b) {
  const double inside = f[of[a - 1]] * g[og[b - 1]];
  double outside = 0.0;
  if (a < f.size()) outside = std::max(outside, f[of[a]] * g[og[0]]);
  if (b < g.size()) outside = std::max(outside, f[of[0]] * g[og[b]]);
  return inside - outside;
}

std::size_t lowest_index(std::uint64_t mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

}  // namespace

std::vector<double> level_weights(std::span<const double> f, std::span<const double> g) {
  const auto of = descending_order(f);
  const auto og = descending_order(g);
  std::vector<double> out(f.size() + g.size() - 1, 0.0);
  for (std::size_t a = 1; a <= f.size(); ++a) {
    for (std::size_t b = 1; b <= g.size(); ++b) {
      const double m = prefix_margin(f, g, of, og, a, b);
      if (m > 0.0) out[a + b - 2] += m;
    }
  }
  return out;
}

std::vector<double> level_weights_reference(std::span<const double> f, std::span<const double> g) {
  std::vector<double> out(f.size() + g.size() - 1, 0.0);
  const std::uint64_t s_end = std::uint64_t{1} << f.size();
  const std::uint64_t t_end = std::uint64_t{1} << g.size();
  for (std::uint64_t s = 1; s < s_end; ++s) {
    for (std::uint64_t t = 1; t < t_end; ++t) {
      const ProductCell cell{s, t};
      out[cell.level() - 2] += std::max(0.0, cell_margin(f, g, cell));
    }
  }
  return out;
}

std::optional<ProductCell> cell_at_level(std::span<const double> f, std::span<const double> g, std::size_t level) {
  const auto of = descending_order(f);
  const auto og = descending_order(g);
  for (std::size_t a = 1; a <= f.size(); ++a) {
    if (level < a + 1 || level - a > g.size()) continue;
    const std::size_t b = level - a;
    if (prefix_margin(f, g, of, og, a, b) > 0.0) return ProductCell{prefix_mask(of, a), prefix_mask(og, b)};
  }
  return std::nullopt;
}

ProductCell argmax_cell(std::span<const double> f, std::span<const double> g) {
  const double fmax = *std::max_element(f.begin(), f.end());
  const double gmax = *std::max_element(g.begin(), g.end());
  ProductCell cell;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == fmax) cell.s_mask |= std::uint64_t{1} << i;
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] == gmax) cell.t_mask |= std::uint64_t{1} << j;
  }
  return cell;
}

Planner product_planner(const Planner& p, const Planner& q) {
  auto left = std::make_shared<const Planner>(p);
  auto right = std::make_shared<const Planner>(q);
  const std::size_t split_at = p.space().ambient_dim();
  const Space space = Space::product(p.space(), q.space());

  struct Factors {
    ConfigPoint ax, ay, bx, by;
    std::vector<double> f, g;
  };
  auto factor_weights = [left, right, space, split_at](const ConfigPoint& a, const ConfigPoint& b) {
    Factors fw;
    std::tie(fw.ax, fw.ay) = space.split(a, split_at);
    std::tie(fw.bx, fw.by) = space.split(b, split_at);
    fw.f = left->weights(fw.ax, fw.bx);
    fw.g = right->weights(fw.ay, fw.by);
    return fw;
  };

  const std::size_t levels = p.rule_count() + q.rule_count() - 1;
  std::vector<PlannerRule> rules;
  for (std::size_t k = 0; k < levels; ++k) {
    PlannerRule r;
    r.weight = [factor_weights, k](const ConfigPoint& a, const ConfigPoint& b) {
      const auto fw = factor_weights(a, b);
      return level_weights(fw.f, fw.g)[k];
    };
    r.section = [factor_weights, left, right, k](const ConfigPoint& a, const ConfigPoint& b) {
      const auto fw = factor_weights(a, b);
      const auto cell = cell_at_level(fw.f, fw.g, k + 2);
      if (!cell) throw PlannerError(PlannerErrc::CoverageGap, "pair outside the level-" + std::to_string(k + 2) + " union");
      return pair_paths(left->rule(lowest_index(cell->s_mask)).section(fw.ax, fw.bx),
                        right->rule(lowest_index(cell->t_mask)).section(fw.ay, fw.by));
    };
    r.description = "level " + std::to_string(k + 2) + " cells";
    rules.push_back(std::move(r));
  }

  Planner out("product(" + p.name() + "," + q.name() + ")", space, std::move(rules));
  out.set_weights_fn([factor_weights](const ConfigPoint& a, const ConfigPoint& b) {
    const auto fw = factor_weights(a, b);
    return level_weights(fw.f, fw.g);
  });
  out.set_signature_fn([factor_weights, left, right](std::size_t k, const ConfigPoint& a, const ConfigPoint& b) {
    const auto fw = factor_weights(a, b);
    const auto cell = cell_at_level(fw.f, fw.g, k + 2);
    if (!cell) return CellSignature{k, 0, 0};
    const std::size_t i = lowest_index(cell->s_mask), j = lowest_index(cell->t_mask);
    CellSignature sig{k, cell->s_mask, cell->t_mask};
    const auto inner_p = left->signature(i, fw.ax, fw.bx);
    const auto inner_q = right->signature(j, fw.ay, fw.by);
    sig.push_back(inner_p.size());
    sig.insert(sig.end(), inner_p.begin(), inner_p.end());
    sig.insert(sig.end(), inner_q.begin(), inner_q.end());
    return sig;
  });
  return out;
}

}  // namespace tcplan::planner
