#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tcplan/planner/planner.hpp"

namespace tcplan::planner {

// Cell W(S, T) of the product cover: S, T are nonempty index sets of the
// factor rules (bitmasks, bit i = rule i, 0-based).
struct ProductCell {
  std::uint64_t s_mask = 0;
  std::uint64_t t_mask = 0;
  std::size_t level() const;  // |S| + |T|
};

// margin(S,T) = min_{S x T} f_i g_j - max_{outside S x T} f_i g_j, where the
// max over an empty complement is 0. The point lies in W(S,T) iff margin > 0.
double cell_margin(std::span<const double> f, std::span<const double> g, const ProductCell& cell);

// Unnormalized level weights for levels 2..n+m (index 0 is level 2):
// sum over cells of the level of max(0, margin). Only cells whose S and T
// are top segments of f and g can have positive margin, so n*m candidates
// are enumerated.
std::vector<double> level_weights(std::span<const double> f, std::span<const double> g);
// Same quantity by enumerating every pair of nonempty subsets.
std::vector<double> level_weights_reference(std::span<const double> f, std::span<const double> g);

// The unique cell of the given level with positive margin, if any.
std::optional<ProductCell> cell_at_level(std::span<const double> f, std::span<const double> g, std::size_t level);
// S = argmax f, T = argmax g (exact ties grouped).
ProductCell argmax_cell(std::span<const double> f, std::span<const double> g);

// n + m - 1 rules, rule k covering the level-(k+1) union W_{k+1}. Within a
// cell the section runs factor rules (min S, min T) side by side.
Planner product_planner(const Planner& p, const Planner& q);

}  // namespace tcplan::planner
