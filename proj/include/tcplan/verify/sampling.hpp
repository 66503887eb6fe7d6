#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tcplan/planner/geometry.hpp"

namespace tcplan::verify {

using planner::ConfigPoint;
using planner::Space;

using Rng = std::mt19937_64;

// Independent stream for item `index` of a run seeded with `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

// Sphere factors: normalized standard Gaussian. Euclidean factors: standard
// Gaussian. Punctured planes: log-uniform radius in [0.1, 10].
ConfigPoint random_point(const Space& space, Rng& rng);

// Moves each factor by `delta` in a random direction (tangent for sphere
// factors, then renormalized; scaled by |x| on punctured planes).
ConfigPoint perturb(const Space& space, const ConfigPoint& p, double delta, Rng& rng);

// Fixed per-factor injection list (equal pairs, antipodes, the pole B0 and
// its antipode, the chart centre C, exact quarter turns), combined across
// factors; at most `cap` combinations, chosen deterministically by `seed`.
std::vector<std::pair<ConfigPoint, ConfigPoint>> adversarial_pairs(const Space& space, std::uint64_t seed,
                                                                   std::size_t cap);

}  // namespace tcplan::verify
