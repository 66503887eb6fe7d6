#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcplan/algebra/graded_algebra.hpp"

namespace tcplan::algebra {

// Kernel of cup_hom on tensor_square(a), computed degree by degree. All
// returned elements are homogeneous and live in `square` (built if absent).
std::vector<AlgElement> zero_divisor_basis(const AlgebraPtr& a);
std::vector<AlgElement> zero_divisor_basis(const AlgebraPtr& a, const AlgebraPtr& square);

enum class ZdclMode { Canonical, Exhaustive };

struct ZdclOptions {
  ZdclMode mode = ZdclMode::Canonical;
  unsigned max_len = 8;
  // Canonical mode only. nullopt: every positive-degree basis label.
  std::optional<std::vector<std::string>> generators;
};

struct ZdclResult {
  unsigned length = 0;
  std::vector<AlgElement> witness;
  AlgElement product_value;
};

// Longest nonzero product of zero divisors found by a depth-first search over
// multisets of candidate factors (canonical divisors 1⊗a - a⊗1, or the kernel
// basis). Partial products that vanish or exceed the top degree are pruned.
// The result is a certified lower bound for the zero-divisor cup-length.
ZdclResult zdcl(const AlgebraPtr& a, const ZdclOptions& options = {});

// Largest length any product of positive-degree zero divisors can have.
unsigned zdcl_length_cap(const AlgebraPtr& a);

}  // namespace tcplan::algebra
