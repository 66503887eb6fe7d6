#pragma once

// Finite-dimensional graded-commutative algebras over Q.
//
// An algebra is either presented (explicit structure constants, validated on
// construction) or a tensor product of two algebras whose basis products are
// computed on demand with the Koszul sign
//   (a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} (ac) ⊗ (bd).
// Tensor products never materialize a multiplication table, so the tensor
// square of a 64-dimensional algebra stays cheap.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tcplan::algebra {

using Rational = mpq_class;

enum class AlgebraErrc {
  UnitMissing,
  GradingViolation,
  CommutativityViolation,
  AssociativityViolation,
  DuplicateLabel,
  UnknownLabel,
  BadCoefficient,
  MalformedPresentation,
  AlgebraMismatch,
  EmptyGeneratorSet,
};

const char* to_string(AlgebraErrc code);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(AlgebraErrc code, const std::string& what);
  AlgebraErrc code() const noexcept { return code_; }

 private:
  AlgebraErrc code_;
};

struct BasisElement {
  std::string label;
  int degree = 0;
};

struct Term {
  std::size_t index = 0;
  Rational coeff;
};

// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

// Raw input to validate_algebra. Products not listed are zero, except those
// involving the unit, which default to the unit law.
struct Presentation {
  struct Product {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, Rational>> result;
  };
  std::vector<BasisElement> basis;
  std::string unit;
  std::vector<Product> products;
  // Optional multiplicative generators (labels); metadata for zdcl searches.
  std::vector<std::string> generators;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class GradedAlgebra {
 public:
  struct TensorFactors {
    AlgebraPtr left;
    AlgebraPtr right;
  };

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::size_t unit_index() const { return unit_; }
  int top_degree() const { return top_degree_; }

  // Throws AlgebraError(UnknownLabel).
  std::size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const { return index_.count(label) != 0; }

  SparseVector basis_product(std::size_t i, std::size_t j) const;

  bool is_tensor() const { return tensor_.has_value(); }
  const TensorFactors& factors() const;
  // Basis index of (left_i ⊗ right_j) in a tensor product.
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> split_index(std::size_t k) const;

  const std::vector<std::string>& generators() const { return generators_; }

  // Exact check of unit law, grading, graded commutativity and
  // associativity over all basis pairs and triples. Throws AlgebraError
  // naming the offending pair or triple.
  void check_invariants() const;

  // Presentation that reproduces this algebra (tensor products expanded).
  Presentation presentation() const;

  static AlgebraPtr from_presentation(const Presentation& p);
  static AlgebraPtr tensor(AlgebraPtr left, AlgebraPtr right,
                           std::vector<std::string> labels,
                           std::vector<std::string> generators);

 private:
  GradedAlgebra() = default;
  void index_labels();

  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t unit_ = 0;
  int top_degree_ = 0;
  std::vector<SparseVector> table_;  // dimension^2, presented algebras only
  std::optional<TensorFactors> tensor_;
  std::vector<std::string> generators_;
};

// Validates a presentation: unique labels, a single degree-0 unit acting as
// identity, homogeneous products, graded commutativity and associativity.
AlgebraPtr validate_algebra(const Presentation& p);

// Element of an algebra in canonical sparse form.
class AlgElement {
 public:
  explicit AlgElement(AlgebraPtr algebra);
  AlgElement(AlgebraPtr algebra, std::map<std::size_t, Rational> coeffs);

  static AlgElement basis(const AlgebraPtr& algebra, const std::string& label);
  static AlgElement unit(const AlgebraPtr& algebra);
  static AlgElement from_labels(
      const AlgebraPtr& algebra,
      const std::vector<std::pair<std::string, Rational>>& terms);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<std::size_t, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(const std::string& label) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of a nonzero homogeneous element; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const;

  AlgElement& operator+=(const AlgElement& other);
  AlgElement& operator-=(const AlgElement& other);
  AlgElement& operator*=(const Rational& s);

  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(AlgElement a, const Rational& s) { return a *= s; }
  friend AlgElement operator*(const Rational& s, AlgElement a) { return a *= s; }
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  std::string to_string() const;

 private:
  void require_same(const AlgElement& other) const;

  AlgebraPtr algebra_;
  std::map<std::size_t, Rational> coeffs_;
};

AlgElement multiply(const AlgElement& x, const AlgElement& y);
AlgElement power(const AlgElement& x, unsigned exponent);

// A ⊗ A with labels "x⊗y". Factor labels containing '⊗' are parenthesized.
AlgebraPtr tensor_square(const AlgebraPtr& a);

// A ⊗ B for a product space: unit factors are dropped from labels ("u",
// "u·v"); falls back to tensor_square-style labels if that would collide.
AlgebraPtr kunneth(const AlgebraPtr& a, const AlgebraPtr& b);

// Cup-product homomorphism A ⊗ A → A, (x ⊗ y) ↦ xy.
AlgElement cup_hom(const AlgElement& z);

// 1 ⊗ x - x ⊗ 1 in the tensor square `square` of A.
AlgElement canonical_divisor(const AlgebraPtr& square, const std::string& label);
AlgElement canonical_divisor(const AlgebraPtr& square, const AlgElement& x);

std::string format_rational(const Rational& q);
// Accepts "p", "-p", "p/q"; throws AlgebraError(BadCoefficient).
Rational parse_rational(const std::string& text);

}  // namespace tcplan::algebra
