#include "tcplan/algebra/zero_divisors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tcplan/algebra/linalg.hpp"

namespace tcplan::algebra {

std::vector<AlgElement> zero_divisor_basis(const AlgebraPtr& a) {
  return zero_divisor_basis(a, tensor_square(a));
}

std::vector<AlgElement> zero_divisor_basis(const AlgebraPtr& a, const AlgebraPtr& square) {
  const auto& f = square->factors();
  if (f.left != a || f.right != a) {
    throw AlgebraError(AlgebraErrc::AlgebraMismatch, "square is not the tensor square of the algebra");
  }
  std::map<int, std::vector<std::size_t>> tensor_by_degree, base_by_degree;
  for (std::size_t k = 0; k < square->dimension(); ++k) tensor_by_degree[square->degree(k)].push_back(k);
  for (std::size_t i = 0; i < a->dimension(); ++i) base_by_degree[a->degree(i)].push_back(i);

  std::vector<AlgElement> out;
  for (const auto& [deg, cols] : tensor_by_degree) {
    const auto rows_it = base_by_degree.find(deg);
    const std::vector<std::size_t> rows =
        rows_it == base_by_degree.end() ? std::vector<std::size_t>{} : rows_it->second;
    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto [i, j] = square->split_index(cols[c]);
      for (const auto& t : a->basis_product(i, j)) m.at(row_of.at(t.index), c) = t.coeff;
    }
    for (const auto& v : nullspace(std::move(m))) {
      std::map<std::size_t, Rational> coeffs;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (v[c] != 0) coeffs.emplace(cols[c], v[c]);
      }
      out.emplace_back(square, std::move(coeffs));
    }
  }
  return out;
}

unsigned zdcl_length_cap(const AlgebraPtr& a) {
  int min_positive = 0;
  for (const auto& b : a->basis()) {
    if (b.degree > 0 && (min_positive == 0 || b.degree < min_positive)) min_positive = b.degree;
  }
  if (min_positive == 0) return 0;
  return static_cast<unsigned>(2 * a->top_degree() / min_positive);
}

namespace {

struct Factor {
  AlgElement value;
  int degree;
};

class ProductSearch {
 public:
  ProductSearch(const std::vector<Factor>& factors, unsigned max_len, int top_degree, const AlgebraPtr& square)
      : factors_(factors), max_len_(max_len), top_(top_degree),
        best_value_(AlgElement::unit(square)) {
    min_degree_ = top_ + 1;
    for (const auto& f : factors_) min_degree_ = std::min(min_degree_, f.degree);
    ceiling_ = max_len_;
    if (!factors_.empty() && min_degree_ > 0) {
      ceiling_ = std::min<unsigned>(ceiling_, static_cast<unsigned>(top_ / min_degree_));
    }
  }

  void run() {
    std::vector<std::size_t> chosen;
    descend(0, best_value_, 0, chosen);
  }

  unsigned best_length() const { return static_cast<unsigned>(best_.size()); }
  const std::vector<std::size_t>& best() const { return best_; }
  const AlgElement& best_value() const { return best_value_; }

 private:
  void descend(std::size_t start, const AlgElement& current, int degree, std::vector<std::size_t>& chosen) {
    if (chosen.size() > best_.size()) {
      best_ = chosen;
      best_value_ = current;
    }
    if (best_.size() >= ceiling_ || chosen.size() >= max_len_) return;
    for (std::size_t k = start; k < factors_.size(); ++k) {
      const int next_degree = degree + factors_[k].degree;
      if (next_degree > top_) continue;
      // Longest length still reachable through this branch.
      const unsigned reach = static_cast<unsigned>(chosen.size()) + 1 +
                             (min_degree_ > 0 ? static_cast<unsigned>((top_ - next_degree) / min_degree_) : max_len_);
      if (std::min(reach, max_len_) <= best_.size()) continue;
      AlgElement next = current * factors_[k].value;
      if (next.is_zero()) continue;
      chosen.push_back(k);
      descend(k, next, next_degree, chosen);
      chosen.pop_back();
      if (best_.size() >= ceiling_) return;
    }
  }

  const std::vector<Factor>& factors_;
  unsigned max_len_;
  int top_;
  int min_degree_ = 0;
  unsigned ceiling_ = 0;
  std::vector<std::size_t> best_;
  AlgElement best_value_;
};

}  // namespace

ZdclResult zdcl(const AlgebraPtr& a, const ZdclOptions& options) {
  if (options.max_len == 0) throw std::invalid_argument("zdcl: max_len must be at least 1");
  const AlgebraPtr square = tensor_square(a);

  std::vector<Factor> factors;
  if (options.mode == ZdclMode::Canonical) {
    std::vector<std::string> gens;
    if (options.generators) {
      if (options.generators->empty()) {
        throw AlgebraError(AlgebraErrc::EmptyGeneratorSet, "canonical zdcl needs at least one generator");
      }
      gens = *options.generators;
    } else {
      for (const auto& b : a->basis()) {
        if (b.degree > 0) gens.push_back(b.label);
      }
    }
    for (const auto& g : gens) {
      AlgElement d = canonical_divisor(square, g);
      if (d.is_zero()) continue;
      factors.push_back({std::move(d), a->degree(a->index_of(g))});
    }
  } else {
    for (auto& z : zero_divisor_basis(a, square)) {
      const auto deg = z.homogeneous_degree();
      factors.push_back({std::move(z), deg.value_or(0)});
    }
  }

  ProductSearch search(factors, options.max_len, square->top_degree(), square);
  search.run();

  ZdclResult result{search.best_length(), {}, search.best_value()};
  for (auto k : search.best()) result.witness.push_back(factors[k].value);
  return result;
}

}  // namespace tcplan::algebra
