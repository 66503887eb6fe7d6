#include "tcplan/algebra/graded_algebra.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace tcplan::algebra {

const char* to_string(AlgebraErrc code) {
  switch (code) {
    case AlgebraErrc::UnitMissing: return "UnitMissing";
    case AlgebraErrc::GradingViolation: return "GradingViolation";
    case AlgebraErrc::CommutativityViolation: return "CommutativityViolation";
    case AlgebraErrc::AssociativityViolation: return "AssociativityViolation";
    case AlgebraErrc::DuplicateLabel: return "DuplicateLabel";
    case AlgebraErrc::UnknownLabel: return "UnknownLabel";
    case AlgebraErrc::BadCoefficient: return "BadCoefficient";
    case AlgebraErrc::MalformedPresentation: return "MalformedPresentation";
    case AlgebraErrc::AlgebraMismatch: return "AlgebraMismatch";
    case AlgebraErrc::EmptyGeneratorSet: return "EmptyGeneratorSet";
  }
  return "Unknown";
}

AlgebraError::AlgebraError(AlgebraErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

bool odd(int d) { return (d & 1) != 0; }

SparseVector scaled(const SparseVector& v, const Rational& s) {
  SparseVector out;
  if (s == 0) return out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({t.index, t.coeff * s});
  return out;
}

bool same(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].index != b[k].index || a[k].coeff != b[k].coeff) return false;
  }
  return true;
}

SparseVector to_sparse(const std::map<std::size_t, Rational>& m) {
  SparseVector out;
  out.reserve(m.size());
  for (const auto& [i, c] : m) {
    if (c != 0) out.push_back({i, c});
  }
  return out;
}

// (sum_i a_i e_i) * e_k  or  e_k * (sum ...) depending on `left`.
SparseVector times_basis(const GradedAlgebra& alg, const SparseVector& v, std::size_t k,
                         bool v_on_left) {
  std::map<std::size_t, Rational> acc;
  for (const auto& t : v) {
    const auto prod = v_on_left ? alg.basis_product(t.index, k) : alg.basis_product(k, t.index);
    for (const auto& p : prod) acc[p.index] += t.coeff * p.coeff;
  }
  return to_sparse(acc);
}

std::string pair_name(const GradedAlgebra& alg, std::size_t i, std::size_t j) {
  return "(" + alg.label(i) + ", " + alg.label(j) + ")";
}

std::string wrap_tensor_label(const std::string& s) {
  return s.find("⊗") == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

std::size_t GradedAlgebra::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw AlgebraError(AlgebraErrc::UnknownLabel, "no basis element '" + label + "'");
  return it->second;
}

void GradedAlgebra::index_labels() {
  index_.clear();
  top_degree_ = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i].label, i).second) {
      throw AlgebraError(AlgebraErrc::DuplicateLabel, "label '" + basis_[i].label + "' repeated");
    }
    top_degree_ = std::max(top_degree_, basis_[i].degree);
  }
}

const GradedAlgebra::TensorFactors& GradedAlgebra::factors() const {
  if (!tensor_) throw AlgebraError(AlgebraErrc::AlgebraMismatch, "algebra is not a tensor product");
  return *tensor_;
}

std::size_t GradedAlgebra::pair_index(std::size_t i, std::size_t j) const {
  return i * factors().right->dimension() + j;
}

std::pair<std::size_t, std::size_t> GradedAlgebra::split_index(std::size_t k) const {
  const std::size_t n = factors().right->dimension();
  return {k / n, k % n};
}

SparseVector GradedAlgebra::basis_product(std::size_t i, std::size_t j) const {
  if (!tensor_) return table_[i * basis_.size() + j];
  const auto& [left, right] = *tensor_;
  const std::size_t nr = right->dimension();
  const std::size_t i1 = i / nr, j1 = i % nr;
  const std::size_t i2 = j / nr, j2 = j % nr;
  const SparseVector l = left->basis_product(i1, i2);
  if (l.empty()) return {};
  const SparseVector r = right->basis_product(j1, j2);
  if (r.empty()) return {};
  const bool negate = odd(right->degree(j1)) && odd(left->degree(i2));
  SparseVector out;
  out.reserve(l.size() * r.size());
  for (const auto& a : l) {
    for (const auto& b : r) {
      Rational c = a.coeff * b.coeff;
      if (negate) c = -c;
      out.push_back({a.index * nr + b.index, std::move(c)});
    }
  }
  return out;
}

void GradedAlgebra::check_invariants() const {
  const std::size_t n = basis_.size();
  std::size_t degree_zero = 0;
  for (const auto& b : basis_) degree_zero += (b.degree == 0);
  if (basis_.at(unit_).degree != 0 || degree_zero != 1) {
    throw AlgebraError(AlgebraErrc::UnitMissing,
                       "expected exactly one degree-0 basis element (the unit '" + label(unit_) +
                           "'), found " + std::to_string(degree_zero));
  }
  for (std::size_t b = 0; b < n; ++b) {
    const SparseVector expect{{b, Rational(1)}};
    if (!same(basis_product(unit_, b), expect) || !same(basis_product(b, unit_), expect)) {
      throw AlgebraError(AlgebraErrc::UnitMissing,
                         "unit does not act as identity on pair " + pair_name(*this, unit_, b));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = basis_product(i, j);
      for (const auto& t : ij) {
        if (degree(t.index) != degree(i) + degree(j)) {
          throw AlgebraError(AlgebraErrc::GradingViolation,
                             "product of pair " + pair_name(*this, i, j) + " has term '" +
                                 label(t.index) + "' of degree " + std::to_string(degree(t.index)));
        }
      }
      if (j < i) continue;
      const Rational sign = (odd(degree(i)) && odd(degree(j))) ? -1 : 1;
      if (!same(ij, scaled(basis_product(j, i), sign))) {
        throw AlgebraError(AlgebraErrc::CommutativityViolation,
                           "pair " + pair_name(*this, i, j) + " violates xy = (-1)^{|x||y|} yx");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i == unit_) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == unit_ || degree(i) + degree(j) > top_degree_) continue;
      const auto ij = basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == unit_ || degree(i) + degree(j) + degree(k) > top_degree_) continue;
        const auto lhs = times_basis(*this, ij, k, true);
        const auto rhs = times_basis(*this, basis_product(j, k), i, false);
        if (!same(lhs, rhs)) {
          throw AlgebraError(AlgebraErrc::AssociativityViolation,
                             "triple (" + label(i) + ", " + label(j) + ", " + label(k) +
                                 ") violates (xy)z = x(yz)");
        }
      }
    }
  }
}

Presentation GradedAlgebra::presentation() const {
  Presentation p;
  p.basis = basis_;
  p.unit = label(unit_);
  p.generators = generators_;
  const std::size_t n = basis_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == unit_) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == unit_) continue;
      const auto prod = basis_product(i, j);
      if (prod.empty()) continue;
      Presentation::Product entry{label(i), label(j), {}};
      for (const auto& t : prod) entry.result.emplace_back(label(t.index), t.coeff);
      p.products.push_back(std::move(entry));
    }
  }
  return p;
}

AlgebraPtr GradedAlgebra::from_presentation(const Presentation& p) {
  std::shared_ptr<GradedAlgebra> alg(new GradedAlgebra());
  if (p.basis.empty()) throw AlgebraError(AlgebraErrc::UnitMissing, "empty basis");
  for (const auto& b : p.basis) {
    if (b.degree < 0) {
      throw AlgebraError(AlgebraErrc::MalformedPresentation,
                         "basis element '" + b.label + "' has negative degree");
    }
    if (b.label.empty()) throw AlgebraError(AlgebraErrc::MalformedPresentation, "empty label");
  }
  alg->basis_ = p.basis;
  alg->index_labels();
  auto unit = alg->index_.find(p.unit);
  if (unit == alg->index_.end()) {
    throw AlgebraError(AlgebraErrc::UnitMissing, "unit label '" + p.unit + "' is not a basis element");
  }
  alg->unit_ = unit->second;

  const std::size_t n = alg->basis_.size();
  alg->table_.assign(n * n, {});
  std::vector<bool> given(n * n, false);
  for (const auto& prod : p.products) {
    const std::size_t i = alg->index_of(prod.left);
    const std::size_t j = alg->index_of(prod.right);
    if (given[i * n + j]) {
      throw AlgebraError(AlgebraErrc::MalformedPresentation,
                         "product " + pair_name(*alg, i, j) + " listed twice");
    }
    given[i * n + j] = true;
    std::map<std::size_t, Rational> acc;
    for (const auto& [label, coeff] : prod.result) acc[alg->index_of(label)] += coeff;
    alg->table_[i * n + j] = to_sparse(acc);
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (!given[alg->unit_ * n + b]) alg->table_[alg->unit_ * n + b] = {{b, Rational(1)}};
    if (!given[b * n + alg->unit_]) alg->table_[b * n + alg->unit_] = {{b, Rational(1)}};
  }
  for (const auto& g : p.generators) alg->index_of(g);
  alg->generators_ = p.generators;
  return alg;
}

AlgebraPtr GradedAlgebra::tensor(AlgebraPtr left, AlgebraPtr right, std::vector<std::string> labels,
                                 std::vector<std::string> generators) {
  std::shared_ptr<GradedAlgebra> alg(new GradedAlgebra());
  const std::size_t nl = left->dimension(), nr = right->dimension();
  alg->basis_.reserve(nl * nr);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nr; ++j) {
      alg->basis_.push_back({std::move(labels[i * nr + j]), left->degree(i) + right->degree(j)});
    }
  }
  alg->index_labels();
  alg->unit_ = left->unit_index() * nr + right->unit_index();
  alg->generators_ = std::move(generators);
  alg->tensor_ = TensorFactors{std::move(left), std::move(right)};
  return alg;
}

AlgebraPtr validate_algebra(const Presentation& p) {
  auto alg = GradedAlgebra::from_presentation(p);
  alg->check_invariants();
  return alg;
}

AlgebraPtr tensor_square(const AlgebraPtr& a) {
  const std::size_t n = a->dimension();
  std::vector<std::string> labels;
  labels.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back(wrap_tensor_label(a->label(i)) + "⊗" + wrap_tensor_label(a->label(j)));
    }
  }
  return GradedAlgebra::tensor(a, a, std::move(labels), {});
}

AlgebraPtr kunneth(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t na = a->dimension(), nb = b->dimension();
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  std::set<std::string> seen;
  bool collision = false;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      std::string l;
      if (i == a->unit_index()) {
        l = b->label(j);
        if (j == b->unit_index()) l = a->label(i);
      } else if (j == b->unit_index()) {
        l = a->label(i);
      } else {
        l = a->label(i) + "·" + b->label(j);
      }
      collision |= !seen.insert(l).second;
      labels.push_back(std::move(l));
    }
  }
  if (collision) {
    labels.clear();
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        labels.push_back(wrap_tensor_label(a->label(i)) + "⊗" + wrap_tensor_label(b->label(j)));
      }
    }
  }
  std::vector<std::string> gens;
  for (const auto& g : a->generators()) gens.push_back(labels[a->index_of(g) * nb + b->unit_index()]);
  for (const auto& g : b->generators()) gens.push_back(labels[a->unit_index() * nb + b->index_of(g)]);
  return GradedAlgebra::tensor(a, b, std::move(labels), std::move(gens));
}

// ---------------------------------------------------------------------------

AlgElement::AlgElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

AlgElement::AlgElement(AlgebraPtr algebra, std::map<std::size_t, Rational> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first >= algebra_->dimension()) {
      throw AlgebraError(AlgebraErrc::UnknownLabel, "basis index out of range");
    }
    it->second.canonicalize();
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
  }
}

AlgElement AlgElement::basis(const AlgebraPtr& algebra, const std::string& label) {
  return AlgElement(algebra, {{algebra->index_of(label), Rational(1)}});
}

AlgElement AlgElement::unit(const AlgebraPtr& algebra) {
  return AlgElement(algebra, {{algebra->unit_index(), Rational(1)}});
}

AlgElement AlgElement::from_labels(const AlgebraPtr& algebra,
                                   const std::vector<std::pair<std::string, Rational>>& terms) {
  std::map<std::size_t, Rational> m;
  for (const auto& [label, c] : terms) m[algebra->index_of(label)] += c;
  return AlgElement(algebra, std::move(m));
}

Rational AlgElement::coefficient(const std::string& label) const {
  auto it = coeffs_.find(algebra_->index_of(label));
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<int> AlgElement::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [i, c] : coeffs_) {
    const int d = algebra_->degree(i);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

void AlgElement::require_same(const AlgElement& other) const {
  if (algebra_ != other.algebra_) {
    throw AlgebraError(AlgebraErrc::AlgebraMismatch, "elements belong to different algebras");
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& other) {
  require_same(other);
  for (const auto& [i, c] : other.coeffs_) {
    auto& slot = coeffs_[i];
    slot += c;
    if (slot == 0) coeffs_.erase(i);
  }
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& other) {
  require_same(other);
  for (const auto& [i, c] : other.coeffs_) {
    auto& slot = coeffs_[i];
    slot -= c;
    if (slot == 0) coeffs_.erase(i);
  }
  return *this;
}

AlgElement& AlgElement::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, c] : coeffs_) c *= s;
  return *this;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  a.require_same(b);
  std::map<std::size_t, Rational> acc;
  for (const auto& [i, ci] : a.coeffs_) {
    for (const auto& [j, cj] : b.coeffs_) {
      for (const auto& t : a.algebra_->basis_product(i, j)) acc[t.index] += ci * cj * t.coeff;
    }
  }
  return AlgElement(a.algebra_, std::move(acc));
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
}

std::string AlgElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) os << format_rational(mag) << "*";
    os << algebra_->label(i);
  }
  return os.str();
}

AlgElement multiply(const AlgElement& x, const AlgElement& y) { return x * y; }

AlgElement power(const AlgElement& x, unsigned exponent) {
  AlgElement out = AlgElement::unit(x.algebra());
  for (unsigned k = 0; k < exponent; ++k) out = out * x;
  return out;
}

AlgElement cup_hom(const AlgElement& z) {
  const auto& alg = *z.algebra();
  if (!alg.is_tensor() || alg.factors().left != alg.factors().right) {
    throw AlgebraError(AlgebraErrc::AlgebraMismatch, "cup_hom needs an element of a tensor square");
  }
  const AlgebraPtr& base = alg.factors().left;
  std::map<std::size_t, Rational> acc;
  for (const auto& [k, c] : z.coefficients()) {
    const auto [i, j] = alg.split_index(k);
    for (const auto& t : base->basis_product(i, j)) acc[t.index] += c * t.coeff;
  }
  return AlgElement(base, std::move(acc));
}

AlgElement canonical_divisor(const AlgebraPtr& square, const AlgElement& x) {
  const auto& f = square->factors();
  if (f.left != f.right || x.algebra() != f.left) {
    throw AlgebraError(AlgebraErrc::AlgebraMismatch, "element is not from the squared algebra");
  }
  const std::size_t unit = f.left->unit_index();
  std::map<std::size_t, Rational> m;
  for (const auto& [i, c] : x.coefficients()) {
    m[square->pair_index(unit, i)] += c;
    m[square->pair_index(i, unit)] -= c;
  }
  return AlgElement(square, std::move(m));
}

AlgElement canonical_divisor(const AlgebraPtr& square, const std::string& label) {
  return canonical_divisor(square, AlgElement::basis(square->factors().left, label));
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw AlgebraError(AlgebraErrc::BadCoefficient, "'" + text + "' is not a rational p/q");
  }
  std::string num = m[1].str();
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(1);
  if (m[2].matched) {
    d = mpz_class(m[2].str(), 10);
    if (d == 0) throw AlgebraError(AlgebraErrc::BadCoefficient, "'" + text + "' has zero denominator");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace tcplan::algebra
