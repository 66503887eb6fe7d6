#pragma once

// Independent reference computations for the tests. Nothing here uses the
// library's algebra code: coefficients are plain integers, tensor products
// are multiplied term by term with their own sign rule.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Integer graded algebra given by a product table on labels.
struct TinyAlgebra {
  std::map<std::string, int> degree;
  std::string unit = "1";
  // (x, y) -> {label: coeff}; products with the unit are implicit.
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::int64_t>> table;

  std::map<std::string, std::int64_t> mul(const std::string& x, const std::string& y) const {
    if (x == unit) return {{y, 1}};
    if (y == unit) return {{x, 1}};
    auto it = table.find({x, y});
    return it == table.end() ? std::map<std::string, std::int64_t>{} : it->second;
  }
};

using Pair = std::pair<std::string, std::string>;
using Tensor = std::map<Pair, std::int64_t>;

inline void add_to(Tensor& t, const Pair& key, std::int64_t c) {
  if ((t[key] += c) == 0) t.erase(key);
}

// (a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd
inline Tensor multiply(const TinyAlgebra& alg, const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [p, cp] : x) {
    for (const auto& [q, cq] : y) {
      const int sign = (alg.degree.at(p.second) * alg.degree.at(q.first)) % 2 == 0 ? 1 : -1;
      for (const auto& [l, cl] : alg.mul(p.first, q.first)) {
        for (const auto& [r, cr] : alg.mul(p.second, q.second)) add_to(out, {l, r}, sign * cp * cq * cl * cr);
      }
    }
  }
  return out;
}

inline Tensor canonical(const TinyAlgebra& alg, const std::string& a) {
  Tensor t;
  add_to(t, {alg.unit, a}, 1);
  add_to(t, {a, alg.unit}, -1);
  return t;
}

inline Tensor power(const TinyAlgebra& alg, const Tensor& x, int k) {
  Tensor acc{{{alg.unit, alg.unit}, 1}};
  for (int i = 0; i < k; ++i) acc = multiply(alg, acc, x);
  return acc;
}

inline TinyAlgebra sphere(int n) {
  TinyAlgebra a;
  a.degree = {{"1", 0}, {"u", n}};
  return a;
}

inline TinyAlgebra cpn(int n) {
  TinyAlgebra a;
  auto name = [](int k) { return k == 1 ? std::string("u") : "u^" + std::to_string(k); };
  a.degree["1"] = 0;
  for (int k = 1; k <= n; ++k) a.degree[name(k)] = 2 * k;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n; ++j) a.table[{name(i), name(j)}] = {{name(i + j), 1}};
  }
  return a;
}

inline TinyAlgebra surface(int g) {
  TinyAlgebra a;
  a.degree = {{"1", 0}, {"A", 2}};
  for (int i = 1; i <= g; ++i) {
    const std::string u = "u" + std::to_string(i), v = "v" + std::to_string(i);
    a.degree[u] = a.degree[v] = 1;
    a.table[{u, v}] = {{"A", 1}};
    a.table[{v, u}] = {{"A", -1}};
  }
  return a;
}

// Exterior algebra on n degree-1 generators a1..an: labels are sorted
// subsets written "a1·a3", the cohomology of the n-torus.
inline TinyAlgebra torus(int n) {
  TinyAlgebra alg;
  auto label = [](unsigned mask) {
    if (mask == 0) return std::string("1");
    std::string s;
    for (int i = 0; i < 32; ++i) {
      if (mask >> i & 1u) s += (s.empty() ? "" : "·") + ("a" + std::to_string(i + 1));
    }
    return s;
  };
  for (unsigned m = 0; m < (1u << n); ++m) alg.degree[label(m)] = __builtin_popcount(m);
  for (unsigned x = 1; x < (1u << n); ++x) {
    for (unsigned y = 1; y < (1u << n); ++y) {
      if (x & y) continue;
      // sign of merging the sorted lists x and y: count pairs (i in x, j in y) with i > j
      int inversions = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) inversions += (x >> i & 1u) && (y >> j & 1u);
      }
      alg.table[{label(x), label(y)}] = {{label(x | y), inversions % 2 == 0 ? 1 : -1}};
    }
  }
  return alg;
}

// Longest nonzero product of canonical divisors 1⊗a - a⊗1 (repeats allowed)
// found by plain enumeration of nondecreasing index sequences.
inline int canonical_zdcl(const TinyAlgebra& alg, const std::vector<std::string>& gens, int max_len) {
  int best = 0;
  std::vector<Tensor> divisors;
  for (const auto& g : gens) divisors.push_back(canonical(alg, g));
  std::vector<std::pair<Tensor, std::size_t>> frontier{{Tensor{{{alg.unit, alg.unit}, 1}}, 0}};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<Tensor, std::size_t>> next;
    for (const auto& [t, start] : frontier) {
      for (std::size_t i = start; i < divisors.size(); ++i) {
        Tensor p = multiply(alg, t, divisors[i]);
        if (!p.empty()) next.push_back({std::move(p), i});
      }
    }
    if (!next.empty()) best = len;
    frontier = std::move(next);
  }
  return best;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int rank(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

// Rank of the cup-product map A ⊗ A -> A.
inline int cup_rank(const TinyAlgebra& alg) {
  std::vector<std::string> labels;
  for (const auto& [l, d] : alg.degree) labels.push_back(l);
  std::vector<std::vector<std::int64_t>> m(labels.size(), std::vector<std::int64_t>(labels.size() * labels.size(), 0));
  std::size_t col = 0;
  for (const auto& x : labels) {
    for (const auto& y : labels) {
      for (const auto& [l, c] : alg.mul(x, y)) {
        for (std::size_t r = 0; r < labels.size(); ++r) {
          if (labels[r] == l) m[r][col] = c;
        }
      }
      ++col;
    }
  }
  return rank(m);
}

}  // namespace oracle
