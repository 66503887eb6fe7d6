#include "tcplan/verify/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tcplan/planner/spheres.hpp"

namespace tcplan::verify {

using planner::Factor;
using planner::FactorKind;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of the combined key
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

std::vector<double> gaussian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

std::vector<double> random_factor(const Factor& f, Rng& rng) {
  if (f.kind == FactorKind::PuncturedPlane) {
    // log-uniform radius in [0.1, 10], uniform angle
    std::uniform_real_distribution<double> log_r(std::log(0.1), std::log(10.0));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double r = std::exp(log_r(rng)), a = angle(rng);
    return {r * std::cos(a), r * std::sin(a)};
  }
  std::vector<double> v = gaussian(f.ambient(), rng);
  if (f.kind == FactorKind::Sphere) {
    const double n = planner::norm(v);
    for (double& x : v) x /= n;
  }
  return v;
}

using FactorPair = std::pair<std::vector<double>, std::vector<double>>;

std::vector<FactorPair> factor_injections(const Factor& f, Rng& rng) {
  const auto r = random_factor(f, rng);
  const auto s = random_factor(f, rng);
  std::vector<FactorPair> out{{r, r}, {r, s}};
  if (f.kind == FactorKind::Euclidean) {
    out.push_back({r, planner::negated(r)});
    return out;
  }
  if (f.kind == FactorKind::PuncturedPlane) {
    // opposite points close to the puncture
    std::vector<double> small = r;
    for (double& x : small) x *= 1e-3 / planner::norm(r);
    out.push_back({small, planner::negated(small)});
    out.push_back({r, planner::negated(r)});
    return out;
  }
  const auto b0 = planner::sphere_pole(f.dim);
  const auto c = planner::sphere_chart_center(f.dim);
  const auto e2 = planner::unit_vector(f.ambient(), 1);
  const auto minus = [](const std::vector<double>& v) { return planner::negated(v); };
  out.push_back({r, minus(r)});
  out.push_back({minus(b0), b0});
  out.push_back({b0, minus(b0)});
  out.push_back({b0, b0});
  out.push_back({r, b0});
  out.push_back({c, r});
  out.push_back({r, c});
  out.push_back({c, c});
  out.push_back({minus(c), c});
  out.push_back({c, e2});
  return out;
}

}  // namespace

ConfigPoint random_point(const Space& space, Rng& rng) {
  ConfigPoint p{std::vector<double>(space.ambient_dim())};
  for (std::size_t k = 0; k < space.factors().size(); ++k) {
    const auto v = random_factor(space.factors()[k], rng);
    std::copy(v.begin(), v.end(), space.slice(p, k).begin());
  }
  return p;
}

ConfigPoint perturb(const Space& space, const ConfigPoint& p, double delta, Rng& rng) {
  ConfigPoint q = p;
  for (std::size_t k = 0; k < space.factors().size(); ++k) {
    const Factor& f = space.factors()[k];
    auto x = space.slice(q, k);
    std::vector<double> d = gaussian(f.ambient(), rng);
    if (f.kind == FactorKind::Sphere) {
      const double c = planner::dot(d, x);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= c * x[i];
    }
    // punctured factors move by delta relative to |x| (the log-polar metric)
    const double scale = f.kind == FactorKind::PuncturedPlane ? delta * planner::norm(x) : delta;
    const double n = planner::norm(d);
    for (std::size_t i = 0; i < d.size(); ++i) x[i] += scale * d[i] / n;
    if (f.kind == FactorKind::Sphere) {
      const double m = planner::norm(x);
      for (double& v : x) v /= m;
    }
  }
  return q;
}

std::vector<std::pair<ConfigPoint, ConfigPoint>> adversarial_pairs(const Space& space, std::uint64_t seed,
                                                                   std::size_t cap) {
  Rng rng(stream_seed(seed, 0xAD5E));
  std::vector<std::vector<FactorPair>> lists;
  std::size_t total = 1;
  for (const auto& f : space.factors()) {
    lists.push_back(factor_injections(f, rng));
    total = total > cap * 64 ? total : total * lists.back().size();
  }

  std::vector<std::size_t> picks(std::min(total, cap));
  if (total <= cap) {
    std::iota(picks.begin(), picks.end(), std::size_t{0});
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, total - 1);
    for (auto& p : picks) p = pick(rng);
  }

  std::vector<std::pair<ConfigPoint, ConfigPoint>> out;
  out.reserve(picks.size());
  for (std::size_t code : picks) {
    ConfigPoint a{std::vector<double>(space.ambient_dim())}, b = a;
    for (std::size_t k = 0; k < lists.size(); ++k) {
      const auto& choice = lists[k][code % lists[k].size()];
      code /= lists[k].size();
      std::copy(choice.first.begin(), choice.first.end(), space.slice(a, k).begin());
      std::copy(choice.second.begin(), choice.second.end(), space.slice(b, k).begin());
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace tcplan::verify
