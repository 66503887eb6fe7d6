#include "tcplan/planner/path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcplan::planner {

Path::Path(Eval eval, std::vector<Segment> segments) : eval_(std::move(eval)), segments_(std::move(segments)) {}

ConfigPoint Path::operator()(double t) const { return eval_(std::clamp(t, 0.0, 1.0)); }

Path constant_path(ConfigPoint p) {
  return Path([p = std::move(p)](double) { return p; }, {{0.0, 1.0, true}});
}

Path straight_segment(ConfigPoint a, ConfigPoint b) {
  return Path(
      [a = std::move(a), b = std::move(b)](double t) {
        if (t == 0.0) return a;
        if (t == 1.0) return b;
        ConfigPoint p = a;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = (1.0 - t) * a[i] + t * b[i];
        return p;
      },
      {{0.0, 1.0, true}});
}

namespace {

void normalize(std::vector<double>& v) {
  const double n = norm(v);
  for (double& x : v) x /= n;
}

}  // namespace

Path geodesic_arc(ConfigPoint a, ConfigPoint b) {
  const double theta = geodesic_distance(a.coords, b.coords);
  if (theta == 0.0) {
    return Path(
        [a, b](double t) { return t == 1.0 ? b : a; }, {{0.0, 1.0, true}});
  }
  // Unit tangent at a pointing to b, orthogonalized twice for accuracy when
  // b is close to -a.
  std::vector<double> w = b.coords;
  for (int pass = 0; pass < 2; ++pass) {
    const double c = dot(w, a.coords);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * a[i];
    normalize(w);
  }
  return Path(
      [a = std::move(a), b = std::move(b), w = std::move(w), theta](double t) {
        if (t == 0.0) return a;
        if (t == 1.0) return b;
        const double c = std::cos(t * theta), s = std::sin(t * theta);
        ConfigPoint p = a;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = c * a[i] + s * w[i];
        normalize(p.coords);
        return p;
      },
      {{0.0, 1.0, true}});
}

Path counterclockwise_arc(ConfigPoint a, ConfigPoint b) {
  double phi = std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
  if (phi <= 0.0) phi += 2.0 * std::numbers::pi;
  return Path(
      [a = std::move(a), b = std::move(b), phi](double t) {
        if (t == 0.0) return a;
        if (t == 1.0) return b;
        const double c = std::cos(t * phi), s = std::sin(t * phi);
        ConfigPoint p = a;
        p[0] = c * a[0] - s * a[1];
        p[1] = s * a[0] + c * a[1];
        return p;
      },
      {{0.0, 1.0, true}});
}

Path concatenate(Path first, Path second, double split) {
  std::vector<Path::Segment> segs;
  for (auto s : first.segments()) segs.push_back({s.t0 * split, s.t1 * split, s.uniform_speed});
  for (auto s : second.segments()) {
    segs.push_back({split + s.t0 * (1.0 - split), split + s.t1 * (1.0 - split), s.uniform_speed});
  }
  return Path(
      [first = std::move(first), second = std::move(second), split](double t) {
        if (t < split) return first(t / split);
        if (t == 1.0) return second(1.0);
        return second((t - split) / (1.0 - split));
      },
      std::move(segs));
}

Path pair_paths(Path x, Path y) {
  std::vector<double> cuts{0.0, 1.0};
  for (const auto& s : x.segments()) cuts.push_back(s.t0);
  for (const auto& s : y.segments()) cuts.push_back(s.t0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto uniform_at = [](const Path& p, double mid) {
    for (const auto& s : p.segments()) {
      if (s.t0 <= mid && mid <= s.t1) return s.uniform_speed;
    }
    return false;
  };
  std::vector<Path::Segment> segs;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
    segs.push_back({cuts[k], cuts[k + 1], uniform_at(x, mid) && uniform_at(y, mid)});
  }
  return Path([x = std::move(x), y = std::move(y)](double t) { return join(x(t), y(t)); }, std::move(segs));
}

std::vector<PathSample> sample_path(const Path& path, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_path needs at least 2 samples");
  std::vector<PathSample> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = k + 1 == n ? 1.0 : static_cast<double>(k) / static_cast<double>(n - 1);
    out.push_back({t, path(t)});
  }
  return out;
}

}  // namespace tcplan::planner
