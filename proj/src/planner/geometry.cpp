#include "tcplan/planner/geometry.hpp"

#include <cmath>

namespace tcplan::planner {

const char* to_string(PlannerErrc code) {
  switch (code) {
    case PlannerErrc::CoverageGap: return "CoverageGap";
    case PlannerErrc::ParityError: return "ParityError";
    case PlannerErrc::HomotopyEndpointMismatch: return "HomotopyEndpointMismatch";
    case PlannerErrc::LengthMismatch: return "LengthMismatch";
    case PlannerErrc::InvalidPoint: return "InvalidPoint";
    case PlannerErrc::NoPlanner: return "NoPlanner";
  }
  return "Unknown";
}

PlannerError::PlannerError(PlannerErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Space Space::sphere(int n) {
  Space s;
  s.factors_.push_back({FactorKind::Sphere, n, 0});
  s.ambient_ = static_cast<std::size_t>(n) + 1;
  return s;
}

Space Space::euclidean(int n) {
  Space s;
  s.factors_.push_back({FactorKind::Euclidean, n, 0});
  s.ambient_ = static_cast<std::size_t>(n);
  return s;
}

Space Space::punctured_plane() {
  Space s;
  s.factors_.push_back({FactorKind::PuncturedPlane, 2, 0});
  s.ambient_ = 2;
  return s;
}

Space Space::product(const Space& a, const Space& b) {
  Space s = a;
  for (Factor f : b.factors_) {
    f.offset += a.ambient_;
    s.factors_.push_back(f);
  }
  s.ambient_ = a.ambient_ + b.ambient_;
  return s;
}

std::span<const double> Space::slice(const ConfigPoint& p, std::size_t factor) const {
  const Factor& f = factors_.at(factor);
  return std::span<const double>(p.coords).subspan(f.offset, f.ambient());
}

std::span<double> Space::slice(ConfigPoint& p, std::size_t factor) const {
  const Factor& f = factors_.at(factor);
  return std::span<double>(p.coords).subspan(f.offset, f.ambient());
}

bool Space::contains(const ConfigPoint& p, double tol) const {
  if (p.size() != ambient_) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto x = slice(p, k);
    for (double v : x) {
      if (!std::isfinite(v)) return false;
    }
    if (factors_[k].kind == FactorKind::Sphere && std::abs(norm(x) - 1.0) > tol) return false;
    if (factors_[k].kind == FactorKind::PuncturedPlane && norm(x) == 0.0) return false;
  }
  return true;
}

ConfigPoint Space::canonicalize(ConfigPoint p, double renorm_tol) const {
  if (p.size() != ambient_) {
    throw PlannerError(PlannerErrc::InvalidPoint, "expected " + std::to_string(ambient_) + " coordinates, got " +
                                                      std::to_string(p.size()));
  }
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    auto x = slice(p, k);
    for (double v : x) {
      if (!std::isfinite(v)) throw PlannerError(PlannerErrc::InvalidPoint, "non-finite coordinate");
    }
    const double n = norm(x);
    if (factors_[k].kind == FactorKind::Sphere) {
      if (std::abs(n - 1.0) > renorm_tol) {
        throw PlannerError(PlannerErrc::InvalidPoint, "factor " + std::to_string(k + 1) + " has norm " +
                                                          std::to_string(n) + ", expected a unit vector");
      }
      for (double& v : x) v /= n;
    } else if (factors_[k].kind == FactorKind::PuncturedPlane && n == 0.0) {
      throw PlannerError(PlannerErrc::InvalidPoint, "the punctured plane excludes the origin");
    }
  }
  return p;
}

std::pair<ConfigPoint, ConfigPoint> Space::split(const ConfigPoint& p, std::size_t left_ambient) const {
  ConfigPoint a, b;
  a.coords.assign(p.coords.begin(), p.coords.begin() + static_cast<std::ptrdiff_t>(left_ambient));
  b.coords.assign(p.coords.begin() + static_cast<std::ptrdiff_t>(left_ambient), p.coords.end());
  return {std::move(a), std::move(b)};
}

ConfigPoint join(const ConfigPoint& a, const ConfigPoint& b) {
  ConfigPoint out;
  out.coords.reserve(a.size() + b.size());
  out.coords.insert(out.coords.end(), a.coords.begin(), a.coords.end());
  out.coords.insert(out.coords.end(), b.coords.begin(), b.coords.end());
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::vector<double> negated(std::span<const double> a) {
  std::vector<double> out(a.begin(), a.end());
  for (double& v : out) v = -v;
  return out;
}

std::vector<double> unit_vector(std::size_t ambient, std::size_t axis) {
  std::vector<double> e(ambient, 0.0);
  e.at(axis) = 1.0;
  return e;
}

double geodesic_distance(std::span<const double> a, std::span<const double> b) {
  double diff = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += (a[i] - b[i]) * (a[i] - b[i]);
    sum += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
}

}  // namespace tcplan::planner
