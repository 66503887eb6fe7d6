#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcplan::planner {

enum class PlannerErrc {
  CoverageGap,
  ParityError,
  HomotopyEndpointMismatch,
  LengthMismatch,
  InvalidPoint,
  NoPlanner,
};

const char* to_string(PlannerErrc code);

class PlannerError : public std::runtime_error {
 public:
  PlannerError(PlannerErrc code, const std::string& what);
  PlannerErrc code() const noexcept { return code_; }

 private:
  PlannerErrc code_;
};

// Flat ambient coordinates, factors concatenated in order.
struct ConfigPoint {
  std::vector<double> coords;

  std::size_t size() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }
  friend bool operator==(const ConfigPoint&, const ConfigPoint&) = default;
};

enum class FactorKind { Sphere, Euclidean, PuncturedPlane };

struct Factor {
  FactorKind kind = FactorKind::Euclidean;
  int dim = 0;              // intrinsic dimension
  std::size_t offset = 0;   // into ConfigPoint::coords

  std::size_t ambient() const { return kind == FactorKind::Sphere ? static_cast<std::size_t>(dim) + 1 : static_cast<std::size_t>(dim); }
};

class Space {
 public:
  static Space sphere(int n);
  static Space euclidean(int n);
  static Space punctured_plane();
  static Space product(const Space& a, const Space& b);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t ambient_dim() const { return ambient_; }

  std::span<const double> slice(const ConfigPoint& p, std::size_t factor) const;
  std::span<double> slice(ConfigPoint& p, std::size_t factor) const;

  // Sphere factors within `tol` of unit norm, punctured factors nonzero.
  bool contains(const ConfigPoint& p, double tol = 1e-9) const;
  // Renormalizes sphere factors whose norm is within `renorm_tol` of 1;
  // throws PlannerError(InvalidPoint) otherwise.
  ConfigPoint canonicalize(ConfigPoint p, double renorm_tol = 1e-6) const;

  // Split after the first `left_ambient` coordinates.
  std::pair<ConfigPoint, ConfigPoint> split(const ConfigPoint& p, std::size_t left_ambient) const;

 private:
  std::vector<Factor> factors_;
  std::size_t ambient_ = 0;
};

ConfigPoint join(const ConfigPoint& a, const ConfigPoint& b);

// Vector helpers on raw coordinate spans.
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);
std::vector<double> negated(std::span<const double> a);
std::vector<double> unit_vector(std::size_t ambient, std::size_t axis);

// Great-circle distance between unit vectors, accurate near 0 and pi.
double geodesic_distance(std::span<const double> a, std::span<const double> b);

}  // namespace tcplan::planner
