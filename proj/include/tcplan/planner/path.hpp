#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "tcplan/planner/geometry.hpp"

namespace tcplan::planner {

// A continuous map [0,1] -> X. Segments partition [0,1]; a segment flagged
// uniform_speed is traversed at constant ambient speed.
class Path {
 public:
  struct Segment {
    double t0 = 0.0;
    double t1 = 1.0;
    bool uniform_speed = false;
  };
  using Eval = std::function<ConfigPoint(double)>;

  Path(Eval eval, std::vector<Segment> segments);

  // t is clamped to [0,1].
  ConfigPoint operator()(double t) const;
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  Eval eval_;
  std::vector<Segment> segments_;
};

Path constant_path(ConfigPoint p);
Path straight_segment(ConfigPoint a, ConfigPoint b);
// Constant-speed shortest great-circle arc; requires a != -b.
Path geodesic_arc(ConfigPoint a, ConfigPoint b);
// Counterclockwise constant-speed arc on the unit circle, sweeping an angle
// in (0, 2pi]; a full turn when a == b.
Path counterclockwise_arc(ConfigPoint a, ConfigPoint b);
// first on [0, split], second on [split, 1].
Path concatenate(Path first, Path second, double split);
// Componentwise pairing into the product space (coordinates concatenated).
Path pair_paths(Path x, Path y);

struct PathSample {
  double t;
  ConfigPoint point;
};

// N uniform parameters, t = 0 and t = 1 included. Requires N >= 2.
std::vector<PathSample> sample_path(const Path& path, std::size_t n);

}  // namespace tcplan::planner
