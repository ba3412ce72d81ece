#pragma once

#include <map>
#include <optional>
#include <vector>

#include "swarmloc/geometry.hpp"

namespace swarmloc {

/// Robot ids are dense 0..N-1 within a scenario.
using RobotId = int;

/// Seconds, non-negative, strictly increasing within an observation log.
using Timestamp = double;

/// Symmetric pairwise ranges with optional-missing entries.
/// Diagonal is zero; every present off-diagonal entry is positive and finite.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kMissing) {}

  int size() const { return n_; }

  void set(RobotId i, RobotId j, double meters);
  void clear(RobotId i, RobotId j);
  bool has(RobotId i, RobotId j) const;
  std::optional<double> get(RobotId i, RobotId j) const;

  /// The entry without the missing check; callers must know it is present.
  double at(RobotId i, RobotId j) const { return d_[idx(i, j)]; }

  /// True when every fully-present triple satisfies the triangle
  /// inequality within tol.
  bool triangle_consistent(double tol) const;

 private:
  static constexpr double kMissing = -1.0;
  size_t idx(RobotId i, RobotId j) const {
    return static_cast<size_t>(i) * n_ + j;
  }

  int n_{0};
  std::vector<double> d_;
};

/// Relative positions in an origin-robot frame. The origin robot sits at
/// (0,0,0) at the frame's reference time step; +x is north.
struct Configuration {
  RobotId origin{0};
  Timestamp timestamp{0.0};
  std::map<RobotId, Vec3> positions;

  bool has(RobotId id) const { return positions.count(id) != 0; }
  const Vec3& at(RobotId id) const { return positions.at(id); }
};

/// Largest position difference between two configurations over the given
/// robots (infinity if either is missing one).
double configuration_distance(const Configuration& a, const Configuration& b,
                              const std::vector<RobotId>& robots);

}  // namespace swarmloc
