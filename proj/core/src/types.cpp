#include "swarmloc/types.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarmloc {

void DistanceMatrix::set(RobotId i, RobotId j, double meters) {
  if (i == j) throw std::invalid_argument("DistanceMatrix: diagonal is fixed at zero");
  if (!(meters > 0.0) || !std::isfinite(meters))
    throw std::invalid_argument("DistanceMatrix: entries must be positive and finite");
  d_[idx(i, j)] = meters;
  d_[idx(j, i)] = meters;
}

void DistanceMatrix::clear(RobotId i, RobotId j) {
  d_[idx(i, j)] = kMissing;
  d_[idx(j, i)] = kMissing;
}

bool DistanceMatrix::has(RobotId i, RobotId j) const {
  if (i == j) return true;
  return d_[idx(i, j)] != kMissing;
}

std::optional<double> DistanceMatrix::get(RobotId i, RobotId j) const {
  if (i == j) return 0.0;
  double v = d_[idx(i, j)];
  if (v == kMissing) return std::nullopt;
  return v;
}

bool DistanceMatrix::triangle_consistent(double tol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (!has(i, j)) continue;
      for (int k = 0; k < n_; ++k) {
        if (k == i || k == j || !has(i, k) || !has(j, k)) continue;
        if (at(i, j) > at(i, k) + at(k, j) + tol) return false;
      }
    }
  return true;
}

double configuration_distance(const Configuration& a, const Configuration& b,
                              const std::vector<RobotId>& robots) {
  double worst = 0.0;
  for (RobotId r : robots) {
    if (!a.has(r) || !b.has(r)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, (a.at(r) - b.at(r)).norm());
  }
  return worst;
}

}  // namespace swarmloc
