#pragma once

#include <array>
#include <map>
#include <vector>

#include "swarmloc/sim.hpp"
#include "swarmloc/types.hpp"

namespace swarmloc {

/// The convention that removes the rigid-motion freedom from the distance
/// system: origin robot at (0,0,0), axis robot on the x axis, plane robot
/// in the xy-plane. What remains is the finite reflection family.
struct GaugeConvention {
  RobotId origin{0};
  RobotId axis{1};
  RobotId plane{2};
};

/// One solution of the gauge-fixed distance system, tagged with its
/// reflection signs (s2, s3, s4) relative to the base construction.
struct Candidate {
  Configuration config;
  std::array<int, 3> signs{1, 1, 1};
};

struct CandidateSet {
  std::vector<Candidate> candidates;
  GaugeConvention gauge;
  std::array<RobotId, 4> members;
  Timestamp t{0.0};

  size_t size() const { return candidates.size(); }
};

/// Per-robot displacement over the inter-round interval, relative to the
/// origin robot, in the same frame as the t0 candidate coordinates.
struct MotionHypothesis {
  std::map<RobotId, Vec3> displacement;
};

/// A motion-consistent candidate pair. `at_t1` is the t0 candidate moved
/// by the hypothesis (so both configurations share the t0 frame).
struct CandidatePairMatch {
  int index_t0{-1};
  int index_t1{-1};
  Configuration at_t0;
  Configuration at_t1;
  double residual{0.0};
};

/// All surviving pairs; two or more means the motion could not break the
/// reflection symmetry.
struct DisambiguationResult {
  std::vector<CandidatePairMatch> pairs;
  bool unique() const { return pairs.size() == 1; }
};

/// Solves the 6-distance system for 4 robots in closed form under the
/// gauge and enumerates the sign family. Every returned candidate
/// reproduces the six input distances within tol; degenerate coordinates
/// (below the duplicate-merge threshold) collapse the family to fewer
/// than 8 members. Throws MissingDistance / NotRealizable.
CandidateSet enumerate_candidates(const DistanceMatrix& distances,
                                  const GaugeConvention& gauge, RobotId fourth,
                                  double tol);

/// Expresses a configuration in the gauge frame: translate the origin
/// robot to zero, then the unique proper rotation putting the axis robot
/// on +x and the plane robot into the xy-plane with y >= 0. Chirality is
/// preserved.
Configuration gauge_align(const Configuration& config, const GaugeConvention& gauge);

/// Keeps every pair (c0, c1) whose moved prediction c0 + motion matches
/// c1 within tol once re-expressed in the gauge (the t1 set is
/// gauge-fixed while the prediction lives in the t0 frame). Throws
/// NoConsistentPair when nothing survives.
DisambiguationResult disambiguate_by_motion(const CandidateSet& set_t0,
                                            const CandidateSet& set_t1,
                                            const MotionHypothesis& motion,
                                            double tol);

/// Result of the full two-round pipeline. World configurations are
/// north-aligned and origin-robot-relative; gauge configurations are the
/// same points expressed under the gauge convention.
struct ConstellationResult {
  bool unique{false};
  Configuration world_t0, world_t1;
  Configuration gauge_t0, gauge_t1;
  std::vector<CandidatePairMatch> pairs;  // one per distinct surviving hypothesis
  int candidate_count_t0{0};
  int candidate_count_t1{0};
};

/// Method 1 on two rounds carrying velocities: enumerate both candidate
/// sets, build the motion hypothesis from the broadcast velocities
/// (origin-relative), recover the world-to-gauge rotation per candidate
/// from motion + t1 distances + measured depths, and keep the hypotheses
/// consistent with all of it. Unique survivor = the constellation.
ConstellationResult solve_constellation(const ObservationRound& round0,
                                        const ObservationRound& round1,
                                        const GaugeConvention& gauge, RobotId fourth,
                                        double tol);

/// Origin plus its three nearest neighbours by measured distance.
std::array<RobotId, 4> pick_constellation_members(const ObservationRound& round,
                                                  RobotId origin);

/// Squared volume of the tetrahedron with the given pairwise distances
/// (from the Cayley-Menger determinant). Negative means the six distances
/// are not realizable by four points in 3D.
double squared_volume_from_distances(double d12, double d13, double d14,
                                     double d23, double d24, double d34);

}  // namespace swarmloc
