#pragma once

#include <optional>
#include <vector>

#include "swarmloc/scenario.hpp"
#include "swarmloc/types.hpp"

namespace swarmloc {

/// One ground-truth pose sample. The heading points along the displacement
/// to the next sample whenever the robot is moving; velocity is the average
/// velocity over the step starting here (zero at the final sample).
struct PoseSample {
  Timestamp t{0.0};
  Vec3 position;
  Vec3 velocity;
  double heading{0.0};
  bool moving{false};
};

struct TrajectorySet {
  std::vector<std::vector<PoseSample>> robots;  // [robot][step 0..n_steps]
  bool constraint_violated{false};  // best-effort window keeping failed somewhere

  int n_robots() const { return static_cast<int>(robots.size()); }
  int n_steps() const {
    return robots.empty() ? 0 : static_cast<int>(robots[0].size()) - 1;
  }
};

/// Per-robot slice of an observation round.
struct RobotObservation {
  double heading{0.0};
  bool moving{false};
  double depth{0.0};
  std::optional<Vec3> velocity;  // present in speed-meter mode only
};

/// One synchronized snapshot of everything the swarm broadcast.
struct ObservationRound {
  Timestamp t{0.0};
  std::vector<RobotObservation> robots;
  DistanceMatrix distances;
};

/// One asynchronous heartbeat: a robot's own quantities plus the ranges it
/// measured at its emission instant.
struct Emission {
  RobotId robot{0};
  Timestamp t{0.0};
  RobotObservation obs;
  std::vector<std::pair<RobotId, double>> distances;
};

/// Deterministic correlated-random-walk trajectories. Pairwise distances
/// are kept inside [d_min, d_max] and positions inside the arena by
/// resampling proposed steps; if the retry budget runs out the violation
/// flag is set rather than failing the run.
TrajectorySet generate_trajectories(const ScenarioConfig& config);

/// Synchronized measurement stream: truth plus zero-mean Gaussian noise per
/// the config sigmas. With all sigmas zero the rounds equal the truth.
std::vector<ObservationRound> synthesize_observations(const TrajectorySet& traj,
                                                      const ScenarioConfig& config);

/// Asynchronous heartbeat stream; each robot emits at round time plus
/// uniform jitter in [0, jitter_max].
std::vector<Emission> synthesize_emissions(const TrajectorySet& traj,
                                           const ScenarioConfig& config);

/// Rebuilds a synchronized round at `target` by per-robot linear
/// interpolation between bracketing emissions. Throws
/// InsufficientBracketing when a robot lacks emissions on both sides.
ObservationRound interpolate_to_round(const std::vector<Emission>& emissions,
                                      Timestamp target, int n_robots);

/// The round stream a solver consumes: the synchronized stream, or in
/// asynchronous mode the rounds reconstructed at t_1..t_n (t_0 has no left
/// bracket under non-negative jitter).
std::vector<ObservationRound> observation_rounds(const TrajectorySet& traj,
                                                 const ScenarioConfig& config);

/// Truth as a round (no noise); oracle for tests and metrics.
ObservationRound true_round(const TrajectorySet& traj, int step,
                            const ScenarioConfig& config);

}  // namespace swarmloc
