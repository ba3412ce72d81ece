#include "swarmloc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "swarmloc/error.hpp"
#include "swarmloc/rng.hpp"

namespace swarmloc {

namespace {

constexpr std::uint64_t kPlacementStream = 0;
constexpr std::uint64_t kMotionStream = 1;
constexpr std::uint64_t kNoiseStream = 2;
constexpr std::uint64_t kJitterStream = 3;

bool pair_window_ok(const Vec3& a, const Vec3& b, const ScenarioConfig& cfg) {
  double d = euclidean_distance(a, b);
  return d >= cfg.d_min && d <= cfg.d_max;
}

bool in_arena(const Vec3& p, const ScenarioConfig& cfg) {
  return std::hypot(p.x, p.y) <= cfg.arena_radius;
}

std::vector<Vec3> place_initial(const ScenarioConfig& cfg, Rng& rng) {
  // A disc of radius min(arena, d_max/2) guarantees the pairwise upper
  // bound; the lower bound is enforced by rejection.
  double placement_radius = std::min(cfg.arena_radius, cfg.d_max / 2.0);
  constexpr int kRestarts = 200;
  constexpr int kTriesPerRobot = 2000;
  for (int restart = 0; restart < kRestarts; ++restart) {
    std::vector<Vec3> pts;
    bool ok = true;
    for (int i = 0; i < cfg.n_robots && ok; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < kTriesPerRobot; ++attempt) {
        double r = placement_radius * std::sqrt(rng.uniform());
        double phi = rng.uniform(-kPi, kPi);
        Vec3 p{r * std::cos(phi), r * std::sin(phi),
               rng.uniform(cfg.depth_min, cfg.depth_max)};
        bool clear = true;
        for (const Vec3& q : pts)
          if (euclidean_distance(p, q) < cfg.d_min) {
            clear = false;
            break;
          }
        if (clear) {
          pts.push_back(p);
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (ok) return pts;
  }
  throw GenerationFailure("could not place " + std::to_string(cfg.n_robots) +
                          " robots with d_min " + std::to_string(cfg.d_min) +
                          " inside radius " + std::to_string(placement_radius));
}

struct StepProposal {
  double heading;
  double speed;   // horizontal, m/s
  double dz;      // depth change over the step, m
  Vec3 displacement(double dt) const {
    return {speed * dt * std::cos(heading), speed * dt * std::sin(heading), dz};
  }
};

StepProposal propose_step(double prev_heading, const ScenarioConfig& cfg, Rng& rng) {
  StepProposal p;
  double max_turn = (1.0 - cfg.heading_persistence) * kPi;
  p.heading = wrap_angle(prev_heading + rng.uniform(-max_turn, max_turn));
  p.dz = cfg.depth_drift > 0.0
             ? rng.uniform(-cfg.depth_drift * cfg.dt, cfg.depth_drift * cfg.dt)
             : 0.0;
  double v_horiz_max = std::sqrt(std::max(0.0, cfg.v_max * cfg.v_max -
                                                   (p.dz / cfg.dt) * (p.dz / cfg.dt)));
  p.speed = rng.uniform_open0() * v_horiz_max;
  return p;
}

}  // namespace

TrajectorySet generate_trajectories(const ScenarioConfig& config) {
  config.validate();
  Rng place_rng = Rng::stream(config.seed, kPlacementStream);
  Rng motion_rng = Rng::stream(config.seed, kMotionStream);

  const int n = config.n_robots;
  TrajectorySet traj;
  traj.robots.assign(n, {});

  std::vector<Vec3> pos = place_initial(config, place_rng);
  std::vector<double> heading(n);
  for (int i = 0; i < n; ++i) heading[i] = motion_rng.uniform(-kPi, kPi);
  if (config.uniform_translation)
    for (int i = 1; i < n; ++i) heading[i] = heading[0];

  for (int i = 0; i < n; ++i) {
    traj.robots[i].reserve(config.n_steps + 1);
    traj.robots[i].push_back({0.0, pos[i], {}, heading[i], false});
  }

  constexpr int kRepairRounds = 200;
  for (int h = 0; h < config.n_steps; ++h) {
    std::vector<StepProposal> prop(n);
    if (config.uniform_translation) {
      StepProposal shared = propose_step(heading[0], config, motion_rng);
      shared.dz = 0.0;
      for (int i = 0; i < n; ++i) prop[i] = shared;
    } else {
      for (int i = 0; i < n; ++i) prop[i] = propose_step(heading[i], config, motion_rng);
    }

    std::vector<Vec3> next(n);
    auto apply = [&] {
      for (int i = 0; i < n; ++i) next[i] = pos[i] + prop[i].displacement(config.dt);
    };
    apply();

    if (config.uniform_translation) {
      // distances are exactly preserved; only the arena bound can break
      for (int i = 0; i < n; ++i)
        if (!in_arena(next[i], config)) traj.constraint_violated = true;
    } else {
      for (int repair = 0; repair < kRepairRounds; ++repair) {
        std::set<int> bad;
        for (int i = 0; i < n; ++i)
          if (!in_arena(next[i], config)) bad.insert(i);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!pair_window_ok(next[i], next[j], config)) {
              bad.insert(i);
              bad.insert(j);
            }
        if (bad.empty()) break;
        if (repair + 1 == kRepairRounds) {
          traj.constraint_violated = true;
          break;
        }
        for (int i : bad) prop[i] = propose_step(heading[i], config, motion_rng);
        apply();
      }
    }

    double t_next = (h + 1) * config.dt;
    for (int i = 0; i < n; ++i) {
      Vec3 disp = next[i] - pos[i];
      bool moving = disp.norm() >= kStationaryDisplacement;
      // heading at step h points along the step's displacement
      traj.robots[i][h].heading = moving ? prop[i].heading : heading[i];
      traj.robots[i][h].moving = moving;
      traj.robots[i][h].velocity = disp * (1.0 / config.dt);
      if (moving) heading[i] = prop[i].heading;
      traj.robots[i].push_back({t_next, next[i], {}, heading[i], false});
      pos[i] = next[i];
    }
  }
  return traj;
}

namespace {

RobotObservation observe_robot(const PoseSample& s, const ScenarioConfig& cfg, Rng& rng) {
  RobotObservation o;
  o.heading = cfg.sigma_heading > 0.0
                  ? wrap_angle(s.heading + rng.normal(0.0, cfg.sigma_heading))
                  : wrap_angle(s.heading);
  o.moving = s.moving;
  o.depth = cfg.sigma_depth > 0.0 ? s.position.z + rng.normal(0.0, cfg.sigma_depth)
                                  : s.position.z;
  if (cfg.speed_meter) {
    Vec3 v = s.velocity;
    if (cfg.sigma_velocity > 0.0) {
      v.x += rng.normal(0.0, cfg.sigma_velocity);
      v.y += rng.normal(0.0, cfg.sigma_velocity);
      v.z += rng.normal(0.0, cfg.sigma_velocity);
    }
    o.velocity = v;
  }
  return o;
}

double observe_distance(double true_d, const ScenarioConfig& cfg, Rng& rng) {
  double d = cfg.sigma_distance > 0.0 ? true_d + rng.normal(0.0, cfg.sigma_distance) : true_d;
  return std::max(d, 1e-3);  // ranges are physical, clamp to 1 mm
}

}  // namespace

ObservationRound true_round(const TrajectorySet& traj, int step, const ScenarioConfig& config) {
  const int n = traj.n_robots();
  ObservationRound round;
  round.t = traj.robots[0][step].t;
  round.robots.resize(n);
  round.distances = DistanceMatrix(n);
  for (int i = 0; i < n; ++i) {
    const PoseSample& s = traj.robots[i][step];
    RobotObservation o;
    o.heading = wrap_angle(s.heading);
    o.moving = s.moving;
    o.depth = s.position.z;
    if (config.speed_meter) o.velocity = s.velocity;
    round.robots[i] = o;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      round.distances.set(i, j, euclidean_distance(traj.robots[i][step].position,
                                                   traj.robots[j][step].position));
  return round;
}

std::vector<ObservationRound> synthesize_observations(const TrajectorySet& traj,
                                                      const ScenarioConfig& config) {
  Rng rng = Rng::stream(config.seed, kNoiseStream);
  const int n = traj.n_robots();
  std::vector<ObservationRound> rounds;
  rounds.reserve(traj.n_steps() + 1);
  for (int h = 0; h <= traj.n_steps(); ++h) {
    ObservationRound round;
    round.t = traj.robots[0][h].t;
    round.robots.resize(n);
    round.distances = DistanceMatrix(n);
    for (int i = 0; i < n; ++i) round.robots[i] = observe_robot(traj.robots[i][h], config, rng);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double true_d = euclidean_distance(traj.robots[i][h].position,
                                           traj.robots[j][h].position);
        round.distances.set(i, j, observe_distance(true_d, config, rng));
      }
    rounds.push_back(std::move(round));
  }
  return rounds;
}

namespace {

Vec3 position_at(const TrajectorySet& traj, int robot, double t, double dt) {
  const auto& samples = traj.robots[robot];
  int h = std::clamp(static_cast<int>(std::floor(t / dt)), 0,
                     static_cast<int>(samples.size()) - 2);
  double frac = (t - samples[h].t) / dt;
  frac = std::clamp(frac, 0.0, 1.0);
  return samples[h].position + (samples[h + 1].position - samples[h].position) * frac;
}

}  // namespace

std::vector<Emission> synthesize_emissions(const TrajectorySet& traj,
                                           const ScenarioConfig& config) {
  Rng noise_rng = Rng::stream(config.seed, kNoiseStream);
  Rng jitter_rng = Rng::stream(config.seed, kJitterStream);
  const int n = traj.n_robots();
  std::vector<Emission> emissions;
  emissions.reserve(static_cast<size_t>(n) * (traj.n_steps() + 1));
  for (int h = 0; h <= traj.n_steps(); ++h) {
    for (int i = 0; i < n; ++i) {
      Emission e;
      e.robot = i;
      e.t = traj.robots[i][h].t + jitter_rng.uniform() * config.jitter_max;
      // own quantities are the step's: heading and velocity are piecewise
      // constant, depth interpolates
      PoseSample s = traj.robots[i][h];
      s.position = position_at(traj, i, e.t, config.dt);
      e.obs = observe_robot(s, config, noise_rng);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        double true_d = euclidean_distance(position_at(traj, i, e.t, config.dt),
                                           position_at(traj, j, e.t, config.dt));
        e.distances.emplace_back(j, observe_distance(true_d, config, noise_rng));
      }
      emissions.push_back(std::move(e));
    }
  }
  return emissions;
}

ObservationRound interpolate_to_round(const std::vector<Emission>& emissions,
                                      Timestamp target, int n_robots) {
  // bracketing emissions per robot (closed on both sides)
  std::vector<const Emission*> before(n_robots, nullptr), after(n_robots, nullptr);
  for (const Emission& e : emissions) {
    if (e.t <= target && (!before[e.robot] || e.t > before[e.robot]->t)) before[e.robot] = &e;
    if (e.t >= target && (!after[e.robot] || e.t < after[e.robot]->t)) after[e.robot] = &e;
  }
  for (int i = 0; i < n_robots; ++i)
    if (!before[i] || !after[i])
      throw InsufficientBracketing("robot " + std::to_string(i) +
                                   " has no emissions bracketing t=" + std::to_string(target));

  ObservationRound round;
  round.t = target;
  round.robots.resize(n_robots);
  round.distances = DistanceMatrix(n_robots);

  auto frac_of = [&](int i) {
    double span = after[i]->t - before[i]->t;
    return span > 0.0 ? (target - before[i]->t) / span : 0.0;
  };

  for (int i = 0; i < n_robots; ++i) {
    double f = frac_of(i);
    const RobotObservation& a = before[i]->obs;
    const RobotObservation& b = after[i]->obs;
    RobotObservation o;
    o.heading = wrap_angle(a.heading + f * angular_difference(b.heading, a.heading));
    o.moving = a.moving && b.moving;
    o.depth = a.depth + f * (b.depth - a.depth);
    if (a.velocity && b.velocity)
      o.velocity = *a.velocity + (*b.velocity - *a.velocity) * f;
    round.robots[i] = o;
  }

  // pair (i,j) interpolates the lower-id robot's measured series
  for (int i = 0; i < n_robots; ++i) {
    double f = frac_of(i);
    for (const auto& [j, d0] : before[i]->distances) {
      if (j < i) continue;
      for (const auto& [j2, d1] : after[i]->distances)
        if (j2 == j) {
          round.distances.set(i, j, d0 + f * (d1 - d0));
          break;
        }
    }
  }
  return round;
}

std::vector<ObservationRound> observation_rounds(const TrajectorySet& traj,
                                                 const ScenarioConfig& config) {
  if (config.emission_mode == EmissionMode::kSynchronized)
    return synthesize_observations(traj, config);
  std::vector<Emission> emissions = synthesize_emissions(traj, config);
  std::vector<ObservationRound> rounds;
  for (int h = 1; h <= traj.n_steps(); ++h)
    rounds.push_back(interpolate_to_round(emissions, h * config.dt, traj.n_robots()));
  return rounds;
}

}  // namespace swarmloc
