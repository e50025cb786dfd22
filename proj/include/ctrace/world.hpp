#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "ctrace/rng.hpp"
#include "ctrace/sim_config.hpp"
#include "ctrace/spatial_grid.hpp"

namespace ctrace {

using AgentId = std::uint32_t;

enum class Health { Susceptible, ExposedPending, Infected, ConfirmedPatient };

struct Agent {
  AgentId id = 0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians
  double speed = 0.0;    // meters/minute
  bool masked = false;
  Health health = Health::Susceptible;
  double symptom_level = 0.0;       // [0,1]
  std::int64_t infected_at = -1;    // tick index, -1 = never infected
  // First tick at which a quarantine removes the agent from the scene
  // (mobility, sensing, cell queries, contact accumulation).
  std::int64_t inactive_from = std::numeric_limits<std::int64_t>::max();
};

class WorldState {
 public:
  WorldState() = default;
  WorldState(SimConfig cfg, std::vector<Agent> agents);

  const SimConfig& config() const { return cfg_; }
  std::vector<Agent>& agents() { return agents_; }
  const std::vector<Agent>& agents() const { return agents_; }

  std::int64_t tick() const { return tick_; }
  double now() const { return static_cast<double>(tick_) * cfg_.tick; }
  void set_tick(std::int64_t t) {
    tick_ = t;
    index_stale_ = true;
  }

  bool is_active(const Agent& a) const { return tick_ < a.inactive_from; }
  std::size_t active_count() const;

  /// Spatial index over active agents, rebuilt lazily after any mutation.
  const SpatialGrid& index() const;
  void mark_dirty() { index_stale_ = true; }

 private:
  SimConfig cfg_;
  std::vector<Agent> agents_;
  std::int64_t tick_ = 0;
  mutable SpatialGrid index_;
  mutable bool index_stale_ = true;
};

/// Builds the initial population: uniform placement, role assignment
/// (confirmed patients, unregistered carriers, susceptibles), all drawn from
/// the dedicated "world" stream of config.rng_seed.
WorldState init_world(const SimConfig& config);

/// One tick of random-walk mobility: every active agent redraws heading
/// U[0,2pi) and speed U[speed_min,speed_max], moves speed*tick along the
/// heading and reflects specularly off the area walls; the clock advances.
void step_mobility(WorldState& world, RngStream& mobility);

/// Active agents with Euclidean distance <= radius of (cx, cy), ascending id.
std::vector<AgentId> neighbors_within(const WorldState& world, double cx,
                                      double cy, double radius);

/// Folds a coordinate into [0, limit] by specular reflection.
double reflect_into(double x, double limit);

}  // namespace ctrace
