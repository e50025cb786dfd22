#include "ctrace/world.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ctrace {

WorldState::WorldState(SimConfig cfg, std::vector<Agent> agents)
    : cfg_(std::move(cfg)), agents_(std::move(agents)) {
  index_ = SpatialGrid(cfg_.area_width, cfg_.area_height,
                       std::max(cfg_.proximity_threshold, 1.0));
}

std::size_t WorldState::active_count() const {
  return static_cast<std::size_t>(
      std::count_if(agents_.begin(), agents_.end(),
                    [&](const Agent& a) { return is_active(a); }));
}

const SpatialGrid& WorldState::index() const {
  if (index_stale_) {
    std::vector<double> xs, ys;
    std::vector<std::uint32_t> ids;
    xs.reserve(agents_.size());
    ys.reserve(agents_.size());
    ids.reserve(agents_.size());
    for (const Agent& a : agents_) {
      if (!is_active(a)) continue;
      xs.push_back(a.x);
      ys.push_back(a.y);
      ids.push_back(a.id);
    }
    index_.build(xs, ys, ids);
    index_stale_ = false;
  }
  return index_;
}

WorldState init_world(const SimConfig& config) {
  config.validate();
  RngStream world_rng = named_stream(config.rng_seed, "world");

  std::vector<Agent> agents(static_cast<std::size_t>(config.population));
  const bool masked = config.mask_policy == MaskPolicy::AllMasked;
  for (int i = 0; i < config.population; ++i) {
    Agent& a = agents[static_cast<std::size_t>(i)];
    a.id = static_cast<AgentId>(i);
    a.x = world_rng.uniform(0.0, config.area_width);
    a.y = world_rng.uniform(0.0, config.area_height);
    a.heading = world_rng.uniform(0.0, 2.0 * std::numbers::pi);
    a.speed = world_rng.uniform(config.speed_min, config.speed_max);
    a.masked = masked;
  }

  // Partial Fisher-Yates over the id range: the first initial_confirmed
  // slots become registered patients, the next initial_carriers become
  // infected-but-unregistered carriers with the symptom ramp started.
  std::vector<AgentId> order(agents.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<AgentId>(i);
  const std::size_t roles =
      static_cast<std::size_t>(config.initial_confirmed + config.initial_carriers);
  for (std::size_t i = 0; i < roles; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(world_rng.below(order.size() - i));
    std::swap(order[i], order[j]);
  }
  for (int i = 0; i < config.initial_confirmed; ++i) {
    agents[order[static_cast<std::size_t>(i)]].health = Health::ConfirmedPatient;
  }
  for (int i = 0; i < config.initial_carriers; ++i) {
    Agent& a = agents[order[static_cast<std::size_t>(config.initial_confirmed + i)]];
    a.health = Health::Infected;
    a.infected_at = 0;
  }

  return WorldState(config, std::move(agents));
}

double reflect_into(double x, double limit) {
  while (x < 0.0 || x > limit) {
    if (x < 0.0) x = -x;
    if (x > limit) x = 2.0 * limit - x;
  }
  return x;
}

void step_mobility(WorldState& world, RngStream& mobility) {
  const SimConfig& cfg = world.config();
  const std::int64_t next = world.tick() + 1;
  for (Agent& a : world.agents()) {
    if (next >= a.inactive_from) continue;  // quarantined off the scene
    const double heading = mobility.range_at(
        0.0, 2.0 * std::numbers::pi, static_cast<std::uint64_t>(next), a.id, 0);
    const double speed =
        mobility.range_at(cfg.speed_min, cfg.speed_max,
                          static_cast<std::uint64_t>(next), a.id, 1);
    const double travel = speed * cfg.tick;
    a.heading = heading;
    a.speed = speed;
    a.x = reflect_into(a.x + travel * std::cos(heading), cfg.area_width);
    a.y = reflect_into(a.y + travel * std::sin(heading), cfg.area_height);
  }
  world.set_tick(next);
}

std::vector<AgentId> neighbors_within(const WorldState& world, double cx,
                                      double cy, double radius) {
  std::vector<AgentId> out;
  world.index().for_each_within(
      cx, cy, radius, [&](std::uint32_t id, double, double) { out.push_back(id); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ctrace
