#include "ctrace/epidemic.hpp"

#include <algorithm>
#include <cmath>

namespace ctrace {

namespace {

bool contains_sorted(std::span<const AgentId> ids, AgentId id) {
  return std::binary_search(ids.begin(), ids.end(), id);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::vector<ExposureEvent> ContactLedger::update(
    const WorldState& world, std::span<const AgentId> confirmed_sources,
    std::span<const AgentId> symptomatic_sources) {
  const SimConfig& cfg = world.config();
  const std::int64_t gate = cfg.contact_ticks();
  const auto& agents = world.agents();

  std::vector<ExposureEvent> events;
  std::unordered_set<std::uint64_t> touched;

  auto scan_source = [&](AgentId src, SourceKind kind) {
    const Agent& source = agents[src];
    if (!world.is_active(source)) return;
    world.index().for_each_within(
        source.x, source.y, cfg.proximity_threshold,
        [&](std::uint32_t id, double, double) {
          const Agent& other = agents[id];
          if (other.health != Health::Susceptible) return;
          const std::uint64_t k = key(id, src);
          if (exposed_pairs_.contains(k)) return;
          if (!touched.insert(k).second) return;  // already counted this tick
          std::int64_t& minutes = counters_[k];
          minutes += 1;
          if (minutes >= gate) {
            events.push_back({world.tick(), id, src, kind});
            exposed_pairs_.insert(k);
            counters_.erase(k);
          }
        });
  };

  // Confirmed first so a source that is both confirmed and symptomatic
  // attributes its exposures to the confirmed role.
  for (AgentId src : confirmed_sources) scan_source(src, SourceKind::Confirmed);
  for (AgentId src : symptomatic_sources) {
    if (contains_sorted(confirmed_sources, src)) continue;
    scan_source(src, SourceKind::Symptomatic);
  }

  // Reset rule: a pair not refreshed this tick either separated beyond the
  // threshold (counter drops to zero, i.e. is erased) or is still close with
  // a source that is temporarily not infectious (counter holds).
  const double prox2 = cfg.proximity_threshold * cfg.proximity_threshold;
  for (auto it = counters_.begin(); it != counters_.end();) {
    if (touched.contains(it->first)) {
      ++it;
      continue;
    }
    const Agent& sus = agents[static_cast<AgentId>(it->first >> 32)];
    const Agent& src = agents[static_cast<AgentId>(it->first & 0xffffffffu)];
    const bool both_present = world.is_active(sus) && world.is_active(src) &&
                              sus.health == Health::Susceptible;
    const double dx = sus.x - src.x;
    const double dy = sus.y - src.y;
    if (!both_present || dx * dx + dy * dy > prox2) {
      it = counters_.erase(it);
    } else {
      ++it;
    }
  }

  // Deterministic resolution order: by susceptible, confirmed before
  // symptomatic, then by source id.
  std::sort(events.begin(), events.end(),
            [](const ExposureEvent& a, const ExposureEvent& b) {
              if (a.susceptible != b.susceptible)
                return a.susceptible < b.susceptible;
              if (a.source_kind != b.source_kind)
                return a.source_kind == SourceKind::Confirmed;
              return a.source < b.source;
            });
  return events;
}

bool ContactLedger::pair_exposed(AgentId susceptible, AgentId source) const {
  return exposed_pairs_.contains(key(susceptible, source));
}

std::int64_t ContactLedger::pair_minutes(AgentId susceptible,
                                         AgentId source) const {
  const auto it = counters_.find(key(susceptible, source));
  return it == counters_.end() ? 0 : it->second;
}

bool resolve_infection(const ExposureEvent& event, WorldState& world,
                       const RngStream& infect) {
  Agent& agent = world.agents()[event.susceptible];
  const double u = infect.unit_at(event.susceptible, event.source);
  const double p = world.config().infect_prob();
  if (u < p) {
    if (agent.health != Health::Infected) {
      agent.health = Health::Infected;
      agent.infected_at = event.tick;
      return true;
    }
    return false;  // a same-tick exposure already infected this agent
  }
  if (agent.health == Health::ExposedPending) agent.health = Health::Susceptible;
  return false;
}

void advance_symptoms(WorldState& world) {
  const SimConfig& cfg = world.config();
  for (Agent& a : world.agents()) {
    if (a.health == Health::Infected) {
      const double minutes =
          static_cast<double>(world.tick() - a.infected_at) * cfg.tick;
      a.symptom_level = std::min(1.0, minutes / cfg.ramp_duration);
    }
  }
}

TelemetryRecord emit_telemetry(const Agent& agent, std::int64_t tick,
                               double tick_minutes, const RngStream& telemetry,
                               double noise_amplitude) {
  auto vital = [&](std::uint64_t v) {
    const double noise = telemetry.range_at(-noise_amplitude, noise_amplitude,
                                            static_cast<std::uint64_t>(tick),
                                            agent.id, v);
    return clamp01(agent.symptom_level + noise);
  };
  TelemetryRecord rec;
  rec.agent = agent.id;
  rec.timestamp = static_cast<double>(tick) * tick_minutes;
  rec.fever = vital(0);
  rec.fatigue = vital(1);
  rec.cough = vital(2);
  rec.composite = clamp01(kFeverWeight * rec.fever + kFatigueWeight * rec.fatigue +
                          kCoughWeight * rec.cough);
  return rec;
}

bool symptom_flag(std::span<const double> composites, double threshold,
                  std::int64_t persistence_ticks) {
  if (static_cast<std::int64_t>(composites.size()) < persistence_ticks)
    return false;
  for (std::int64_t i = 0; i < persistence_ticks; ++i) {
    if (composites[composites.size() - 1 - static_cast<std::size_t>(i)] <
        threshold)
      return false;
  }
  return true;
}

}  // namespace ctrace
