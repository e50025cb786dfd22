#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ctrace/rng.hpp"
#include "ctrace/world.hpp"

namespace ctrace {

enum class SourceKind { Confirmed, Symptomatic };

struct ExposureEvent {
  std::int64_t tick = 0;
  AgentId susceptible = 0;
  AgentId source = 0;
  SourceKind source_kind = SourceKind::Confirmed;
};

// Symptom prevalence weights for the composite wearable score, normalized to
// sum to one: fever 0.986, fatigue 0.70, dry cough 0.60.
inline constexpr double kVitalPrevalence[3] = {0.986, 0.70, 0.60};
inline constexpr double kVitalPrevalenceSum = 0.986 + 0.70 + 0.60;
inline constexpr double kFeverWeight = kVitalPrevalence[0] / kVitalPrevalenceSum;
inline constexpr double kFatigueWeight = kVitalPrevalence[1] / kVitalPrevalenceSum;
inline constexpr double kCoughWeight = kVitalPrevalence[2] / kVitalPrevalenceSum;

struct TelemetryRecord {
  AgentId agent = 0;
  double timestamp = 0.0;  // minutes
  double fever = 0.0;
  double fatigue = 0.0;
  double cough = 0.0;
  double composite = 0.0;
};

/// Per-pair consecutive contact minutes between susceptibles and infectious
/// sources. A counter resets the first tick the pair separates beyond the
/// proximity threshold; reaching the contact gate converts to a single
/// exposure per pair per run.
class ContactLedger {
 public:
  /// Scans the world for (susceptible, source) pairs within the proximity
  /// threshold, advances counters and emits exposures for pairs reaching
  /// config.contact_ticks(). `confirmed_sources` and `symptomatic_sources`
  /// must be sorted; agents present in both count as confirmed.
  std::vector<ExposureEvent> update(const WorldState& world,
                                    std::span<const AgentId> confirmed_sources,
                                    std::span<const AgentId> symptomatic_sources);

  bool pair_exposed(AgentId susceptible, AgentId source) const;
  std::int64_t pair_minutes(AgentId susceptible, AgentId source) const;
  std::size_t active_pairs() const { return counters_.size(); }

 private:
  static std::uint64_t key(AgentId susceptible, AgentId source) {
    return (static_cast<std::uint64_t>(susceptible) << 32) | source;
  }
  std::unordered_map<std::uint64_t, std::int64_t> counters_;  // ticks
  std::unordered_set<std::uint64_t> exposed_pairs_;
};

/// Mask-dependent Bernoulli draw for one exposure. The uniform variate is a
/// pure function of (stream key, susceptible, source), so paired scenarios
/// sharing a seed reuse the same variate per pair (common random numbers).
/// On success the agent becomes Infected with infected_at = event tick.
bool resolve_infection(const ExposureEvent& event, WorldState& world,
                       const RngStream& infect);

/// Linear symptom ramp for infected agents:
/// level = min(1, minutes_since_infection / ramp_duration).
/// Susceptible agents hold a zero baseline (wearable noise is added at
/// telemetry time).
void advance_symptoms(WorldState& world);

/// One wearable sample: per-vital value = symptom level plus bounded noise
/// (clamped to [0,1]), noise keyed by (tick, agent, vital); composite is the
/// prevalence-weighted sum.
TelemetryRecord emit_telemetry(const Agent& agent, std::int64_t tick,
                               double tick_minutes, const RngStream& telemetry,
                               double noise_amplitude);

/// Literal windowed symptom rule: true iff composite >= threshold for
/// `persistence_ticks` consecutive samples ending at the last element; any
/// sub-threshold sample resets the window.
bool symptom_flag(std::span<const double> composites, double threshold,
                  std::int64_t persistence_ticks);

}  // namespace ctrace
