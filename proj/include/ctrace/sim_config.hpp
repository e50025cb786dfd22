#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ctrace/errors.hpp"

namespace ctrace {

enum class MaskPolicy { AllMasked, NoneMasked };

std::string to_string(MaskPolicy p);
MaskPolicy mask_policy_from_string(std::string_view s);

/// "CxR" grid dimensions, e.g. camera_grid "4x4".
struct GridSpec {
  int cols = 1;
  int rows = 1;
};

GridSpec grid_spec_from_string(std::string_view s);
std::string to_string(const GridSpec& g);

/// Full scenario parameterization. Distances in meters, durations in
/// minutes, speeds in meters/minute. Defaults equal the "paper-text" preset.
struct SimConfig {
  double area_width = 2000.0;
  double area_height = 2000.0;
  int population = 500;
  int initial_confirmed = 50;
  int initial_carriers = 10;
  double speed_min = 0.01;
  double speed_max = 20.0;
  double tick = 1.0;
  double horizon = 500.0;
  double proximity_threshold = 3.0;
  double contact_duration = 1.0;
  double infect_prob_mask = 0.3;
  double infect_prob_nomask = 0.6;
  MaskPolicy mask_policy = MaskPolicy::NoneMasked;
  double symptom_threshold = 0.9;
  double symptom_persistence = 60.0;
  double distance_violation_threshold = 2.0;
  std::uint64_t rng_seed = 1;
  GridSpec camera_grid{4, 4};
  GridSpec cell_grid{2, 2};

  // Model knobs with fixed defaults, all overridable.
  double ramp_duration = 120.0;   // minutes from infection to full symptoms
  double telemetry_noise = 0.05;  // per-vital noise amplitude
  double miss_prob = 0.0;         // synthetic detector miss probability
  double meters_per_pixel = 0.05;
  bool enforce_quarantine = false;  // false: orders are recorded but agents
                                    // stay in the scene (observation mode)
  bool global_symptom_watch = false;

  /// Throws ConfigError naming the violated invariant.
  void validate() const;

  std::int64_t horizon_ticks() const;
  std::int64_t contact_ticks() const;
  std::int64_t persistence_ticks() const;

  double infect_prob() const {
    return mask_policy == MaskPolicy::AllMasked ? infect_prob_mask
                                                : infect_prob_nomask;
  }

  /// Bundled presets: "paper-text" (the default parameter set above) and
  /// "paper-table" (300 min horizon, 1000x1000 m, speeds [1,10], 5 m
  /// proximity, 10 min contact gate).
  static SimConfig preset(std::string_view name);

  /// Loads overrides from a JSON config file (one key per field; unknown
  /// keys rejected). Missing keys keep their current values.
  void merge_json_file(const std::string& path);
  void merge_json_text(std::string_view text, std::string_view origin);

  std::string to_json_text() const;
};

}  // namespace ctrace
