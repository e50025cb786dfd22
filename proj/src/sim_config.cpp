#include "ctrace/sim_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ctrace {

using nlohmann::json;

std::string to_string(MaskPolicy p) {
  return p == MaskPolicy::AllMasked ? "all-masked" : "none-masked";
}

MaskPolicy mask_policy_from_string(std::string_view s) {
  if (s == "all-masked") return MaskPolicy::AllMasked;
  if (s == "none-masked") return MaskPolicy::NoneMasked;
  throw ConfigError("mask_policy must be \"all-masked\" or \"none-masked\", got \"" +
                    std::string(s) + "\"");
}

GridSpec grid_spec_from_string(std::string_view s) {
  const auto sep = s.find('x');
  GridSpec g;
  try {
    if (sep == std::string_view::npos) throw std::invalid_argument("no 'x'");
    size_t used = 0;
    const std::string cols(s.substr(0, sep));
    const std::string rows(s.substr(sep + 1));
    g.cols = std::stoi(cols, &used);
    if (used != cols.size()) throw std::invalid_argument(cols);
    g.rows = std::stoi(rows, &used);
    if (used != rows.size()) throw std::invalid_argument(rows);
  } catch (const std::exception&) {
    throw ConfigError("grid spec must look like \"4x4\", got \"" +
                      std::string(s) + "\"");
  }
  return g;
}

std::string to_string(const GridSpec& g) {
  return std::to_string(g.cols) + "x" + std::to_string(g.rows);
}

namespace {

// horizon/contact/persistence must land on whole ticks
std::int64_t quantize(double minutes, double tick, const char* name) {
  const double exact = minutes / tick;
  const double rounded = std::round(exact);
  if (std::abs(exact - rounded) > 1e-9) {
    throw ConfigError(std::string(name) + " (" + std::to_string(minutes) +
                      ") must be a multiple of tick (" + std::to_string(tick) +
                      ")");
  }
  return static_cast<std::int64_t>(rounded);
}

void require(bool ok, const std::string& invariant) {
  if (!ok) throw ConfigError("config invariant violated: " + invariant);
}

}  // namespace

void SimConfig::validate() const {
  require(area_width > 0 && area_height > 0, "area dimensions must be positive");
  require(population >= 0, "population must be >= 0");
  require(initial_confirmed >= 0 && initial_carriers >= 0,
          "initial role counts must be >= 0");
  require(initial_confirmed + initial_carriers <= population,
          "initial_confirmed + initial_carriers <= population");
  require(speed_min > 0, "0 < speed_min");
  require(speed_min <= speed_max, "speed_min <= speed_max");
  require(tick > 0, "tick > 0");
  require(horizon >= 0, "horizon must be >= 0");
  quantize(horizon, tick, "horizon");
  require(proximity_threshold >= 0, "proximity_threshold must be >= 0");
  require(contact_duration > 0, "contact_duration must be > 0");
  quantize(contact_duration, tick, "contact_duration");
  require(infect_prob_mask >= 0 && infect_prob_mask <= 1,
          "infect_prob_mask in [0,1]");
  require(infect_prob_nomask >= 0 && infect_prob_nomask <= 1,
          "infect_prob_nomask in [0,1]");
  require(infect_prob_mask <= infect_prob_nomask,
          "infect_prob_mask <= infect_prob_nomask");
  require(symptom_threshold >= 0 && symptom_threshold <= 1,
          "symptom_threshold in [0,1]");
  require(symptom_persistence > 0, "symptom_persistence must be > 0");
  quantize(symptom_persistence, tick, "symptom_persistence");
  require(distance_violation_threshold > 0,
          "distance_violation_threshold must be > 0");
  require(camera_grid.cols >= 1 && camera_grid.rows >= 1,
          "camera_grid must be at least 1x1");
  require(cell_grid.cols >= 1 && cell_grid.rows >= 1,
          "cell_grid must be at least 1x1");
  require(ramp_duration > 0, "ramp_duration must be > 0");
  require(telemetry_noise >= 0 && telemetry_noise <= 0.5,
          "telemetry_noise in [0,0.5]");
  require(miss_prob >= 0 && miss_prob <= 1, "miss_prob in [0,1]");
  require(meters_per_pixel > 0, "meters_per_pixel must be > 0");
}

std::int64_t SimConfig::horizon_ticks() const {
  return quantize(horizon, tick, "horizon");
}

std::int64_t SimConfig::contact_ticks() const {
  return quantize(contact_duration, tick, "contact_duration");
}

std::int64_t SimConfig::persistence_ticks() const {
  return quantize(symptom_persistence, tick, "symptom_persistence");
}

SimConfig SimConfig::preset(std::string_view name) {
  if (name == "paper-text") {
    return SimConfig{};
  }
  if (name == "paper-table") {
    SimConfig c;
    c.area_width = 1000.0;
    c.area_height = 1000.0;
    c.population = 150;
    c.horizon = 300.0;
    c.speed_min = 1.0;
    c.speed_max = 10.0;
    c.proximity_threshold = 5.0;
    c.contact_duration = 10.0;
    return c;
  }
  throw ConfigError("unknown preset \"" + std::string(name) +
                    "\" (available: paper-text, paper-table)");
}

namespace {

void apply_key(SimConfig& c, const std::string& key, const json& v,
               std::string_view origin) {
  try {
    if (key == "area_width") c.area_width = v.get<double>();
    else if (key == "area_height") c.area_height = v.get<double>();
    else if (key == "population") c.population = v.get<int>();
    else if (key == "initial_confirmed") c.initial_confirmed = v.get<int>();
    else if (key == "initial_carriers") c.initial_carriers = v.get<int>();
    else if (key == "speed_min") c.speed_min = v.get<double>();
    else if (key == "speed_max") c.speed_max = v.get<double>();
    else if (key == "tick") c.tick = v.get<double>();
    else if (key == "horizon") c.horizon = v.get<double>();
    else if (key == "proximity_threshold") c.proximity_threshold = v.get<double>();
    else if (key == "contact_duration") c.contact_duration = v.get<double>();
    else if (key == "infect_prob_mask") c.infect_prob_mask = v.get<double>();
    else if (key == "infect_prob_nomask") c.infect_prob_nomask = v.get<double>();
    else if (key == "mask_policy") c.mask_policy = mask_policy_from_string(v.get<std::string>());
    else if (key == "symptom_threshold") c.symptom_threshold = v.get<double>();
    else if (key == "symptom_persistence") c.symptom_persistence = v.get<double>();
    else if (key == "distance_violation_threshold") c.distance_violation_threshold = v.get<double>();
    else if (key == "rng_seed") c.rng_seed = v.get<std::uint64_t>();
    else if (key == "camera_grid") c.camera_grid = grid_spec_from_string(v.get<std::string>());
    else if (key == "cell_grid") c.cell_grid = grid_spec_from_string(v.get<std::string>());
    else if (key == "ramp_duration") c.ramp_duration = v.get<double>();
    else if (key == "telemetry_noise") c.telemetry_noise = v.get<double>();
    else if (key == "miss_prob") c.miss_prob = v.get<double>();
    else if (key == "meters_per_pixel") c.meters_per_pixel = v.get<double>();
    else if (key == "enforce_quarantine") c.enforce_quarantine = v.get<bool>();
    else if (key == "global_symptom_watch") c.global_symptom_watch = v.get<bool>();
    else
      throw ConfigError("unknown config key \"" + key + "\" in " +
                        std::string(origin));
  } catch (const json::exception& e) {
    throw ConfigError("bad value for config key \"" + key + "\" in " +
                      std::string(origin) + ": " + e.what());
  }
}

}  // namespace

void SimConfig::merge_json_text(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(origin) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(std::string(origin) + ": config must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    apply_key(*this, key, value, origin);
  }
}

void SimConfig::merge_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  merge_json_text(buf.str(), path);
}

std::string SimConfig::to_json_text() const {
  json doc;
  doc["area_width"] = area_width;
  doc["area_height"] = area_height;
  doc["population"] = population;
  doc["initial_confirmed"] = initial_confirmed;
  doc["initial_carriers"] = initial_carriers;
  doc["speed_min"] = speed_min;
  doc["speed_max"] = speed_max;
  doc["tick"] = tick;
  doc["horizon"] = horizon;
  doc["proximity_threshold"] = proximity_threshold;
  doc["contact_duration"] = contact_duration;
  doc["infect_prob_mask"] = infect_prob_mask;
  doc["infect_prob_nomask"] = infect_prob_nomask;
  doc["mask_policy"] = to_string(mask_policy);
  doc["symptom_threshold"] = symptom_threshold;
  doc["symptom_persistence"] = symptom_persistence;
  doc["distance_violation_threshold"] = distance_violation_threshold;
  doc["rng_seed"] = rng_seed;
  doc["camera_grid"] = to_string(camera_grid);
  doc["cell_grid"] = to_string(cell_grid);
  doc["ramp_duration"] = ramp_duration;
  doc["telemetry_noise"] = telemetry_noise;
  doc["miss_prob"] = miss_prob;
  doc["meters_per_pixel"] = meters_per_pixel;
  doc["enforce_quarantine"] = enforce_quarantine;
  doc["global_symptom_watch"] = global_symptom_watch;
  return doc.dump(2);
}

}  // namespace ctrace
