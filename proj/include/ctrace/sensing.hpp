#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctrace/geometry.hpp"
#include "ctrace/rng.hpp"
#include "ctrace/world.hpp"

namespace ctrace {

using CellId = std::int32_t;

/// One detected person box in camera-frame pixel coordinates.
struct Detection {
  std::string camera_id;
  double frame_time = 0.0;  // minutes
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;
  double confidence = 1.0;
  std::string class_label = "person";
  std::optional<AgentId> source_agent;  // synthetic projections only
};

struct CameraZone {
  std::string camera_id;
  Region world_region;           // footprint inside the area rectangle
  double meters_per_pixel = 1.0;
  std::vector<CellId> mapped_cells;  // base-station cells overlapping the zone
  double miss_prob = 0.0;

  const Rect& world_rect() const { return world_region.rect; }
  bool sees(double x, double y) const { return world_region.contains(x, y); }
};

struct ViolationEvent {
  std::string camera_id;
  double frame_time = 0.0;
  int i = 0;  // detection indices within the frame, i < j
  int j = 0;
  std::optional<AgentId> agent_a;
  std::optional<AgentId> agent_b;
  double distance = 0.0;  // meters
};

/// Synthetic stand-in for a camera + detector: every active agent inside the
/// zone projects to a nominal person box (0.5 m x 1.7 m) at
/// ((x-x0)/mpp, (y-y0)/mpp) with confidence 1, unless dropped with
/// probability miss_prob (keyed by tick, camera, agent).
std::vector<Detection> project_agents(const CameraZone& zone,
                                      const WorldState& world,
                                      const RngStream& sensing);

/// Center-to-center Euclidean distance in meters. Throws ValidationError for
/// detections from different cameras.
double inter_object_distance(const Detection& a, const Detection& b,
                             const CameraZone& zone);

/// All unordered "person" pairs with distance strictly below threshold_m,
/// one event per pair, sorted by (i, j). Uses an x-sweep over sorted centers;
/// the pair predicate is exactly inter_object_distance(a,b) < threshold_m.
std::vector<ViolationEvent> detect_violations(std::span<const Detection> frame,
                                              const CameraZone& zone,
                                              double threshold_m);

// --- detection wire format -------------------------------------------------
//
// Line-delimited JSON, one detection per line:
//   {"camera_id":"cam-0-0","frame_time":3.0,"cx":10.0,"cy":20.0,
//    "w":10.0,"h":34.0,"confidence":1.0,"class":"person"}
// Field names are fixed; extra fields are ignored. This is the adapter
// boundary for real detector output.

struct DetectionFrame {
  double frame_time = 0.0;
  std::string camera_id;
  std::vector<Detection> detections;  // input order preserved
};

/// Parses a stream; groups by (camera_id, frame_time); frames ordered by
/// (frame_time, camera_id). Malformed lines raise ParseError with the line
/// number; out-of-range fields raise ValidationError.
std::vector<DetectionFrame> parse_detection_stream(std::istream& in);

std::string serialize_detection(const Detection& d);

/// Ensures every frame's camera_id names a configured zone.
void validate_stream_cameras(std::span<const DetectionFrame> frames,
                             std::span<const CameraZone> zones);

}  // namespace ctrace
