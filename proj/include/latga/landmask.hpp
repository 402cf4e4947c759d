#pragma once

#include <filesystem>
#include <vector>

#include "latga/geo.hpp"

namespace latga {

struct BoundingBox {
  double lat_min = 0.0, lat_max = 0.0;
  double lon_min = 0.0, lon_max = 0.0;
};

/// Polygonal feasibility mask. Rings are closed implicitly (last vertex
/// connects back to the first); a ring nested inside another acts as a hole
/// under the even-odd rule. boundary_points is the flattened vertex list
/// used by coordinate repair.
struct LandMask {
  std::vector<std::vector<GeoPoint>> rings;
  std::vector<GeoPoint> boundary_points;

  /// Rebuilds boundary_points from rings and checks ring sizes.
  /// Throws std::invalid_argument on a ring with fewer than 3 vertices
  /// or an empty mask.
  void finalize();

  BoundingBox bounding_box() const;
};

/// Even-odd point-in-polygon test in the lon-lat plane. Each ring is
/// unwrapped locally so rings spanning the antimeridian behave correctly.
/// Points on a ring edge or vertex count as inside.
bool contains(const LandMask& mask, GeoPoint p);

/// Returns p unchanged when feasible; otherwise the boundary vertex at
/// minimum central angle (ties resolved to the lowest index).
GeoPoint repair_to_boundary(GeoPoint p, const LandMask& mask);

/// Plain-text polygon format: one "lon,lat" pair per line, rings separated
/// by blank lines, '#' lines ignored. The closing vertex may be omitted.
LandMask load_polygon_file(const std::filesystem::path& path);

void save_polygon_file(const LandMask& mask, const std::filesystem::path& path);

}  // namespace latga
