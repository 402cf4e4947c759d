#include "latga/landmask.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace latga {

namespace {

// Unwraps ring longitudes into a continuous chain and shifts the query
// longitude to the copy nearest the ring's longitude midpoint.
struct UnwrappedRing {
  std::vector<double> lon;
  std::vector<double> lat;
};

UnwrappedRing unwrap_ring(const std::vector<GeoPoint>& ring) {
  UnwrappedRing u;
  u.lon.reserve(ring.size());
  u.lat.reserve(ring.size());
  double prev = ring.front().lon;
  for (const auto& v : ring) {
    double lon = v.lon;
    while (lon - prev > 180.0) lon -= 360.0;
    while (lon - prev < -180.0) lon += 360.0;
    u.lon.push_back(lon);
    u.lat.push_back(v.lat);
    prev = lon;
  }
  return u;
}

double shift_query_lon(const UnwrappedRing& u, double lon) {
  const auto [lo_it, hi_it] = std::minmax_element(u.lon.begin(), u.lon.end());
  const double mid = 0.5 * (*lo_it + *hi_it);
  while (lon - mid > 180.0) lon -= 360.0;
  while (lon - mid < -180.0) lon += 360.0;
  return lon;
}

bool on_segment(double px, double py, double ax, double ay, double bx, double by) {
  constexpr double eps = 1e-12;
  const double cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
  if (std::abs(cross) > eps * (std::abs(bx - ax) + std::abs(by - ay) + 1.0)) return false;
  const double dot = (px - ax) * (bx - ax) + (py - ay) * (by - ay);
  const double len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
  return dot >= -eps && dot <= len2 + eps;
}

// Even-odd crossing test for one unwrapped ring; boundary hits reported
// separately so callers can count them as inside.
bool ring_crossings_odd(const UnwrappedRing& u, double lon, double lat, bool& on_boundary) {
  bool odd = false;
  const std::size_t n = u.lon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (on_segment(lon, lat, u.lon[j], u.lat[j], u.lon[i], u.lat[i])) {
      on_boundary = true;
      return false;
    }
    if ((u.lat[i] > lat) != (u.lat[j] > lat)) {
      const double x_int =
          (u.lon[j] - u.lon[i]) * (lat - u.lat[i]) / (u.lat[j] - u.lat[i]) + u.lon[i];
      if (lon < x_int) odd = !odd;
    }
  }
  return odd;
}

}  // namespace

void LandMask::finalize() {
  if (rings.empty()) {
    throw std::invalid_argument("LandMask: at least one ring is required");
  }
  boundary_points.clear();
  for (const auto& ring : rings) {
    if (ring.size() < 3) {
      throw std::invalid_argument("LandMask: each ring needs at least 3 vertices");
    }
    boundary_points.insert(boundary_points.end(), ring.begin(), ring.end());
  }
}

BoundingBox LandMask::bounding_box() const {
  BoundingBox box{90.0, -90.0, 180.0, -180.0};
  for (const auto& v : boundary_points) {
    box.lat_min = std::min(box.lat_min, v.lat);
    box.lat_max = std::max(box.lat_max, v.lat);
    box.lon_min = std::min(box.lon_min, v.lon);
    box.lon_max = std::max(box.lon_max, v.lon);
  }
  return box;
}

bool contains(const LandMask& mask, GeoPoint p) {
  bool inside = false;
  for (const auto& ring : mask.rings) {
    const UnwrappedRing u = unwrap_ring(ring);
    const double lon = shift_query_lon(u, p.lon);
    bool on_boundary = false;
    if (ring_crossings_odd(u, lon, p.lat, on_boundary)) inside = !inside;
    if (on_boundary) return true;
  }
  return inside;
}

GeoPoint repair_to_boundary(GeoPoint p, const LandMask& mask) {
  if (mask.boundary_points.empty()) {
    throw std::invalid_argument("repair_to_boundary: mask has no boundary points");
  }
  if (contains(mask, p)) return p;

  std::size_t best = 0;
  double best_angle = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < mask.boundary_points.size(); ++i) {
    const double angle = haversine_angle(mask.boundary_points[i], p);
    if (angle < best_angle) {
      best_angle = angle;
      best = i;
    }
  }
  return mask.boundary_points[best];
}

LandMask load_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open polygon file: " + path.string());
  }
  LandMask mask;
  std::vector<GeoPoint> ring;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (!ring.empty()) {
        mask.rings.push_back(std::move(ring));
        ring.clear();
      }
      continue;
    }
    if (line[first] == '#') continue;
    double lon = 0.0, lat = 0.0;
    if (std::sscanf(line.c_str(), "%lf , %lf", &lon, &lat) != 2) {
      throw std::runtime_error("polygon file: bad line '" + line + "' in " + path.string());
    }
    ring.push_back(normalized(GeoPoint{lat, lon}));
  }
  if (!ring.empty()) mask.rings.push_back(std::move(ring));

  // Drop an explicit closing vertex so it is not duplicated in the boundary set.
  for (auto& r : mask.rings) {
    if (r.size() > 3 && r.front().lat == r.back().lat && r.front().lon == r.back().lon) {
      r.pop_back();
    }
  }
  mask.finalize();
  return mask;
}

void save_polygon_file(const LandMask& mask, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write polygon file: " + path.string());
  }
  bool first = true;
  for (const auto& ring : mask.rings) {
    if (!first) out << "\n";
    first = false;
    for (const auto& v : ring) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", v.lon, v.lat);
      out << buf;
    }
  }
}

}  // namespace latga
