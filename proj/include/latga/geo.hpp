#pragma once

namespace latga {

/// Latitude-longitude pair in degrees, lat in [-90, 90], lon in (-180, 180].
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

constexpr double kDegToRad = 0.017453292519943295;
constexpr double kRadToDeg = 57.29577951308232;

/// Wraps a longitude-like angle into (-180, 180].
double wrap_degrees_180(double deg);

double clamp_latitude_deg(double deg);

/// Wraps both coordinates into their canonical ranges.
GeoPoint normalized(GeoPoint p);

/// ver(x) = 1 - cos(x), x in radians.
double versine(double x);

/// Central angle between two points on the unit sphere, radians in [0, pi].
/// Computed through the haversine form, which is stable for small separations.
double haversine_angle(GeoPoint p1, GeoPoint p2);

struct SampleDiagnostics {
  bool lat_clamped = false;
  bool arc_clamped = false;
  bool pole_guard = false;
  bool any() const { return lat_clamped || arc_clamped || pole_guard; }
};

/// Maps a unit-circle direction (s1, s2) and a central angle gamma (radians,
/// >= 0) to the point at that angle from `parent`: the latitude moves by
/// gamma*s1 and the longitude offset is recovered by inverting the haversine
/// formula, with its sign taken from s2. When no guard fires,
/// haversine_angle(parent, result) == gamma to within 1e-9.
GeoPoint sample_point_latlon(GeoPoint parent, double gamma_rad, double s1, double s2,
                             SampleDiagnostics* diag = nullptr);

}  // namespace latga
