#include "latga/geo.hpp"

#include <algorithm>
#include <cmath>

namespace latga {

double wrap_degrees_180(double deg) {
  double x = std::fmod(deg + 180.0, 360.0);
  if (x <= 0.0) x += 360.0;
  return x - 180.0;
}

double clamp_latitude_deg(double deg) { return std::clamp(deg, -90.0, 90.0); }

GeoPoint normalized(GeoPoint p) {
  return {clamp_latitude_deg(p.lat), wrap_degrees_180(p.lon)};
}

double versine(double x) { return 1.0 - std::cos(x); }

double haversine_angle(GeoPoint p1, GeoPoint p2) {
  const double phi1 = p1.lat * kDegToRad;
  const double phi2 = p2.lat * kDegToRad;
  const double dphi = phi2 - phi1;
  const double dlam = (p2.lon - p1.lon) * kDegToRad;
  const double h = 0.5 * (versine(dphi) + std::cos(phi1) * std::cos(phi2) * versine(dlam));
  return 2.0 * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

GeoPoint sample_point_latlon(GeoPoint parent, double gamma_rad, double s1, double s2,
                             SampleDiagnostics* diag) {
  if (gamma_rad == 0.0) return parent;

  const double phi_parent = parent.lat * kDegToRad;
  double phi_off = phi_parent + gamma_rad * s1;
  const double phi_limit = 90.0 * kDegToRad;
  if (phi_off > phi_limit || phi_off < -phi_limit) {
    phi_off = std::clamp(phi_off, -phi_limit, phi_limit);
    if (diag) diag->lat_clamped = true;
  }

  double dlam = 0.0;
  const double denom = std::cos(phi_off) * std::cos(phi_parent);
  if (std::abs(denom) < 1e-12) {
    // Pole singularity: longitude offset is undefined, leave it at zero.
    if (diag) diag->pole_guard = true;
  } else {
    double c = 1.0 + (std::cos(gamma_rad) - std::cos(phi_off - phi_parent)) / denom;
    if (c > 1.0 || c < -1.0) {
      c = std::clamp(c, -1.0, 1.0);
      if (diag) diag->arc_clamped = true;
    }
    dlam = std::acos(c);
  }

  const double sign = (s2 > 0.0) ? 1.0 : (s2 < 0.0 ? -1.0 : 0.0);
  const double lon_off = parent.lon + sign * dlam * kRadToDeg;
  return {phi_off * kRadToDeg, wrap_degrees_180(lon_off)};
}

}  // namespace latga
