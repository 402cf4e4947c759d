#pragma once

#include <vector>

#include "latga/astro.hpp"
#include "latga/geo.hpp"

namespace latga {

namespace constants {
inline constexpr double kMu = 398600.435507;        // km^3/s^2
inline constexpr double kEarthRadius = 6378.137;    // km, equatorial
inline constexpr double kParkingAxis = kEarthRadius + 200.0;  // km
inline constexpr double kLimbCutDeg = 10.0;
inline constexpr double kRotationPeriodHours = 24.0;
}  // namespace constants

/// Circular orbit: semi-major axis (km), inclination and RAAN (degrees).
struct OrbitElements {
  double a = constants::kParkingAxis;
  double inc = 0.0;
  double raan = 0.0;
};

/// One to three satellites.
struct Constellation {
  std::vector<OrbitElements> orbits;
};

/// Ground-station access scenario; the track is sampled at step starts,
/// t = 0, step, 2*step, ..., with the final sample strictly before
/// duration_hours.
struct Scenario {
  StationList stations;
  double duration_hours = 168.0;
  double step_minutes = 1.0;
};

/// Orbit period in hours. Throws std::domain_error for a <= 0.
double orbit_period_hours(double a);

/// Inverse of orbit_period_hours.
double semi_major_axis_for_period(double hours);

/// Sinusoidal ground-track latitude, bounded by +-inc, starting at the
/// ascending node.
double sat_latitude(const OrbitElements& el, double t_hours);

/// Ground-track longitude in (-180, 180]; drift comes from the mismatch
/// between the orbit period and the 24 h rotation of the Earth.
double sat_longitude(const OrbitElements& el, double t_hours);

GeoPoint sub_point(const OrbitElements& el, double t_hours);

/// Apparent-disk radius psi in degrees for altitude h (km): the resolvable
/// surface arc minus a 10 degree limb cut. The model is positive only above
/// ~99 km; lower altitudes throw std::domain_error.
double apparent_disk_radius(double h_km);

/// True iff the sub-point lies strictly within psi of the station.
bool instantaneous_access(GeoPoint station, GeoPoint sub_point, double psi_deg);

/// Fraction of (station, time-step) pairs covered by at least one satellite.
/// Satellites below the disk-model floor never cover anything.
double total_access(const Constellation& c, const Scenario& s);

/// Hohmann transfer cost (km/s) from the 200 km parking orbit to a circular
/// orbit of semi-major axis a. Throws std::domain_error for a below parking.
double hohmann_delta_v(double a);

double total_delta_v(const Constellation& c);

/// Admissible altitude bands regardless of inclination.
bool is_feasible_altitude(double h_km);

/// Admissible (altitude, inclination) pairs: LEO with 45 <= i <= 60, three
/// semi-synchronous MEO bands with 45 < i < 60, and GEO with i <= 15.
bool is_feasible_orbit(double h_km, double inc_deg);

}  // namespace latga
