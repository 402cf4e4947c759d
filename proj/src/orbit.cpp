#include "latga/orbit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latga {

using namespace constants;

double orbit_period_hours(double a) {
  if (a <= 0.0) {
    throw std::domain_error("orbit_period_hours: semi-major axis must be positive");
  }
  const double seconds = 2.0 * std::numbers::pi * std::sqrt(a * a * a / kMu);
  return seconds / 3600.0;
}

double semi_major_axis_for_period(double hours) {
  if (hours <= 0.0) {
    throw std::domain_error("semi_major_axis_for_period: period must be positive");
  }
  const double seconds = hours * 3600.0;
  const double ratio = seconds / (2.0 * std::numbers::pi);
  return std::cbrt(kMu * ratio * ratio);
}

double sat_latitude(const OrbitElements& el, double t_hours) {
  const double period = orbit_period_hours(el.a);
  return el.inc * std::sin(2.0 * std::numbers::pi * t_hours / period);
}

double sat_longitude(const OrbitElements& el, double t_hours) {
  const double period = orbit_period_hours(el.a);
  const double revs = t_hours / period - t_hours / kRotationPeriodHours;
  return wrap_degrees_180(360.0 * revs + el.raan);
}

GeoPoint sub_point(const OrbitElements& el, double t_hours) {
  return {sat_latitude(el, t_hours), sat_longitude(el, t_hours)};
}

namespace {

constexpr double kDiskModelFloorKm = 99.0;

double disk_radius_unchecked(double h_km) {
  return std::acos(kEarthRadius / (kEarthRadius + h_km)) * kRadToDeg - kLimbCutDeg;
}

}  // namespace

double apparent_disk_radius(double h_km) {
  if (h_km <= kDiskModelFloorKm) {
    throw std::domain_error("apparent_disk_radius: model invalid at or below 99 km");
  }
  return disk_radius_unchecked(h_km);
}

bool instantaneous_access(GeoPoint station, GeoPoint sub_point, double psi_deg) {
  return haversine_angle(station, sub_point) < psi_deg * kDegToRad;
}

double total_access(const Constellation& c, const Scenario& s) {
  if (s.stations.entries.empty() || s.duration_hours <= 0.0 || s.step_minutes <= 0.0) {
    throw std::invalid_argument("total_access: invalid scenario");
  }
  const double step_hours = s.step_minutes / 60.0;
  const std::size_t n_steps =
      static_cast<std::size_t>(std::llround(s.duration_hours / step_hours));
  const std::size_t n_stations = s.stations.entries.size();

  struct SatState {
    double period;
    double raan;
    double inc;
    double hav_threshold;  // haversine value at psi; negative -> never in view
  };
  std::vector<SatState> sats;
  sats.reserve(c.orbits.size());
  for (const auto& orbit : c.orbits) {
    SatState st{};
    st.period = orbit_period_hours(orbit.a);
    st.raan = orbit.raan;
    st.inc = orbit.inc;
    const double h = orbit.a - kEarthRadius;
    if (h > kDiskModelFloorKm) {
      const double psi_rad = disk_radius_unchecked(h) * kDegToRad;
      st.hav_threshold = psi_rad > 0.0 ? 0.5 * versine(psi_rad) : -1.0;
    } else {
      st.hav_threshold = -1.0;
    }
    sats.push_back(st);
  }

  std::vector<double> station_phi(n_stations), station_cos(n_stations),
      station_lon(n_stations);
  for (std::size_t i = 0; i < n_stations; ++i) {
    const GeoPoint g = s.stations.entries[i].location;
    station_phi[i] = g.lat * kDegToRad;
    station_cos[i] = std::cos(station_phi[i]);
    station_lon[i] = g.lon;
  }

  std::size_t covered = 0;
  for (std::size_t step = 0; step < n_steps; ++step) {
    const double t = static_cast<double>(step) * step_hours;
    for (std::size_t i = 0; i < n_stations; ++i) {
      for (const auto& sat : sats) {
        if (sat.hav_threshold < 0.0) continue;
        const double lat =
            sat.inc * std::sin(2.0 * std::numbers::pi * t / sat.period);
        const double lon = wrap_degrees_180(
            360.0 * (t / sat.period - t / kRotationPeriodHours) + sat.raan);
        const double phi = lat * kDegToRad;
        const double dlam = (lon - station_lon[i]) * kDegToRad;
        const double hav =
            0.5 * (versine(phi - station_phi[i]) +
                   station_cos[i] * std::cos(phi) * versine(dlam));
        if (hav < sat.hav_threshold) {
          ++covered;
          break;
        }
      }
    }
  }
  return static_cast<double>(covered) /
         static_cast<double>(n_steps * n_stations);
}

double hohmann_delta_v(double a) {
  if (a < kParkingAxis) {
    throw std::domain_error("hohmann_delta_v: target orbit below the parking orbit");
  }
  const double a_t = 0.5 * (kParkingAxis + a);
  const double burn1 =
      std::sqrt(2.0 * kMu / kParkingAxis - kMu / a_t) - std::sqrt(kMu / kParkingAxis);
  const double burn2 = std::sqrt(kMu / a) - std::sqrt(2.0 * kMu / a - kMu / a_t);
  return burn1 + burn2;
}

double total_delta_v(const Constellation& c) {
  double sum = 0.0;
  for (const auto& orbit : c.orbits) sum += hohmann_delta_v(orbit.a);
  return sum;
}

bool is_feasible_altitude(double h_km) {
  return (h_km > 350.0 && h_km < 2000.0) || (h_km > 10185.0 && h_km < 10585.0) ||
         (h_km > 13729.0 && h_km < 14129.0) || (h_km > 20032.0 && h_km < 20432.0) ||
         (h_km > 35000.0 && h_km < 36500.0);
}

bool is_feasible_orbit(double h_km, double inc_deg) {
  if (h_km > 350.0 && h_km < 2000.0) return inc_deg >= 45.0 && inc_deg <= 60.0;
  const bool meo = (h_km > 10185.0 && h_km < 10585.0) ||
                   (h_km > 13729.0 && h_km < 14129.0) ||
                   (h_km > 20032.0 && h_km < 20432.0);
  if (meo) return inc_deg > 45.0 && inc_deg < 60.0;
  if (h_km > 35000.0 && h_km < 36500.0) return inc_deg <= 15.0;
  return false;
}

}  // namespace latga
