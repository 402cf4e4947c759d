#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "latga/orbit.hpp"
#include "latga/rng.hpp"

using namespace latga;
using namespace latga::constants;

namespace {

// Kepler's-third-law oracle: T^2 / a^3 is constant, checked against the
// known geosynchronous pair.
double period_oracle_hours(double a) {
  const double t_geo_sec = 86164.0905;  // sidereal day
  const double a_geo = 42164.17;
  return t_geo_sec * std::sqrt((a * a * a) / (a_geo * a_geo * a_geo)) / 3600.0;
}

// Bisection inversion of the period law.
double axis_for_period_oracle(double hours) {
  double lo = kEarthRadius, hi = 60000.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (orbit_period_hours(mid) < hours ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Scenario paper_stations_scenario() {
  Scenario s;
  s.stations.entries = {
      {"Blacksburg-USA", {37.226754, -80.432546}},
      {"Geneva-CHE", {46.308158, 6.134166}},
      {"Winton-AUS", {-22.485683, 143.167884}},
  };
  return s;
}

}  // namespace

TEST_CASE("orbit period matches the Kepler oracle at GEO") {
  const double t = orbit_period_hours(42164.0);
  CHECK(std::abs(t - 23.934) < 0.01);
  CHECK(std::abs(t - period_oracle_hours(42164.0)) < 0.01);
}

TEST_CASE("the 12-hour orbit sits in the admissible semi-synchronous band") {
  const double a = semi_major_axis_for_period(12.0);
  CHECK(std::abs(a - axis_for_period_oracle(12.0)) < 1e-3);
  CHECK(std::abs(a - 26610.2) < 1.0);  // frozen from the bisection oracle
  const double h = a - kEarthRadius;
  CHECK(h > 20032.0);
  CHECK(h < 20432.0);
  CHECK(orbit_period_hours(a) == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("quadrupling the axis multiplies the period by eight") {
  for (double a : {7000.0, 10000.0, 21082.0}) {
    CHECK(orbit_period_hours(4.0 * a) / orbit_period_hours(a) ==
          doctest::Approx(8.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(orbit_period_hours(0.0), std::domain_error);
  CHECK_THROWS_AS(orbit_period_hours(-5.0), std::domain_error);
}

TEST_CASE("ground-track latitude follows the sinusoid model") {
  const OrbitElements el{26562.0, 55.0, 10.0};
  const double period = orbit_period_hours(el.a);
  CHECK(sat_latitude(el, 0.0) == 0.0);
  CHECK(sat_latitude(el, period / 4.0) == doctest::Approx(55.0).epsilon(1e-9));
  CHECK(std::abs(sat_latitude(el, period / 2.0)) < 1e-9);

  Rng rng(50);
  for (int i = 0; i < 1000; ++i) {
    const double t = rng.uniform(0.0, 200.0);
    CHECK(std::abs(sat_latitude(el, t)) <= 55.0 + 1e-12);
  }
}

TEST_CASE("ground-track longitude starts at raan and drifts with the period") {
  OrbitElements el{};
  el.raan = 42.0;
  el.a = semi_major_axis_for_period(12.0);
  CHECK(sat_longitude(el, 0.0) == doctest::Approx(42.0));
  el.raan = 0.0;
  CHECK(sat_longitude(el, 12.0) == doctest::Approx(180.0));

  // Exactly synchronous orbit: zero drift for all time.
  el.a = semi_major_axis_for_period(24.0);
  el.raan = -75.0;
  for (double t : {0.0, 5.5, 24.0, 100.0, 167.0}) {
    CHECK(sat_longitude(el, t) == doctest::Approx(-75.0).epsilon(1e-9));
  }

  Rng rng(51);
  const OrbitElements leo{7000.0, 50.0, 13.0};
  for (int i = 0; i < 1000; ++i) {
    const double lon = sat_longitude(leo, rng.uniform(0.0, 168.0));
    CHECK(lon > -180.0);
    CHECK(lon <= 180.0);
  }
}

TEST_CASE("apparent disk radius matches the documented anchors") {
  CHECK(std::abs(2.0 * apparent_disk_radius(350.0) - 17.1) < 0.05);
  CHECK(std::abs(apparent_disk_radius(35786.0) - 71.0) < 0.5);
  CHECK(apparent_disk_radius(100.0) > 0.0);
  CHECK(apparent_disk_radius(100.0) < 1.0);
  CHECK_THROWS_AS(apparent_disk_radius(99.0), std::domain_error);
  CHECK_THROWS_AS(apparent_disk_radius(50.0), std::domain_error);

  // Strictly increasing in altitude.
  double prev = apparent_disk_radius(100.0);
  for (double h = 200.0; h < 40000.0; h += 200.0) {
    const double psi = apparent_disk_radius(h);
    CHECK(psi > prev);
    prev = psi;
  }
}

TEST_CASE("instantaneous access is strict at the threshold") {
  const GeoPoint station{10.0, 20.0};
  CHECK(instantaneous_access(station, station, 5.0));
  CHECK_FALSE(instantaneous_access({0.0, 0.0}, {0.0, 180.0}, 170.0));

  // A sub-point exactly psi away is out of view.
  const GeoPoint sub{10.0, 25.0};
  const double psi = haversine_angle(station, sub) * kRadToDeg;
  CHECK_FALSE(instantaneous_access(station, sub, psi));
  CHECK(instantaneous_access(station, sub, psi + 1e-9));
}

TEST_CASE("satellites below the disk-model floor never cover anything") {
  Scenario s = paper_stations_scenario();
  s.duration_hours = 24.0;
  Constellation c;
  c.orbits.push_back({kEarthRadius + 50.0, 50.0, 0.0});
  CHECK(total_access(c, s) == 0.0);
}

TEST_CASE("duplicating a satellite leaves total access unchanged") {
  Scenario s = paper_stations_scenario();
  s.duration_hours = 48.0;
  Constellation one;
  one.orbits.push_back({semi_major_axis_for_period(6.0), 55.0, -40.0});
  Constellation two = one;
  two.orbits.push_back(one.orbits[0]);
  const double single = total_access(one, s);
  CHECK(single > 0.0);
  CHECK(total_access(two, s) == single);
}

TEST_CASE("access monotonicity: adding a satellite never hurts") {
  Scenario s = paper_stations_scenario();
  s.duration_hours = 24.0;
  Rng rng(52);
  for (int i = 0; i < 20; ++i) {
    Constellation base;
    base.orbits.push_back({rng.uniform(7000.0, 43000.0), rng.uniform(0.0, 60.0),
                           rng.uniform(-180.0, 180.0)});
    Constellation extended = base;
    extended.orbits.push_back({rng.uniform(7000.0, 43000.0), rng.uniform(0.0, 60.0),
                               rng.uniform(-180.0, 180.0)});
    CHECK(total_access(extended, s) >= total_access(base, s));
  }
}

TEST_CASE("two zero-drift GEO satellites give uninterrupted coverage") {
  Scenario s = paper_stations_scenario();  // default week at 1-minute steps
  const double a_sync = semi_major_axis_for_period(24.0);
  const double psi = apparent_disk_radius(a_sync - kEarthRadius);

  // Coverage oracle: pick the western longitude that minimizes the worse of
  // the two northern-station angles, then verify all stations sit inside psi.
  const GeoPoint blacksburg = s.stations.entries[0].location;
  const GeoPoint geneva = s.stations.entries[1].location;
  const GeoPoint winton = s.stations.entries[2].location;

  double best_lon = 0.0, best_angle = 1e18;
  for (double lon = -180.0; lon < 180.0; lon += 0.25) {
    const double worst = std::max(haversine_angle({0.0, lon}, blacksburg),
                                  haversine_angle({0.0, lon}, geneva));
    if (worst < best_angle) {
      best_angle = worst;
      best_lon = lon;
    }
  }
  REQUIRE(best_angle * kRadToDeg < psi);
  REQUIRE(haversine_angle({0.0, winton.lon}, winton) * kRadToDeg < psi);

  Constellation c;
  c.orbits.push_back({a_sync, 0.0, best_lon});
  c.orbits.push_back({a_sync, 0.0, winton.lon});
  CHECK(total_access(c, s) == 1.0);
}

TEST_CASE("hohmann transfer cost anchors") {
  CHECK(hohmann_delta_v(kParkingAxis) == 0.0);
  CHECK(std::abs(3.0 * hohmann_delta_v(42164.0) - 11.796) < 0.006);
  const double a_semi_sync_4rev = semi_major_axis_for_period(6.0);
  CHECK(std::abs(hohmann_delta_v(a_semi_sync_4rev) - 2.74) < 0.05);
  CHECK_THROWS_AS(hohmann_delta_v(kParkingAxis - 1.0), std::domain_error);
}

TEST_CASE("hohmann cost increases strictly with the target axis") {
  double prev = hohmann_delta_v(kParkingAxis);
  for (int i = 1; i <= 1000; ++i) {
    const double a = kParkingAxis + (50000.0 - kParkingAxis) *
                                        static_cast<double>(i) / 1000.0;
    const double dv = hohmann_delta_v(a);
    CHECK(dv > prev);
    prev = dv;
  }
}

TEST_CASE("total delta-v sums the active orbits") {
  Constellation single;
  single.orbits.push_back({26560.0, 55.0, 0.0});
  CHECK(total_delta_v(single) == hohmann_delta_v(26560.0));

  Constellation parked;
  for (int i = 0; i < 3; ++i) parked.orbits.push_back({kParkingAxis, 0.0, 0.0});
  CHECK(total_delta_v(parked) == 0.0);

  Constellation geo3;
  for (int i = 0; i < 3; ++i) geo3.orbits.push_back({42164.0, 0.0, 0.0});
  CHECK(std::abs(total_delta_v(geo3) - 11.796) < 0.006);
}

TEST_CASE("orbit band membership honors strict and non-strict bounds") {
  CHECK(is_feasible_orbit(1000.0, 50.0));
  CHECK_FALSE(is_feasible_orbit(5000.0, 50.0));
  CHECK(is_feasible_orbit(35786.0, 0.0));

  // LEO band allows the inclination endpoints; MEO bands do not.
  CHECK(is_feasible_orbit(1000.0, 45.0));
  CHECK(is_feasible_orbit(1000.0, 60.0));
  CHECK_FALSE(is_feasible_orbit(10400.0, 45.0));
  CHECK_FALSE(is_feasible_orbit(10400.0, 60.0));
  CHECK(is_feasible_orbit(10400.0, 50.0));
  CHECK(is_feasible_orbit(35786.0, 15.0));
  CHECK_FALSE(is_feasible_orbit(35786.0, 15.1));

  // Altitude bounds are strict everywhere.
  CHECK_FALSE(is_feasible_orbit(350.0, 50.0));
  CHECK_FALSE(is_feasible_orbit(2000.0, 50.0));
  CHECK_FALSE(is_feasible_altitude(350.0));
  CHECK(is_feasible_altitude(351.0));
  CHECK(is_feasible_altitude(13800.0));
  CHECK_FALSE(is_feasible_altitude(36500.0));
}

TEST_CASE("the preempted allele table rows are all admissible") {
  const double rows[][2] = {
      {6828.0, 53.0}, {16763.0, 52.0}, {20307.0, 57.0}, {26560.0, 55.0}, {42164.0, 0.0},
  };
  for (const auto& row : rows) {
    CAPTURE(row[0]);
    CHECK(is_feasible_orbit(row[0] - kEarthRadius, row[1]));
  }
}

TEST_CASE("feasible altitude fraction is about 12 percent") {
  Rng rng(53);
  int feasible = 0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    if (is_feasible_altitude(rng.uniform(350.0, 36500.0))) ++feasible;
  }
  const double fraction = static_cast<double>(feasible) / n;
  CHECK(fraction > 0.10);
  CHECK(fraction < 0.14);
}
