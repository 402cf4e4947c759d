#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "latga/astro.hpp"
#include "latga/geo.hpp"
#include "latga/grid.hpp"
#include "latga/landmask.hpp"
#include "latga/rng.hpp"

using namespace latga;

namespace {

constexpr double kPi = std::numbers::pi;

// Spherical law of cosines, an independent route to the central angle.
double law_of_cosines_angle(GeoPoint a, GeoPoint b) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dlam = (b.lon - a.lon) * kDegToRad;
  const double c = std::sin(phi1) * std::sin(phi2) +
                   std::cos(phi1) * std::cos(phi2) * std::cos(dlam);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// Winding-number oracle for point-in-polygon, evaluated per ring with
// even-odd combination across rings.
bool winding_contains(const LandMask& mask, GeoPoint p) {
  bool inside = false;
  for (const auto& ring : mask.rings) {
    double winding = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const GeoPoint& a = ring[i];
      const GeoPoint& b = ring[(i + 1) % ring.size()];
      const double a1 = std::atan2(a.lat - p.lat, a.lon - p.lon);
      const double a2 = std::atan2(b.lat - p.lat, b.lon - p.lon);
      double d = a2 - a1;
      while (d > kPi) d -= 2.0 * kPi;
      while (d < -kPi) d += 2.0 * kPi;
      winding += d;
    }
    if (std::abs(winding) > kPi) inside = !inside;
  }
  return inside;
}

LandMask two_continents_mask() {
  LandMask mask;
  mask.rings.push_back({{5.0, -100.0}, {5.0, -40.0}, {45.0, -40.0}, {45.0, -100.0}});
  mask.rings.push_back({{-35.0, 20.0}, {-35.0, 80.0}, {15.0, 80.0}, {15.0, 20.0}});
  mask.finalize();
  return mask;
}

// Outer square with a nested square hole (even-odd).
LandMask holed_mask() {
  LandMask mask;
  mask.rings.push_back({{-20.0, -20.0}, {-20.0, 20.0}, {20.0, 20.0}, {20.0, -20.0}});
  mask.rings.push_back({{-5.0, -5.0}, {-5.0, 5.0}, {5.0, 5.0}, {5.0, -5.0}});
  mask.finalize();
  return mask;
}

}  // namespace

TEST_CASE("versine basics") {
  CHECK(versine(0.0) == 0.0);
  CHECK(versine(kPi) == doctest::Approx(2.0));
  CHECK(versine(kPi / 2.0) == doctest::Approx(1.0));
}

TEST_CASE("haversine angle of coincident points is zero") {
  CHECK(haversine_angle({12.5, -33.0}, {12.5, -33.0}) == 0.0);
}

TEST_CASE("haversine angle of antipodal equator points is pi") {
  CHECK(haversine_angle({0.0, 0.0}, {0.0, 180.0}) == doctest::Approx(kPi));
}

TEST_CASE("haversine matches the law-of-cosines oracle") {
  const GeoPoint blacksburg{37.226754, -80.432546};
  const GeoPoint geneva{46.308158, 6.134166};
  CHECK(std::abs(haversine_angle(blacksburg, geneva) -
                 law_of_cosines_angle(blacksburg, geneva)) < 1e-9);

  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const GeoPoint a{rng.uniform(-89.0, 89.0), rng.uniform(-180.0, 180.0)};
    const GeoPoint b{rng.uniform(-89.0, 89.0), rng.uniform(-180.0, 180.0)};
    CHECK(std::abs(haversine_angle(a, b) - law_of_cosines_angle(a, b)) < 1e-7);
  }
}

TEST_CASE("haversine is symmetric, nonnegative, and bounded by pi") {
  Rng rng(32);
  for (int i = 0; i < 2000; ++i) {
    const GeoPoint a{rng.uniform(-90.0, 90.0), rng.uniform(-180.0, 180.0)};
    const GeoPoint b{rng.uniform(-90.0, 90.0), rng.uniform(-180.0, 180.0)};
    const double fwd = haversine_angle(a, b);
    CHECK(fwd == haversine_angle(b, a));
    CHECK(fwd >= 0.0);
    CHECK(fwd <= kPi);
  }
}

TEST_CASE("longitude wrap is idempotent and lands in (-180, 180]") {
  Rng rng(33);
  for (int i = 0; i < 2000; ++i) {
    const double lon = rng.uniform(-1000.0, 1000.0);
    const double wrapped = wrap_degrees_180(lon);
    CHECK(wrapped > -180.0);
    CHECK(wrapped <= 180.0);
    CHECK(wrap_degrees_180(wrapped) == wrapped);
  }
  CHECK(wrap_degrees_180(180.0) == 180.0);
  CHECK(wrap_degrees_180(-180.0) == 180.0);
  CHECK(wrap_degrees_180(190.0) == doctest::Approx(-170.0));
}

TEST_CASE("sample point with zero gamma returns the parent") {
  const GeoPoint parent{17.0, -43.0};
  const GeoPoint out = sample_point_latlon(parent, 0.0, 0.5, 0.5);
  CHECK(out.lat == parent.lat);
  CHECK(out.lon == parent.lon);
}

TEST_CASE("sample point moves purely in latitude for s = (1, 0)") {
  const GeoPoint out = sample_point_latlon({0.0, 0.0}, 10.0 * kDegToRad, 1.0, 0.0);
  CHECK(out.lat == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(std::abs(out.lon) < 1e-9);
}

TEST_CASE("sample point round trip recovers gamma away from the poles") {
  Rng rng(34);
  int checked = 0;
  for (int i = 0; i < 100000; ++i) {
    const GeoPoint parent{rng.uniform(-60.0, 60.0), rng.uniform(-180.0, 180.0)};
    const double gamma = rng.uniform(1e-6, 20.0 * kDegToRad);
    const double angle = rng.uniform(0.0, 2.0 * kPi);
    SampleDiagnostics diag;
    const GeoPoint out =
        sample_point_latlon(parent, gamma, std::cos(angle), std::sin(angle), &diag);
    if (diag.any()) continue;  // clamped cases are excluded from the contract
    ++checked;
    CHECK(std::abs(haversine_angle(parent, out) - gamma) < 1e-9);
  }
  CHECK(checked > 95000);
}

TEST_CASE("sample point guards the pole singularity") {
  SampleDiagnostics diag;
  const GeoPoint out =
      sample_point_latlon({89.9999, 10.0}, 5.0 * kDegToRad, 1.0, 1.0, &diag);
  CHECK(diag.lat_clamped);
  CHECK(out.lat == 90.0);
  CHECK(out.lon > -180.0);
  CHECK(out.lon <= 180.0);
}

TEST_CASE("contains accepts a ring centroid and rejects far points") {
  const LandMask mask = two_continents_mask();
  CHECK(contains(mask, {25.0, -70.0}));
  CHECK(contains(mask, {-10.0, 50.0}));
  CHECK_FALSE(contains(mask, {60.0, 150.0}));
  CHECK_FALSE(contains(mask, {-60.0, -150.0}));
}

TEST_CASE("contains counts boundary vertices and edges as inside") {
  const LandMask mask = two_continents_mask();
  CHECK(contains(mask, {5.0, -100.0}));  // corner vertex
  CHECK(contains(mask, {5.0, -70.0}));   // edge midpoint
  CHECK(contains(mask, {45.0, -40.0}));  // opposite corner
}

TEST_CASE("contains matches the winding-number oracle on random points") {
  const LandMask mask = two_continents_mask();
  Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint p{rng.uniform(-60.0, 60.0), rng.uniform(-140.0, 120.0)};
    CAPTURE(p.lat);
    CAPTURE(p.lon);
    CHECK(contains(mask, p) == winding_contains(mask, p));
  }
}

TEST_CASE("nested rings form holes under the even-odd rule") {
  const LandMask mask = holed_mask();
  CHECK(contains(mask, {10.0, 10.0}));      // annulus
  CHECK_FALSE(contains(mask, {0.0, 0.0}));  // inside the hole
  Rng rng(36);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint p{rng.uniform(-30.0, 30.0), rng.uniform(-30.0, 30.0)};
    CHECK(contains(mask, p) == winding_contains(mask, p));
  }
}

TEST_CASE("rings spanning the antimeridian are handled by local unwrapping") {
  LandMask mask;
  mask.rings.push_back({{-10.0, 170.0}, {-10.0, -170.0}, {10.0, -170.0}, {10.0, 170.0}});
  mask.finalize();
  CHECK(contains(mask, {0.0, 180.0}));
  CHECK(contains(mask, {0.0, 175.0}));
  CHECK(contains(mask, {0.0, -175.0}));
  CHECK_FALSE(contains(mask, {0.0, 160.0}));
  CHECK_FALSE(contains(mask, {0.0, -160.0}));
}

TEST_CASE("repair keeps feasible points unchanged") {
  const LandMask mask = two_continents_mask();
  const GeoPoint p{25.0, -70.0};
  const GeoPoint r = repair_to_boundary(p, mask);
  CHECK(r.lat == p.lat);
  CHECK(r.lon == p.lon);
}

TEST_CASE("repair maps a boundary vertex to itself") {
  const LandMask mask = two_continents_mask();
  const GeoPoint r = repair_to_boundary({5.0, -100.0}, mask);
  CHECK(r.lat == 5.0);
  CHECK(r.lon == -100.0);
}

TEST_CASE("repair picks the nearest boundary vertex per exhaustive scan") {
  const LandMask mask = holed_mask();
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    // Points inside the hole are infeasible and must be repaired.
    const GeoPoint p{rng.uniform(-4.9, 4.9), rng.uniform(-4.9, 4.9)};
    REQUIRE_FALSE(contains(mask, p));
    const GeoPoint r = repair_to_boundary(p, mask);

    double best = 1e18;
    GeoPoint expected{};
    for (const auto& v : mask.boundary_points) {
      const double angle = haversine_angle(v, p);
      if (angle < best) {
        best = angle;
        expected = v;
      }
    }
    CHECK(r.lat == expected.lat);
    CHECK(r.lon == expected.lon);
  }
}

TEST_CASE("repair output is a boundary vertex or the feasible input") {
  const LandMask mask = two_continents_mask();
  Rng rng(38);
  for (int i = 0; i < 500; ++i) {
    const GeoPoint p{rng.uniform(-80.0, 80.0), rng.uniform(-180.0, 180.0)};
    const GeoPoint r = repair_to_boundary(p, mask);
    if (contains(mask, p)) {
      CHECK((r.lat == p.lat && r.lon == p.lon));
    } else {
      bool is_vertex = false;
      for (const auto& v : mask.boundary_points) {
        if (v.lat == r.lat && v.lon == r.lon) {
          is_vertex = true;
          break;
        }
      }
      CHECK(is_vertex);
    }
  }
}

TEST_CASE("grid interpolation is exact at nodes and linear at cell centers") {
  GriddedField field;
  field.lat0 = -10.0;
  field.lon0 = 5.0;
  field.dlat = 2.0;
  field.dlon = 3.0;
  field.nrows = 4;
  field.ncols = 5;
  field.values.resize(20);
  Rng rng(39);
  for (auto& v : field.values) v = rng.uniform(0.0, 100.0);

  CHECK(interpolate(field, {-10.0, 5.0}) == field.at(0, 0));
  CHECK(interpolate(field, {-8.0, 8.0}) == field.at(1, 1));
  CHECK(interpolate(field, {-4.0, 17.0}) == field.at(3, 4));

  const double center = interpolate(field, {-9.0, 6.5});
  const double mean =
      0.25 * (field.at(0, 0) + field.at(0, 1) + field.at(1, 0) + field.at(1, 1));
  CHECK(center == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("grid interpolation reproduces a planar field exactly") {
  GriddedField field;
  field.lat0 = -30.0;
  field.lon0 = -60.0;
  field.dlat = 1.5;
  field.dlon = 2.5;
  field.nrows = 41;
  field.ncols = 49;
  field.values.resize(field.nrows * field.ncols);
  for (std::size_t r = 0; r < field.nrows; ++r) {
    for (std::size_t c = 0; c < field.ncols; ++c) {
      const double lat = field.lat0 + field.dlat * static_cast<double>(r);
      const double lon = field.lon0 + field.dlon * static_cast<double>(c);
      field.at(r, c) = 2.0 * lat + 3.0 * lon;
    }
  }
  Rng rng(40);
  for (int i = 0; i < 2000; ++i) {
    const GeoPoint p{rng.uniform(-30.0, 30.0), rng.uniform(-60.0, 60.0)};
    CHECK(std::abs(interpolate(field, p) - (2.0 * p.lat + 3.0 * p.lon)) < 1e-9);
  }
}

TEST_CASE("grid interpolation rejects out-of-extent queries") {
  GriddedField field;
  field.nrows = 3;
  field.ncols = 3;
  field.values.assign(9, 1.0);
  CHECK_THROWS_AS(interpolate(field, {5.0, 0.5}), std::out_of_range);
  CHECK_THROWS_AS(interpolate(field, {0.5, -0.1}), std::out_of_range);
}

TEST_CASE("luminance conversion hits the decade anchors") {
  // Unit ratio: magnitude zero.
  CHECK(std::abs(luminance_to_brightness(1.08e8 - 0.236)) < 1e-12);
  // Two decades dimmer: 2.5 magnitudes per decade.
  CHECK(luminance_to_brightness(1.08e6 - 0.236) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("luminance conversion at zero matches a high-precision oracle") {
  const long double expected =
      -2.5L * std::log10(0.236L / 1.08e8L);  // natural-sky floor alone
  CHECK(luminance_to_brightness(0.0) ==
        doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
  CHECK_THROWS_AS(luminance_to_brightness(-1.0), std::domain_error);
}

TEST_CASE("mean cloud cover averages the twelve monthly fields") {
  std::vector<GriddedField> months(12);
  for (int m = 0; m < 12; ++m) {
    months[m].lat0 = -10.0;
    months[m].lon0 = -10.0;
    months[m].dlat = 10.0;
    months[m].dlon = 10.0;
    months[m].nrows = 3;
    months[m].ncols = 3;
    months[m].values.assign(9, static_cast<double>(m + 1));
  }
  CHECK(mean_cloud_cover(months, {0.0, 0.0}) == doctest::Approx(6.5));

  for (auto& f : months) f.values.assign(9, 0.37);
  CHECK(mean_cloud_cover(months, {3.0, -7.0}) == doctest::Approx(0.37));

  // Random fields against a direct summation oracle.
  Rng rng(41);
  for (auto& f : months) {
    for (auto& v : f.values) v = rng.uniform(0.0, 1.0);
  }
  for (int i = 0; i < 200; ++i) {
    const GeoPoint p{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    double sum = 0.0;
    for (const auto& f : months) sum += interpolate(f, p);
    CHECK(std::abs(mean_cloud_cover(months, p) - sum / 12.0) < 1e-12);
  }

  months.pop_back();
  CHECK_THROWS_AS(mean_cloud_cover(months, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("minimum station angle matches an exhaustive scan") {
  StationList stations;
  stations.entries = {{"a", {10.0, 20.0}}, {"b", {-30.0, 100.0}}, {"c", {55.0, -120.0}}};

  CHECK(min_station_angle({10.0, 20.0}, stations) == 0.0);

  StationList single;
  single.entries = {{"only", {42.0, 13.0}}};
  CHECK(min_station_angle({-7.0, 90.0}, single) ==
        haversine_angle({-7.0, 90.0}, {42.0, 13.0}));

  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const GeoPoint p{rng.uniform(-90.0, 90.0), rng.uniform(-180.0, 180.0)};
    double best = 1e18;
    for (const auto& s : stations.entries) {
      best = std::min(best, haversine_angle(p, s.location));
    }
    CHECK(min_station_angle(p, stations) == best);
  }

  CHECK_THROWS_AS(min_station_angle({0.0, 0.0}, StationList{}), std::invalid_argument);
}
