// Regenerates the synthetic data fixtures under a target directory:
// a rectangular-continent land mask, an artificial-brightness grid built
// from Gaussian city bumps, twelve monthly cloud-fraction grids, the ground
// station list, and a synthetic university list.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>

#include "latga/astro.hpp"
#include "latga/grid.hpp"
#include "latga/landmask.hpp"

namespace {

using latga::GeoPoint;
using latga::GriddedField;

latga::LandMask make_mask() {
  latga::LandMask mask;
  // Two rectangular "continents" and one small "island".
  mask.rings.push_back({{5.0, -100.0}, {5.0, -40.0}, {45.0, -40.0}, {45.0, -100.0}});
  mask.rings.push_back({{-35.0, 20.0}, {-35.0, 80.0}, {15.0, 80.0}, {15.0, 20.0}});
  mask.rings.push_back({{-25.0, 120.0}, {-25.0, 130.0}, {-15.0, 130.0}, {-15.0, 120.0}});
  mask.finalize();
  return mask;
}

GriddedField make_global_grid() {
  GriddedField field;
  field.lat0 = -90.0;
  field.lon0 = -180.0;
  field.dlat = 5.0;
  field.dlon = 5.0;
  field.nrows = 37;
  field.ncols = 73;
  field.values.assign(field.nrows * field.ncols, 0.0);
  return field;
}

struct City {
  double lat;
  double lon;
  double peak;   // mcd/m^2
  double sigma;  // degrees
};

GriddedField make_brightness() {
  // Bright bumps near the synthetic universities plus a few free-standing
  // cities, over a faint rural background.
  const City cities[] = {
      {25.0, -69.0, 2600.0, 6.0}, {-9.0, 51.0, 2200.0, 6.0},
      {-19.0, 124.0, 1500.0, 4.0}, {38.0, -92.0, 3200.0, 7.0},
      {8.0, 30.0, 1800.0, 5.0},   {-28.0, 65.0, 900.0, 4.0},
  };
  GriddedField field = make_global_grid();
  for (std::size_t r = 0; r < field.nrows; ++r) {
    for (std::size_t c = 0; c < field.ncols; ++c) {
      const double lat = field.lat0 + field.dlat * static_cast<double>(r);
      const double lon = field.lon0 + field.dlon * static_cast<double>(c);
      double value = 0.5;
      for (const auto& city : cities) {
        const double dlat = lat - city.lat;
        const double dlon = latga::wrap_degrees_180(lon - city.lon);
        const double d2 = dlat * dlat + dlon * dlon;
        value += city.peak * std::exp(-d2 / (2.0 * city.sigma * city.sigma));
      }
      field.at(r, c) = value;
    }
  }
  return field;
}

GriddedField make_cloud(int month) {
  // Latitude-dependent base with a wet band near 40S and a dry band near
  // 15N, plus a seasonal sinusoid that cancels in the yearly mean.
  GriddedField field = make_global_grid();
  const double phase = 2.0 * std::numbers::pi * static_cast<double>(month - 1) / 12.0;
  for (std::size_t r = 0; r < field.nrows; ++r) {
    for (std::size_t c = 0; c < field.ncols; ++c) {
      const double lat = field.lat0 + field.dlat * static_cast<double>(r);
      const double base =
          0.5 - 0.3 * std::cos(std::numbers::pi * (lat - 15.0) / 60.0);
      const double seasonal =
          0.08 * std::sin(phase + std::numbers::pi * lat / 90.0);
      field.at(r, c) = std::clamp(base + seasonal, 0.02, 0.98);
    }
  }
  return field;
}

latga::StationList make_ground_stations() {
  latga::StationList list;
  list.entries = {
      {"Blacksburg-USA", {37.226754, -80.432546}},
      {"Geneva-CHE", {46.308158, 6.134166}},
      {"Winton-AUS", {-22.485683, 143.167884}},
  };
  return list;
}

latga::StationList make_universities() {
  latga::StationList list;
  list.entries = {
      {"U-West", {25.0, -70.0}},
      {"U-East", {-10.0, 50.0}},
      {"U-Island", {-20.0, 125.0}},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path out_dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(out_dir);

  latga::save_polygon_file(make_mask(), out_dir / "synthetic_mask.poly");
  latga::save_grid_csv(make_brightness(), out_dir / "synthetic_brightness.grid");
  for (int month = 1; month <= 12; ++month) {
    char name[40];
    std::snprintf(name, sizeof(name), "synthetic_cloud_%02d.grid", month);
    latga::save_grid_csv(make_cloud(month), out_dir / name);
  }
  latga::save_station_csv(make_ground_stations(), out_dir / "ground_stations.csv");
  latga::save_station_csv(make_universities(), out_dir / "synthetic_universities.csv");

  std::cout << "fixtures written to " << out_dir.string() << "\n";
  return 0;
}
