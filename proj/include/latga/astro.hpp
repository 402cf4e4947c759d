#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "latga/geo.hpp"
#include "latga/grid.hpp"

namespace latga {

struct Station {
  std::string name;
  GeoPoint location;
};

struct StationList {
  std::vector<Station> entries;
};

/// Converts artificial zenith luminance (mcd/m^2) to sky brightness in
/// magnitudes per square arcsecond, after adding the natural-sky floor of
/// 0.236 mcd/m^2. Larger magnitudes mean darker skies.
/// Throws std::domain_error for negative luminance.
double luminance_to_brightness(double luminance);

/// Mean of the twelve monthly fields interpolated at p.
/// Throws std::invalid_argument unless exactly 12 fields are supplied.
double mean_cloud_cover(std::span<const GriddedField> monthly, GeoPoint p);

/// Minimum central angle (radians) from p to any station.
/// Throws std::invalid_argument on an empty list.
double min_station_angle(GeoPoint p, const StationList& stations);

/// CSV rows "name,lat,lon"; a header row starting with "name" is skipped.
StationList load_station_csv(const std::filesystem::path& path);
void save_station_csv(const StationList& stations, const std::filesystem::path& path);

}  // namespace latga
