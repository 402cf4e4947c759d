#include "latga/astro.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace latga {

namespace {
constexpr double kNaturalSkyFloor = 0.236;   // mcd/m^2
constexpr double kReferenceLuminance = 1.08e8;
}  // namespace

double luminance_to_brightness(double luminance) {
  if (luminance < 0.0) {
    throw std::domain_error("luminance_to_brightness: luminance must be nonnegative");
  }
  return -2.5 * std::log10((luminance + kNaturalSkyFloor) / kReferenceLuminance);
}

double mean_cloud_cover(std::span<const GriddedField> monthly, GeoPoint p) {
  if (monthly.size() != 12) {
    throw std::invalid_argument("mean_cloud_cover: exactly 12 monthly fields required");
  }
  double sum = 0.0;
  for (const auto& field : monthly) sum += interpolate(field, p);
  return sum / 12.0;
}

double min_station_angle(GeoPoint p, const StationList& stations) {
  if (stations.entries.empty()) {
    throw std::invalid_argument("min_station_angle: station list is empty");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : stations.entries) {
    best = std::min(best, haversine_angle(p, s.location));
  }
  return best;
}

StationList load_station_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open station file: " + path.string());
  }
  StationList list;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name", 0) == 0) continue;

    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw std::runtime_error("station file: bad line '" + line + "' in " + path.string());
    }
    Station s;
    s.name = line.substr(0, c1);
    s.location.lat = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    s.location.lon = std::stod(line.substr(c2 + 1));
    s.location = normalized(s.location);
    list.entries.push_back(std::move(s));
  }
  if (list.entries.empty()) {
    throw std::runtime_error("station file has no entries: " + path.string());
  }
  return list;
}

void save_station_csv(const StationList& stations, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write station file: " + path.string());
  }
  out << "name,lat,lon\n";
  for (const auto& s : stations.entries) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g\n", s.name.c_str(), s.location.lat,
                  s.location.lon);
    out << buf;
  }
}

}  // namespace latga
