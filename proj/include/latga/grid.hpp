#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "latga/geo.hpp"

namespace latga {

/// Rectangular scalar field on a regular lat-lon grid. Row r sits at
/// lat0 + r*dlat, column c at lon0 + c*dlon; values are row-major.
struct GriddedField {
  double lat0 = 0.0;
  double lon0 = 0.0;
  double dlat = 1.0;
  double dlon = 1.0;
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::vector<double> values;

  double at(std::size_t row, std::size_t col) const { return values[row * ncols + col]; }
  double& at(std::size_t row, std::size_t col) { return values[row * ncols + col]; }

  /// Throws std::invalid_argument when the matrix shape is inconsistent.
  void validate() const;
};

/// Bilinear interpolation, exact at grid nodes.
/// Throws std::out_of_range when p falls outside the grid extent.
double interpolate(const GriddedField& field, GeoPoint p);

/// CSV layout: header "lat0,lon0,dlat,dlon,nrows,ncols", then nrows lines
/// of ncols comma-separated values.
GriddedField load_grid_csv(const std::filesystem::path& path);
void save_grid_csv(const GriddedField& field, const std::filesystem::path& path);

}  // namespace latga
