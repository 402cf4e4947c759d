#include "latga/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latga {

void GriddedField::validate() const {
  if (nrows < 2 || ncols < 2) {
    throw std::invalid_argument("GriddedField: grid needs at least 2x2 nodes");
  }
  if (dlat <= 0.0 || dlon <= 0.0) {
    throw std::invalid_argument("GriddedField: dlat and dlon must be positive");
  }
  if (values.size() != nrows * ncols) {
    throw std::invalid_argument("GriddedField: value count does not match nrows*ncols");
  }
}

double interpolate(const GriddedField& field, GeoPoint p) {
  const double u = (p.lat - field.lat0) / field.dlat;
  const double v = (p.lon - field.lon0) / field.dlon;
  const double u_max = static_cast<double>(field.nrows - 1);
  const double v_max = static_cast<double>(field.ncols - 1);
  if (u < 0.0 || u > u_max || v < 0.0 || v > v_max) {
    throw std::out_of_range("interpolate: query point outside grid extent");
  }

  std::size_t r = static_cast<std::size_t>(u);
  std::size_t c = static_cast<std::size_t>(v);
  if (r >= field.nrows - 1) r = field.nrows - 2;
  if (c >= field.ncols - 1) c = field.ncols - 2;
  const double fu = u - static_cast<double>(r);
  const double fv = v - static_cast<double>(c);

  const double v00 = field.at(r, c);
  const double v01 = field.at(r, c + 1);
  const double v10 = field.at(r + 1, c);
  const double v11 = field.at(r + 1, c + 1);
  return (1.0 - fu) * ((1.0 - fv) * v00 + fv * v01) + fu * ((1.0 - fv) * v10 + fv * v11);
}

GriddedField load_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open grid file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("grid file is empty: " + path.string());
  }

  GriddedField field;
  unsigned long nrows = 0, ncols = 0;
  if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lu,%lu", &field.lat0, &field.lon0,
                  &field.dlat, &field.dlon, &nrows, &ncols) != 6) {
    throw std::runtime_error("grid file: bad header in " + path.string());
  }
  field.nrows = nrows;
  field.ncols = ncols;
  field.values.reserve(nrows * ncols);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      field.values.push_back(std::stod(cell));
    }
  }
  field.validate();
  return field;
}

void save_grid_csv(const GriddedField& field, const std::filesystem::path& path) {
  field.validate();
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write grid file: " + path.string());
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%zu,%zu\n", field.lat0,
                field.lon0, field.dlat, field.dlon, field.nrows, field.ncols);
  out << buf;
  for (std::size_t r = 0; r < field.nrows; ++r) {
    for (std::size_t c = 0; c < field.ncols; ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", field.at(r, c));
      out << buf << (c + 1 == field.ncols ? "\n" : ",");
    }
  }
}

}  // namespace latga
