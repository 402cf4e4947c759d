#include "latga/hypersphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latga {

UnitHypersphere construct_unit_hypersphere(std::size_t n_p, std::size_t dim, Rng& rng) {
  if (n_p < 1 || dim < 1) {
    throw std::invalid_argument("construct_unit_hypersphere: n_p and dim must be >= 1");
  }

  UnitHypersphere s;
  s.dim = dim;
  s.values.reserve(n_p * dim);

  if (dim == 1) {
    for (std::size_t k = 0; k < n_p; ++k) {
      s.values.push_back(k % 2 == 0 ? 1.0 : -1.0);
    }
    return s;
  }

  if (dim == 2) {
    for (std::size_t k = 0; k < n_p; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(n_p);
      s.values.push_back(std::cos(angle));
      s.values.push_back(std::sin(angle));
    }
    return s;
  }

  if (dim == 3) {
    // Fibonacci sphere: latitudes at evenly spaced z, longitudes advanced
    // by the golden angle.
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < n_p; ++k) {
      const double z =
          1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(n_p);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden_angle * static_cast<double>(k);
      s.values.push_back(r * std::cos(phi));
      s.values.push_back(r * std::sin(phi));
      s.values.push_back(z);
    }
    return s;
  }

  // Higher dimensions: isotropic Gaussian directions.
  std::vector<double> v(dim);
  for (std::size_t k = 0; k < n_p; ++k) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (auto& x : v) {
        x = rng.normal();
        norm2 += x * x;
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double x : v) s.values.push_back(x * inv);
  }
  return s;
}

}  // namespace latga
