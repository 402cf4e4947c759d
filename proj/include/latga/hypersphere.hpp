#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latga/rng.hpp"

namespace latga {

/// A set of points on the unit hypersphere in R^dim, stored point-major.
struct UnitHypersphere {
  std::size_t dim = 0;
  std::vector<double> values;

  std::size_t point_count() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const double> point(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }
};

/// Places n_p unit-norm points:
///   dim 1: alternating {+1, -1}
///   dim 2: evenly spaced angles 2*pi*k/n_p
///   dim 3: Fibonacci sphere
///   dim 4+: normalized standard-normal draws from rng
/// Only the dim >= 4 case consumes randomness.
UnitHypersphere construct_unit_hypersphere(std::size_t n_p, std::size_t dim, Rng& rng);

}  // namespace latga
