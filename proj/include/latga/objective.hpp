#pragma once

#include <limits>
#include <vector>

namespace latga {

/// Fitness tuple under minimization. Problems negate any objective they
/// want maximized. A penalty-killed individual carries the sentinel vector
/// (+infinity in every entry), which every feasible vector dominates.
struct ObjectiveVector {
  std::vector<double> values;

  static ObjectiveVector worst(std::size_t arity) {
    ObjectiveVector v;
    v.values.assign(arity, std::numeric_limits<double>::infinity());
    return v;
  }

  bool is_worst() const {
    for (double x : values) {
      if (x != std::numeric_limits<double>::infinity()) return false;
    }
    return !values.empty();
  }
};

/// Pareto domination: a dominates b iff a is no worse in every objective and
/// strictly better in at least one. Throws std::invalid_argument on an arity
/// mismatch.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

}  // namespace latga
