#include "latga/objective.hpp"

#include <stdexcept>

namespace latga {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("dominates: objective arity mismatch");
  }
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] > b.values[i]) return false;
    if (a.values[i] < b.values[i]) strictly_better = true;
  }
  return strictly_better;
}

}  // namespace latga
