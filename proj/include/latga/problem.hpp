#pragma once

#include <functional>
#include <string>

#include "latga/chromosome.hpp"
#include "latga/objective.hpp"
#include "latga/rng.hpp"

namespace latga {

/// A problem supplies a feasible initializer, a pure evaluator, and the
/// genome structure (domains, linkage with feasibility predicates, length
/// class). All objectives are minimized; the evaluator negates anything it
/// wants maximized.
struct ProblemDefinition {
  std::string name;
  std::size_t objective_count = 1;
  GenomeSpec genome;

  /// Must return a feasible chromosome, or throw std::runtime_error when the
  /// feasible region cannot be sampled.
  std::function<Chromosome(Rng&)> initialize;

  std::function<ObjectiveVector(const Chromosome&)> evaluate;
};

}  // namespace latga
