#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "latga/objective.hpp"
#include "latga/operators.hpp"
#include "latga/problem.hpp"

namespace latga {

struct Individual {
  Chromosome chromosome;
  std::optional<ObjectiveVector> objectives;
  std::size_t rank = 0;
  double crowding = 0.0;
};

struct GAConfig {
  std::size_t population_size = 100;
  std::size_t max_generations = 100;
  std::size_t stall_generations = 50;
  double crossover_probability = 0.9;
  double mutation_probability_per_group = 0.1;
  std::uint64_t rng_seed = 1;
  OperatorChoice operator_choice = OperatorChoice::gauss_lattice;
  int n_p = 10;
  int n_q = 10;

  /// Throws std::invalid_argument on out-of-range values (n_p must be >= 2).
  void validate() const;
};

/// Ranks the population into nondominated fronts (front 0 dominated by
/// nobody) and writes ranks back. Every individual must be evaluated.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::vector<Individual>& population);

/// NSGA-II crowding distance over one front: per-objective extremes get
/// +infinity, interior members accumulate normalized neighbor gaps, and a
/// zero objective range contributes nothing.
void assign_crowding(std::vector<Individual>& population,
                     std::span<const std::size_t> front);

/// Crowded-comparison winner between two candidates: lower rank wins, then
/// larger crowding, then a coin flip.
std::size_t crowded_winner(const std::vector<Individual>& population, std::size_t i,
                           std::size_t j, Rng& rng);

/// Binary tournament: draws two candidates uniformly and returns the
/// crowded-comparison winner. Throws std::invalid_argument on an empty
/// population.
std::size_t tournament_select(const std::vector<Individual>& population, Rng& rng);

struct GenerationStats {
  std::vector<double> best;    // elementwise minimum over the current front
  std::vector<double> median;  // per-objective population median
};

struct RunResult {
  std::vector<Individual> front;        // final nondominated set
  std::vector<GenerationStats> trace;   // entry 0 is the initial population
  std::size_t generations = 0;          // generations executed
  bool converged = false;               // stopped by the stall window
};

using GenerationObserver =
    std::function<void(std::size_t generation, const std::vector<Individual>&)>;

/// Runs the elitist (mu+lambda) NSGA-II loop until max_generations or until
/// stall_generations pass without improvement of any objective's best value
/// on the nondominated front. Deterministic for a fixed seed; offspring
/// variation draws from per-pair substreams of the run seed.
RunResult run_nsga2(const ProblemDefinition& problem, const GAConfig& config,
                    const GenerationObserver& observer = {});

/// Linear-interpolation percentile of an unsorted sample, p in [0, 100].
double percentile(std::vector<double> values, double p);

}  // namespace latga
