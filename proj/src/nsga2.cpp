#include "latga/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace latga {

void GAConfig::validate() const {
  if (population_size < 2) {
    throw std::invalid_argument("GAConfig: population_size must be at least 2");
  }
  if (max_generations == 0 || stall_generations == 0) {
    throw std::invalid_argument("GAConfig: generation counts must be positive");
  }
  if (crossover_probability < 0.0 || crossover_probability > 1.0) {
    throw std::invalid_argument("GAConfig: crossover_probability must lie in [0, 1]");
  }
  if (mutation_probability_per_group < 0.0 || mutation_probability_per_group > 1.0) {
    throw std::invalid_argument("GAConfig: mutation_probability_per_group must lie in [0, 1]");
  }
  if (n_p < 2) {
    throw std::invalid_argument("GAConfig: n_p must be at least 2");
  }
  if (n_q < 1) {
    throw std::invalid_argument("GAConfig: n_q must be positive");
  }
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::vector<Individual>& population) {
  const std::size_t n = population.size();
  for (const auto& ind : population) {
    if (!ind.objectives) {
      throw std::invalid_argument("fast_nondominated_sort: unevaluated individual");
    }
  }

  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> dom_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = *population[i].objectives;
      const auto& b = *population[j].objectives;
      if (dominates(a, b)) {
        dominated[i].push_back(j);
        ++dom_count[j];
      } else if (dominates(b, a)) {
        dominated[j].push_back(i);
        ++dom_count[i];
      }
    }
  }

  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (dom_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    for (std::size_t i : current) population[i].rank = fronts.size();
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated[i]) {
        if (--dom_count[j] == 0) next.push_back(j);
      }
    }
    fronts.push_back(std::move(current));
    std::sort(fronts.back().begin(), fronts.back().end());
    current = std::move(next);
  }
  return fronts;
}

void assign_crowding(std::vector<Individual>& population,
                     std::span<const std::size_t> front) {
  if (front.empty()) {
    throw std::invalid_argument("assign_crowding: empty front");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (front.size() <= 2) {
    for (std::size_t i : front) population[i].crowding = inf;
    return;
  }

  for (std::size_t i : front) population[i].crowding = 0.0;
  const std::size_t arity = population[front[0]].objectives->values.size();
  std::vector<std::size_t> order(front.begin(), front.end());

  for (std::size_t k = 0; k < arity; ++k) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return population[a].objectives->values[k] < population[b].objectives->values[k];
    });
    population[order.front()].crowding = inf;
    population[order.back()].crowding = inf;

    const double lo = population[order.front()].objectives->values[k];
    const double hi = population[order.back()].objectives->values[k];
    const double range = hi - lo;
    if (!(range > 0.0) || !std::isfinite(range)) continue;

    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
      const double below = population[order[i - 1]].objectives->values[k];
      const double above = population[order[i + 1]].objectives->values[k];
      population[order[i]].crowding += (above - below) / range;
    }
  }
}

std::size_t crowded_winner(const std::vector<Individual>& population, std::size_t i,
                           std::size_t j, Rng& rng) {
  const Individual& a = population[i];
  const Individual& b = population[j];
  if (a.rank != b.rank) return a.rank < b.rank ? i : j;
  if (a.crowding != b.crowding) return a.crowding > b.crowding ? i : j;
  return rng.bernoulli(0.5) ? i : j;
}

std::size_t tournament_select(const std::vector<Individual>& population, Rng& rng) {
  if (population.empty()) {
    throw std::invalid_argument("tournament_select: empty population");
  }
  const std::size_t i = rng.uniform_index(population.size());
  const std::size_t j = rng.uniform_index(population.size());
  return crowded_winner(population, i, j, rng);
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) {
    throw std::invalid_argument("percentile: empty sample");
  }
  std::sort(values.begin(), values.end());
  const double rank = std::clamp(p, 0.0, 100.0) / 100.0 *
                      static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(rank);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

namespace {

void sort_and_crowd(std::vector<Individual>& population) {
  const auto fronts = fast_nondominated_sort(population);
  for (const auto& front : fronts) assign_crowding(population, front);
}

GenerationStats collect_stats(const std::vector<Individual>& population,
                              std::size_t arity) {
  GenerationStats stats;
  stats.best.assign(arity, std::numeric_limits<double>::infinity());
  stats.median.resize(arity);

  std::vector<double> column(population.size());
  for (std::size_t k = 0; k < arity; ++k) {
    for (std::size_t i = 0; i < population.size(); ++i) {
      const double v = population[i].objectives->values[k];
      column[i] = v;
      if (population[i].rank == 0 && v < stats.best[k]) stats.best[k] = v;
    }
    stats.median[k] = percentile(column, 50.0);
  }
  return stats;
}

std::vector<Individual> survival_select(std::vector<Individual>& combined,
                                        std::size_t target) {
  const auto fronts = fast_nondominated_sort(combined);
  for (const auto& front : fronts) assign_crowding(combined, front);

  std::vector<Individual> next;
  next.reserve(target);
  for (const auto& front : fronts) {
    if (next.size() + front.size() <= target) {
      for (std::size_t i : front) next.push_back(std::move(combined[i]));
      if (next.size() == target) break;
      continue;
    }
    std::vector<std::size_t> order(front.begin(), front.end());
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return combined[a].crowding > combined[b].crowding;
    });
    for (std::size_t i : order) {
      if (next.size() == target) break;
      next.push_back(std::move(combined[i]));
    }
    break;
  }
  return next;
}

}  // namespace

RunResult run_nsga2(const ProblemDefinition& problem, const GAConfig& config,
                    const GenerationObserver& observer) {
  config.validate();
  problem.genome.validate();
  if (!problem.initialize || !problem.evaluate) {
    throw std::invalid_argument("run_nsga2: problem must supply initialize and evaluate");
  }

  const auto op = make_variation_operator(config.operator_choice, problem.genome,
                                          config.n_p, config.n_q);
  Rng rng(config.rng_seed);
  const std::size_t arity = problem.objective_count;

  std::vector<Individual> population;
  population.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    Individual ind;
    ind.chromosome = problem.initialize(rng);
    if (!chromosome_feasible(problem.genome, ind.chromosome)) {
      throw std::invalid_argument("run_nsga2: initializer produced an infeasible chromosome");
    }
    ind.objectives = problem.evaluate(ind.chromosome);
    population.push_back(std::move(ind));
  }
  sort_and_crowd(population);

  RunResult result;
  result.trace.push_back(collect_stats(population, arity));
  if (observer) observer(0, population);

  std::vector<double> best_so_far = result.trace.back().best;
  std::size_t stall = 0;

  auto make_child = [&](Chromosome&& chromosome) {
    Individual child;
    child.chromosome = std::move(chromosome);
    const bool feasible = op->finalize(child.chromosome);
    if (feasible) {
      child.objectives = problem.evaluate(child.chromosome);
    } else {
      if (op->constraint_consistent()) {
        throw std::logic_error("run_nsga2: constraint-consistent operator emitted "
                               "an infeasible offspring");
      }
      child.objectives = ObjectiveVector::worst(arity);
    }
    return child;
  };

  for (std::size_t gen = 1; gen <= config.max_generations; ++gen) {
    result.generations = gen;

    std::vector<Individual> offspring;
    offspring.reserve(config.population_size);
    for (std::size_t pair = 0; offspring.size() < config.population_size; ++pair) {
      const std::size_t p1 = tournament_select(population, rng);
      const std::size_t p2 = tournament_select(population, rng);
      Rng pair_rng = rng.substream(0x766172ull, gen, pair);

      Chromosome c1, c2;
      if (pair_rng.bernoulli(config.crossover_probability)) {
        auto [a, b] = op->crossover(population[p1].chromosome,
                                    population[p2].chromosome, pair_rng);
        c1 = std::move(a);
        c2 = std::move(b);
      } else {
        c1 = population[p1].chromosome;
        c2 = population[p2].chromosome;
      }
      op->mutate(c1, config.mutation_probability_per_group, pair_rng);
      op->mutate(c2, config.mutation_probability_per_group, pair_rng);

      offspring.push_back(make_child(std::move(c1)));
      if (offspring.size() < config.population_size) {
        offspring.push_back(make_child(std::move(c2)));
      }
    }

    std::vector<Individual> combined = std::move(population);
    combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
    population = survival_select(combined, config.population_size);
    sort_and_crowd(population);

    result.trace.push_back(collect_stats(population, arity));
    if (observer) observer(gen, population);

    bool improved = false;
    const auto& best = result.trace.back().best;
    for (std::size_t k = 0; k < arity; ++k) {
      if (best[k] < best_so_far[k]) {
        best_so_far[k] = best[k];
        improved = true;
      }
    }
    stall = improved ? 0 : stall + 1;
    if (stall >= config.stall_generations) {
      result.converged = true;
      break;
    }
  }

  for (const auto& ind : population) {
    if (ind.rank == 0) result.front.push_back(ind);
  }
  return result;
}

}  // namespace latga
