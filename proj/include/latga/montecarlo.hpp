#pragma once

#include <array>
#include <memory>
#include <vector>

#include "latga/landmask.hpp"
#include "latga/nsga2.hpp"

namespace latga {

struct MonteCarloParams {
  std::size_t n_optima = 50;
  std::size_t runs_per_optimum = 2;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct MonteCarloRunRecord {
  std::size_t optimum_index = 0;
  std::size_t run_index = 0;
  double final_best = 0.0;  // central angle to the optimum, radians
  std::size_t generations = 0;
  bool converged = false;
};

struct MonteCarloReport {
  std::vector<MonteCarloRunRecord> runs;
  /// p5/p50/p95 of the per-run best fitness, per generation. Runs that stop
  /// early hold their final value for the remaining generations.
  std::vector<std::array<double, 3>> percentile_trace;
};

/// Samples n_optima feasible land points, runs runs_per_optimum GA runs per
/// optimum with fitness = central angle to the optimum, and aggregates the
/// report. Runs execute in parallel with seeds derived from
/// (base seed, optimum index, run index), so the result is independent of
/// the thread count and deterministic for a fixed configuration.
MonteCarloReport run_monte_carlo_geo(std::shared_ptr<const LandMask> mask,
                                     const GAConfig& base,
                                     const MonteCarloParams& params);

}  // namespace latga
