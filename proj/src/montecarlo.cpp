#include "latga/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "latga/problems.hpp"

namespace latga {

MonteCarloReport run_monte_carlo_geo(std::shared_ptr<const LandMask> mask,
                                     const GAConfig& base,
                                     const MonteCarloParams& params) {
  if (!mask) {
    throw std::invalid_argument("run_monte_carlo_geo: mask is required");
  }
  if (params.n_optima == 0 || params.runs_per_optimum == 0) {
    throw std::invalid_argument("run_monte_carlo_geo: need at least one optimum and run");
  }
  base.validate();

  Rng optimum_rng = Rng(base.rng_seed).substream(0x6f7074ull);
  std::vector<GeoPoint> optima;
  optima.reserve(params.n_optima);
  for (std::size_t i = 0; i < params.n_optima; ++i) {
    optima.push_back(sample_feasible_point(*mask, optimum_rng));
  }

  const std::size_t n_jobs = params.n_optima * params.runs_per_optimum;
  std::vector<MonteCarloRunRecord> records(n_jobs);
  std::vector<std::vector<double>> best_traces(n_jobs);

  auto run_job = [&](std::size_t job) {
    const std::size_t opt = job / params.runs_per_optimum;
    const std::size_t run = job % params.runs_per_optimum;

    GAConfig cfg = base;
    cfg.rng_seed = Rng(base.rng_seed).substream(0x72756eull, opt, run).seed();
    const ProblemDefinition problem = make_geo_search_problem(mask, optima[opt]);
    const RunResult result = run_nsga2(problem, cfg);

    MonteCarloRunRecord rec;
    rec.optimum_index = opt;
    rec.run_index = run;
    rec.generations = result.generations;
    rec.converged = result.converged;
    rec.final_best = result.trace.back().best[0];
    records[job] = rec;

    auto& trace = best_traces[job];
    trace.reserve(result.trace.size());
    for (const auto& stats : result.trace) trace.push_back(stats.best[0]);
  };

  unsigned n_threads = params.threads != 0 ? params.threads
                                           : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = static_cast<unsigned>(
      std::min<std::size_t>(n_threads, n_jobs));

  if (n_threads <= 1) {
    for (std::size_t job = 0; job < n_jobs; ++job) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t job = next.fetch_add(1);
          if (job >= n_jobs) return;
          run_job(job);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  // Generation axis: pad converged runs with their final value out to the
  // longest run, capped by the configured maximum.
  std::size_t horizon = 0;
  for (const auto& trace : best_traces) horizon = std::max(horizon, trace.size());

  MonteCarloReport report;
  report.runs = std::move(records);
  report.percentile_trace.reserve(horizon);
  std::vector<double> column(n_jobs);
  for (std::size_t g = 0; g < horizon; ++g) {
    for (std::size_t job = 0; job < n_jobs; ++job) {
      const auto& trace = best_traces[job];
      column[job] = g < trace.size() ? trace[g] : trace.back();
    }
    report.percentile_trace.push_back({percentile(column, 5.0),
                                       percentile(column, 50.0),
                                       percentile(column, 95.0)});
  }
  return report;
}

}  // namespace latga
