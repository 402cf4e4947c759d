// Benchmark front end: wires data files, problem definitions, and the GA
// engine together behind three subcommands (geo-mc, astro, orbit).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latga/config.hpp"
#include "latga/exports.hpp"
#include "latga/montecarlo.hpp"
#include "latga/problems.hpp"

namespace {

using latga::RunConfig;

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "population_size", "max_generations", "stall_generations",
      "crossover_probability", "mutation_probability_per_group", "seed",
      "operator", "n_p", "n_q", "mask_file", "brightness_file", "cloud_files",
      "cloud_file_prefix", "stations_file", "university_file", "pool_file",
      "n_optima", "runs_per_optimum", "threads", "duration_hours",
      "step_minutes", "slot_toggle_probability", "pool_size", "out_dir",
  };
  return keys;
}

struct SubcommandState {
  CLI::App* cmd = nullptr;
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

SubcommandState add_subcommand(CLI::App& app, const std::string& name,
                               const std::string& description) {
  SubcommandState state;
  state.cmd = app.add_subcommand(name, description);
  state.cmd->add_option("--config", state.config_path,
                        "flat key = value configuration file");
  for (const auto& key : config_keys()) {
    std::string names = "--" + key;
    if (key == "out_dir") names += ",--out-dir";
    state.cmd->add_option(names, state.overrides[key],
                          "override config key '" + key + "'");
  }
  return state;
}

RunConfig resolve_config(const SubcommandState& state, RunConfig defaults) {
  RunConfig config = std::move(defaults);
  if (!state.config_path.empty()) {
    latga::load_config_file(config, state.config_path);
  }
  for (const auto& key : config_keys()) {
    if (state.cmd->count("--" + key) > 0) {
      config.apply(key, state.overrides.at(key));
    }
  }
  config.validate();
  return config;
}

std::shared_ptr<const latga::MutationPool> resolve_orbit_pool(const RunConfig& config) {
  namespace fs = std::filesystem;
  if (!config.pool_file.empty() && fs::exists(config.pool_file)) {
    auto feasible = [](std::span<const double> a) {
      return latga::is_feasible_orbit(a[0] - latga::constants::kEarthRadius, a[1]);
    };
    return std::make_shared<latga::MutationPool>(
        latga::load_mutation_pool_csv(config.pool_file, feasible));
  }
  latga::Rng pool_rng = latga::Rng(config.ga.rng_seed).substream(0x706f6f6cull);
  auto pool = std::make_shared<latga::MutationPool>(
      latga::generate_orbit_pool(config.pool_size, pool_rng));
  if (!config.pool_file.empty()) {
    latga::save_mutation_pool_csv(*pool, config.pool_file);
    std::cout << "generated mutation pool -> " << config.pool_file << "\n";
  }
  return pool;
}

int run_geo_mc(const RunConfig& config) {
  auto mask = std::make_shared<const latga::LandMask>(
      latga::load_polygon_file(config.mask_file));
  latga::MonteCarloParams params{config.n_optima, config.runs_per_optimum,
                                 config.threads};
  const auto report = run_monte_carlo_geo(mask, config.ga, params);

  const std::filesystem::path out(config.out_dir);
  latga::export_trace_csv(report, out / "trace.csv");
  latga::export_mc_runs_csv(report, out / "runs.csv");

  std::vector<double> finals, gens;
  for (const auto& rec : report.runs) {
    finals.push_back(rec.final_best);
    gens.push_back(static_cast<double>(rec.generations));
  }
  std::printf("geo-mc: %zu runs (%s), median final angle %.3e rad, median "
              "generations %.0f\n",
              report.runs.size(), latga::to_string(config.ga.operator_choice),
              latga::percentile(finals, 50.0), latga::percentile(gens, 50.0));
  std::cout << "wrote " << (out / "trace.csv").string() << " and "
            << (out / "runs.csv").string() << "\n";
  return 0;
}

int run_astro(const RunConfig& config) {
  auto data = std::make_shared<latga::AstroData>();
  data->mask = std::make_shared<const latga::LandMask>(
      latga::load_polygon_file(config.mask_file));
  data->brightness = latga::load_grid_csv(config.brightness_file);
  for (const auto& path : config.monthly_cloud_files()) {
    data->cloud.push_back(latga::load_grid_csv(path));
  }
  data->stations = latga::load_station_csv(config.university_file);

  const auto problem = latga::make_astro_problem(data);
  const auto result = latga::run_nsga2(problem, config.ga);

  const std::filesystem::path out(config.out_dir);
  latga::export_astro_front_csv(result.front, out / "pareto.csv");
  std::printf("astro: %zu generations (%s), front size %zu%s\n", result.generations,
              latga::to_string(config.ga.operator_choice), result.front.size(),
              result.converged ? ", converged" : "");
  std::cout << "wrote " << (out / "pareto.csv").string() << "\n";
  return 0;
}

int run_orbit(const RunConfig& config) {
  auto orbit_cfg = std::make_shared<latga::OrbitProblemConfig>();
  orbit_cfg->scenario.stations = latga::load_station_csv(config.stations_file);
  orbit_cfg->scenario.duration_hours = config.duration_hours;
  orbit_cfg->scenario.step_minutes = config.step_minutes;
  orbit_cfg->pool = resolve_orbit_pool(config);
  orbit_cfg->slot_toggle_probability = config.slot_toggle_probability;

  const auto problem = latga::make_orbit_problem(orbit_cfg);
  const auto result = latga::run_nsga2(problem, config.ga);

  const std::filesystem::path out(config.out_dir);
  latga::export_orbit_front_csv(result.front, out / "pareto.csv");
  std::printf("orbit: %zu generations (%s), front size %zu%s\n", result.generations,
              latga::to_string(config.ga.operator_choice), result.front.size(),
              result.converged ? ", converged" : "");
  std::cout << "wrote " << (out / "pareto.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constraint-consistent multi-objective GA benchmarks"};
  app.require_subcommand(1);

  auto geo_mc = add_subcommand(app, "geo-mc",
                               "Monte Carlo geographic search study");
  auto astro = add_subcommand(app, "astro", "telescope placement optimization");
  auto orbit = add_subcommand(app, "orbit", "satellite constellation design");

  CLI11_PARSE(app, argc, argv);

  try {
    if (geo_mc.cmd->parsed()) {
      RunConfig defaults;
      defaults.ga.n_p = 10;
      defaults.ga.n_q = 10;
      return run_geo_mc(resolve_config(geo_mc, std::move(defaults)));
    }
    if (astro.cmd->parsed()) {
      RunConfig defaults;
      defaults.ga.n_p = 12;
      defaults.ga.n_q = 10;
      defaults.ga.max_generations = 150;
      return run_astro(resolve_config(astro, std::move(defaults)));
    }
    if (orbit.cmd->parsed()) {
      RunConfig defaults;
      defaults.ga.n_p = 12;
      defaults.ga.n_q = 20;
      defaults.ga.population_size = 60;
      defaults.ga.max_generations = 60;
      return run_orbit(resolve_config(orbit, std::move(defaults)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
