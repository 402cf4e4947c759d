#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "latga/nsga2.hpp"

namespace latga {

/// Flat configuration shared by the CLI subcommands. Every field maps to a
/// config-file key of the same name, and every key can be overridden by a
/// CLI flag of the same name.
struct RunConfig {
  GAConfig ga;

  // data files
  std::string mask_file = "data/synthetic_mask.poly";
  std::string brightness_file = "data/synthetic_brightness.grid";
  std::vector<std::string> cloud_files;  // 12 paths; empty -> derived below
  std::string cloud_file_prefix = "data/synthetic_cloud_";  // + MM + ".grid"
  std::string stations_file = "data/ground_stations.csv";
  std::string university_file = "data/synthetic_universities.csv";
  std::string pool_file;  // empty -> generated from the seed

  // Monte Carlo study
  std::size_t n_optima = 50;
  std::size_t runs_per_optimum = 2;
  unsigned threads = 0;

  // orbit scenario
  double duration_hours = 168.0;
  double step_minutes = 1.0;
  double slot_toggle_probability = 0.1;
  std::size_t pool_size = 1000;

  std::string out_dir = "out";

  /// Applies one key=value setting. Throws std::invalid_argument for an
  /// unknown key or an unparsable value.
  void apply(const std::string& key, const std::string& value);

  /// The 12 monthly cloud paths: cloud_files when set, otherwise
  /// cloud_file_prefix + "01".."12" + ".grid".
  std::vector<std::string> monthly_cloud_files() const;

  void validate() const;
};

/// Parses a flat key=value file ('#' comments, blank lines ignored) into the
/// config. Later lines override earlier ones.
void load_config_file(RunConfig& config, const std::filesystem::path& path);

}  // namespace latga
