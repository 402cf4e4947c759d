#include "latga/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latga {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::stringstream ss(value);
  T out;
  ss >> out;
  if (ss.fail() || !ss.eof()) {
    throw std::invalid_argument("config: bad value '" + value + "' for key '" + key + "'");
  }
  return out;
}

}  // namespace

void RunConfig::apply(const std::string& key, const std::string& value) {
  if (key == "population_size") {
    ga.population_size = parse_number<std::size_t>(key, value);
  } else if (key == "max_generations") {
    ga.max_generations = parse_number<std::size_t>(key, value);
  } else if (key == "stall_generations") {
    ga.stall_generations = parse_number<std::size_t>(key, value);
  } else if (key == "crossover_probability") {
    ga.crossover_probability = parse_number<double>(key, value);
  } else if (key == "mutation_probability_per_group") {
    ga.mutation_probability_per_group = parse_number<double>(key, value);
  } else if (key == "seed") {
    ga.rng_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "operator") {
    ga.operator_choice = operator_choice_from_string(value);
  } else if (key == "n_p") {
    ga.n_p = parse_number<int>(key, value);
  } else if (key == "n_q") {
    ga.n_q = parse_number<int>(key, value);
  } else if (key == "mask_file") {
    mask_file = value;
  } else if (key == "brightness_file") {
    brightness_file = value;
  } else if (key == "cloud_files") {
    cloud_files.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) cloud_files.push_back(trim(item));
  } else if (key == "cloud_file_prefix") {
    cloud_file_prefix = value;
  } else if (key == "stations_file") {
    stations_file = value;
  } else if (key == "university_file") {
    university_file = value;
  } else if (key == "pool_file") {
    pool_file = value;
  } else if (key == "n_optima") {
    n_optima = parse_number<std::size_t>(key, value);
  } else if (key == "runs_per_optimum") {
    runs_per_optimum = parse_number<std::size_t>(key, value);
  } else if (key == "threads") {
    threads = parse_number<unsigned>(key, value);
  } else if (key == "duration_hours") {
    duration_hours = parse_number<double>(key, value);
  } else if (key == "step_minutes") {
    step_minutes = parse_number<double>(key, value);
  } else if (key == "slot_toggle_probability") {
    slot_toggle_probability = parse_number<double>(key, value);
  } else if (key == "pool_size") {
    pool_size = parse_number<std::size_t>(key, value);
  } else if (key == "out_dir") {
    out_dir = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

std::vector<std::string> RunConfig::monthly_cloud_files() const {
  if (!cloud_files.empty()) return cloud_files;
  std::vector<std::string> paths;
  paths.reserve(12);
  for (int month = 1; month <= 12; ++month) {
    char suffix[16];
    std::snprintf(suffix, sizeof(suffix), "%02d.grid", month);
    paths.push_back(cloud_file_prefix + suffix);
  }
  return paths;
}

void RunConfig::validate() const {
  ga.validate();
  if (n_optima == 0 || runs_per_optimum == 0) {
    throw std::invalid_argument("config: n_optima and runs_per_optimum must be positive");
  }
  if (duration_hours <= 0.0 || step_minutes <= 0.0) {
    throw std::invalid_argument("config: scenario duration and step must be positive");
  }
  if (slot_toggle_probability < 0.0 || slot_toggle_probability > 1.0) {
    throw std::invalid_argument("config: slot_toggle_probability must lie in [0, 1]");
  }
  if (!cloud_files.empty() && cloud_files.size() != 12) {
    throw std::invalid_argument("config: cloud_files must list exactly 12 paths");
  }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path.string());
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config file " + path.string() + ": line " +
                               std::to_string(line_no) + " is not key = value");
    }
    config.apply(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
}

}  // namespace latga
