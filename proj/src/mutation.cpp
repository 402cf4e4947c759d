#include "latga/mutation.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latga {

void MutationPool::add(std::span<const double> alleles, bool is_preempted) {
  if (dim == 0) dim = alleles.size();
  if (alleles.size() != dim) {
    throw std::invalid_argument("MutationPool: entry dimension mismatch");
  }
  values.insert(values.end(), alleles.begin(), alleles.end());
  preempted.push_back(is_preempted ? 1 : 0);
}

std::vector<double> mutate_advance_sampling(const MutationPool& pool, Rng& rng) {
  if (pool.size() == 0) {
    throw std::invalid_argument("mutate_advance_sampling: pool is empty");
  }
  const auto e = pool.entry(rng.uniform_index(pool.size()));
  return {e.begin(), e.end()};
}

std::vector<double> mutate_realtime_resample(
    std::span<const double> current,
    const std::function<void(std::span<double>, Rng&)>& sampler,
    const GroupFeasibility& feasible, Rng& rng, int max_attempts) {
  std::vector<double> candidate(current.size());
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    sampler(candidate, rng);
    if (feasible(candidate)) return candidate;
  }
  return {current.begin(), current.end()};
}

MutationPool load_mutation_pool_csv(const std::filesystem::path& path,
                                    const GroupFeasibility& feasible) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open mutation pool file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("mutation pool file is empty: " + path.string());
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  MutationPool pool;
  {
    std::stringstream header(line);
    std::string col;
    while (std::getline(header, col, ',')) pool.gene_names.push_back(col);
  }
  if (pool.gene_names.size() < 2 || pool.gene_names.back() != "preempted") {
    throw std::runtime_error("mutation pool file: header must end with 'preempted'");
  }
  pool.gene_names.pop_back();
  pool.dim = pool.gene_names.size();

  std::vector<double> row(pool.dim);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    for (std::size_t i = 0; i < pool.dim; ++i) {
      if (!std::getline(ss, cell, ',')) {
        throw std::runtime_error("mutation pool file: short row at line " +
                                 std::to_string(line_no));
      }
      row[i] = std::stod(cell);
    }
    if (!std::getline(ss, cell, ',')) {
      throw std::runtime_error("mutation pool file: missing preempted flag at line " +
                               std::to_string(line_no));
    }
    const bool flag = cell == "1" || cell == "true";
    if (feasible && !feasible(row)) {
      throw std::runtime_error("mutation pool file: infeasible entry at line " +
                               std::to_string(line_no));
    }
    pool.add(row, flag);
  }
  if (pool.size() == 0) {
    throw std::runtime_error("mutation pool file has no entries: " + path.string());
  }
  return pool;
}

void save_mutation_pool_csv(const MutationPool& pool,
                            const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write mutation pool file: " + path.string());
  }
  for (std::size_t i = 0; i < pool.gene_names.size(); ++i) {
    out << pool.gene_names[i] << ",";
  }
  out << "preempted\n";
  char buf[48];
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto e = pool.entry(i);
    for (double x : e) {
      std::snprintf(buf, sizeof(buf), "%.17g,", x);
      out << buf;
    }
    out << (pool.preempted[i] ? "1" : "0") << "\n";
  }
}

}  // namespace latga
