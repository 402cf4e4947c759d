#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "latga/chromosome.hpp"
#include "latga/rng.hpp"

namespace latga {

/// Precomputed feasible linked-allele combinations for advance-sampling
/// mutation. Preempted entries are manually inserted candidates of interest;
/// they share the uniform selection weight with everything else.
struct MutationPool {
  std::vector<std::string> gene_names;
  std::size_t dim = 0;
  std::vector<double> values;  // entry-major
  std::vector<std::uint8_t> preempted;

  std::size_t size() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const double> entry(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }
  void add(std::span<const double> alleles, bool is_preempted);
};

/// Uniform draw from the pool. Throws std::invalid_argument on an empty pool.
std::vector<double> mutate_advance_sampling(const MutationPool& pool, Rng& rng);

/// Draws from `sampler` until `feasible` accepts, up to max_attempts; on
/// exhaustion the unmutated alleles are returned unchanged.
std::vector<double> mutate_realtime_resample(
    std::span<const double> current,
    const std::function<void(std::span<double>, Rng&)>& sampler,
    const GroupFeasibility& feasible, Rng& rng, int max_attempts = 100);

/// CSV with a header naming the genes plus a trailing "preempted" column.
/// When a feasibility predicate is supplied, every row is validated against
/// it and a violating row raises std::runtime_error.
MutationPool load_mutation_pool_csv(const std::filesystem::path& path,
                                    const GroupFeasibility& feasible = {});
void save_mutation_pool_csv(const MutationPool& pool,
                            const std::filesystem::path& path);

}  // namespace latga
