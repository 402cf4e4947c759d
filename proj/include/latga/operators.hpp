#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "latga/chromosome.hpp"
#include "latga/rng.hpp"

namespace latga {

enum class OperatorChoice : std::uint8_t {
  uniform_lattice,
  gauss_lattice,
  repair_baseline,
  death_penalty,
};

const char* to_string(OperatorChoice choice);
OperatorChoice operator_choice_from_string(const std::string& name);

/// Crossover/mutation plugin used by the engine. Fixed-length genomes vary
/// every gene; variable-length genomes vary only slots active in both
/// parents (crossover) or in the individual (mutation), plus per-slot
/// activity toggles.
class VariationOperator {
 public:
  virtual ~VariationOperator() = default;

  virtual std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                                      const Chromosome& b,
                                                      Rng& rng) const = 0;

  virtual void mutate(Chromosome& c, double probability_per_group, Rng& rng) const = 0;

  /// Post-variation constraint handling. Returns true when the chromosome is
  /// feasible on exit (repairing it first when the operator repairs);
  /// false marks the offspring for the death penalty.
  virtual bool finalize(Chromosome& c) const = 0;

  /// Whether offspring are guaranteed feasible (lattice and repair flavors).
  virtual bool constraint_consistent() const = 0;
};

/// Builds the operator for a genome. Throws std::invalid_argument when the
/// repair baseline is requested but some linked group lacks a repair hook,
/// or when lattice parameters are invalid. The genome spec must outlive the
/// returned operator.
std::unique_ptr<VariationOperator> make_variation_operator(OperatorChoice choice,
                                                           const GenomeSpec& genome,
                                                           int n_p, int n_q);

}  // namespace latga
