#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "latga/rng.hpp"

namespace latga {

struct MutationPool;

enum class WrapKind : std::uint8_t {
  clamp,     // values outside [lo, hi] are clamped
  periodic,  // values wrap modulo the span, e.g. longitudes
};

struct GeneDomain {
  double lo = 0.0;
  double hi = 1.0;
  WrapKind wrap = WrapKind::clamp;

  double span() const { return hi - lo; }

  /// Brings a value into the domain according to the wrap rule.
  double apply(double x) const;

  /// Signed difference b - a, shortest-arc for periodic genes.
  double delta(double a, double b) const;
};

using GroupFeasibility = std::function<bool(std::span<const double>)>;

/// Maps (parent alleles, per-gene gamma scale, unit-hypersphere point) to a
/// lattice node, written into `out`. Non-Euclidean gene systems (lat-lon)
/// install their own mapping.
using SamplePointFn = std::function<void(std::span<const double> parent,
                                         std::span<const double> gamma,
                                         std::span<const double> s,
                                         std::span<double> out)>;

/// Genes coupled by a shared constraint, recombined and mutated jointly.
/// The feasibility predicate must be pure. The remaining members wire the
/// group into the variation operators; unset members fall back to Euclidean
/// behavior over the gene domains.
struct LinkedGeneGroup {
  std::vector<std::size_t> indices;
  GroupFeasibility feasible;

  /// Scalar separation measure for equidistant coordinate systems (e.g.
  /// central angle for lat-lon). When unset, the per-gene wrapped absolute
  /// difference is used instead.
  std::function<double(std::span<const double>, std::span<const double>)> scalar_delta;
  SamplePointFn sample_point;

  /// Uniform draw over the group's search domain, for realtime-resampling
  /// mutation. Defaults to a per-gene uniform draw over the gene domains.
  std::function<void(std::span<double>, Rng&)> domain_sample;

  /// Overwrites an infeasible allele vector with the nearest feasible one.
  /// Only groups with a repair hook support the repair-baseline operator.
  std::function<void(std::span<double>)> repair;

  /// Precomputed feasible allele combinations; when set, mutation draws from
  /// the pool (advance sampling) instead of resampling at runtime.
  std::shared_ptr<const MutationPool> pool;
};

enum class LengthClass : std::uint8_t { fixed, variable };

/// Variable-length layout: the genome always stores max_slots * slot_width
/// genes; a per-slot activity flag selects which slots are expressed.
struct SlotLayout {
  std::size_t min_slots = 1;
  std::size_t max_slots = 1;
  std::size_t slot_width = 0;
  double toggle_probability = 0.1;
};

struct GenomeSpec {
  std::vector<GeneDomain> domains;
  std::vector<LinkedGeneGroup> linkage;
  LengthClass length_class = LengthClass::fixed;
  SlotLayout slots;

  std::size_t gene_count() const { return domains.size(); }

  /// Gene indices not covered by any linked group.
  std::vector<std::size_t> free_genes() const;

  /// Slot index owning a gene (variable length only).
  std::size_t slot_of(std::size_t gene_index) const {
    return gene_index / slots.slot_width;
  }

  /// Checks disjoint linkage, index bounds, and slot layout consistency.
  /// Throws std::invalid_argument on violation.
  void validate() const;
};

struct Chromosome {
  std::vector<double> genes;
  std::vector<std::uint8_t> active;  // per slot; empty for fixed length

  bool slot_active(std::size_t slot) const {
    return active.empty() || active[slot] != 0;
  }
  std::size_t active_slot_count() const {
    std::size_t n = 0;
    for (auto f : active) n += (f != 0);
    return active.empty() ? 1 : n;
  }
};

/// True iff every gene index of the group belongs to an active slot.
bool group_active(const GenomeSpec& spec, const Chromosome& c,
                  const LinkedGeneGroup& group);

/// Evaluates every linked-group predicate (all slots). Used by tests and by
/// the death-penalty operator.
bool chromosome_feasible(const GenomeSpec& spec, const Chromosome& c);

std::vector<double> extract_group(const Chromosome& c, const LinkedGeneGroup& group);
void assign_group(Chromosome& c, const LinkedGeneGroup& group,
                  std::span<const double> alleles);

}  // namespace latga
