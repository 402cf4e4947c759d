#include "latga/operators.hpp"

#include <stdexcept>
#include <string>

#include "latga/lattice.hpp"
#include "latga/mutation.hpp"

namespace latga {

const char* to_string(OperatorChoice choice) {
  switch (choice) {
    case OperatorChoice::uniform_lattice: return "uniform_lattice";
    case OperatorChoice::gauss_lattice: return "gauss_lattice";
    case OperatorChoice::repair_baseline: return "repair_baseline";
    case OperatorChoice::death_penalty: return "death_penalty";
  }
  return "unknown";
}

OperatorChoice operator_choice_from_string(const std::string& name) {
  if (name == "uniform_lattice") return OperatorChoice::uniform_lattice;
  if (name == "gauss_lattice") return OperatorChoice::gauss_lattice;
  if (name == "repair_baseline") return OperatorChoice::repair_baseline;
  if (name == "death_penalty") return OperatorChoice::death_penalty;
  throw std::invalid_argument("unknown operator: " + name);
}

namespace {

void toggle_slots(const GenomeSpec& spec, Chromosome& c, Rng& rng) {
  if (spec.length_class != LengthClass::variable) return;
  for (std::size_t slot = 0; slot < c.active.size(); ++slot) {
    if (!rng.bernoulli(spec.slots.toggle_probability)) continue;
    const std::size_t n_active = c.active_slot_count();
    if (c.active[slot]) {
      if (n_active > spec.slots.min_slots) c.active[slot] = 0;
    } else {
      if (n_active < spec.slots.max_slots) c.active[slot] = 1;
    }
  }
}

void default_domain_sample(const GenomeSpec& spec, const LinkedGeneGroup& group,
                           std::span<double> out, Rng& rng) {
  for (std::size_t k = 0; k < group.indices.size(); ++k) {
    const GeneDomain& d = spec.domains[group.indices[k]];
    out[k] = rng.uniform(d.lo, d.hi);
  }
}

/// Lattice-quantization crossover with constraint-consistent mutation.
class LatticeVariation final : public VariationOperator {
 public:
  LatticeVariation(OperatorChoice kind, const GenomeSpec& genome, int n_p, int n_q)
      : genome_(genome), kind_(kind), n_p_(n_p), n_q_(n_q) {
    if (n_p_ < 2) {
      throw std::invalid_argument("lattice operator requires n_p >= 2");
    }
    if (kind_ == OperatorChoice::gauss_lattice && n_q_ < 1) {
      throw std::invalid_argument("gauss lattice operator requires n_q >= 1");
    }
    // Free genes are handled as singleton groups with a trivially true
    // predicate, so every gene flows through the same lattice machinery.
    groups_ = genome.linkage;
    for (std::size_t g : genome.free_genes()) {
      LinkedGeneGroup single;
      single.indices = {g};
      single.feasible = [](std::span<const double>) { return true; };
      groups_.push_back(std::move(single));
    }
    for (const auto& group : groups_) {
      std::vector<GeneDomain> d;
      d.reserve(group.indices.size());
      for (std::size_t idx : group.indices) d.push_back(genome.domains[idx]);
      group_domains_.push_back(std::move(d));
    }
  }

  std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                              Rng& rng) const override {
    Chromosome c1 = a;
    Chromosome c2 = b;
    for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
      const auto& group = groups_[gi];
      if (!group_active(genome_, a, group) || !group_active(genome_, b, group)) continue;

      const auto alleles_a = extract_group(a, group);
      const auto alleles_b = extract_group(b, group);
      const auto builder = make_builder(gi);
      const auto off_a = lattice_crossover(alleles_a, alleles_b, builder, group.feasible, rng);
      const auto off_b = lattice_crossover(alleles_b, alleles_a, builder, group.feasible, rng);
      assign_group(c1, group, off_a);
      assign_group(c2, group, off_b);
    }
    return {std::move(c1), std::move(c2)};
  }

  void mutate(Chromosome& c, double probability_per_group, Rng& rng) const override {
    for (const auto& group : groups_) {
      if (!group_active(genome_, c, group)) continue;
      if (!rng.bernoulli(probability_per_group)) continue;

      std::vector<double> fresh;
      if (group.pool) {
        fresh = mutate_advance_sampling(*group.pool, rng);
      } else {
        const auto current = extract_group(c, group);
        std::function<void(std::span<double>, Rng&)> sampler = group.domain_sample;
        if (!sampler) {
          sampler = [this, &group](std::span<double> out, Rng& r) {
            default_domain_sample(genome_, group, out, r);
          };
        }
        fresh = mutate_realtime_resample(current, sampler, group.feasible, rng);
      }
      assign_group(c, group, fresh);
    }
    toggle_slots(genome_, c, rng);
  }

  bool finalize(Chromosome& c) const override { return chromosome_feasible(genome_, c); }

  bool constraint_consistent() const override { return true; }

 private:
  LatticeBuilder make_builder(std::size_t group_index) const {
    const auto& group = groups_[group_index];
    const auto& domains = group_domains_[group_index];
    if (kind_ == OperatorChoice::uniform_lattice) {
      return [this, &domains](std::span<const double> a, std::span<const double> b,
                              Rng&) { return build_uniform_lattice(a, b, n_p_, domains); };
    }
    return [this, &group, &domains](std::span<const double> a,
                                    std::span<const double> b, Rng& rng) {
      return build_gauss_lattice(a, b, n_p_, n_q_, group, domains, rng);
    };
  }

  const GenomeSpec& genome_;
  OperatorChoice kind_;
  int n_p_;
  int n_q_;
  std::vector<LinkedGeneGroup> groups_;
  std::vector<std::vector<GeneDomain>> group_domains_;
};

/// Gene-wise exchange crossover and uniform resampling mutation, followed by
/// either nearest-feasible repair or the death penalty.
class TraditionalVariation final : public VariationOperator {
 public:
  TraditionalVariation(OperatorChoice kind, const GenomeSpec& genome)
      : genome_(genome), repair_(kind == OperatorChoice::repair_baseline) {
    if (repair_) {
      for (const auto& group : genome.linkage) {
        if (!group.repair) {
          throw std::invalid_argument(
              "repair_baseline operator requires a repair hook on every linked group");
        }
      }
    }
  }

  std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b,
                                              Rng& rng) const override {
    Chromosome c1 = a;
    Chromosome c2 = b;
    for (std::size_t g = 0; g < genome_.gene_count(); ++g) {
      if (!gene_active(a, g) || !gene_active(b, g)) continue;
      if (rng.bernoulli(0.5)) {
        c1.genes[g] = b.genes[g];
        c2.genes[g] = a.genes[g];
      }
    }
    return {std::move(c1), std::move(c2)};
  }

  void mutate(Chromosome& c, double probability_per_group, Rng& rng) const override {
    for (std::size_t g = 0; g < genome_.gene_count(); ++g) {
      if (!gene_active(c, g)) continue;
      if (!rng.bernoulli(probability_per_group)) continue;
      const GeneDomain& d = genome_.domains[g];
      c.genes[g] = rng.uniform(d.lo, d.hi);
    }
    toggle_slots(genome_, c, rng);
  }

  bool finalize(Chromosome& c) const override {
    if (!repair_) return chromosome_feasible(genome_, c);
    for (const auto& group : genome_.linkage) {
      auto alleles = extract_group(c, group);
      if (!group.feasible(alleles)) {
        group.repair(alleles);
        assign_group(c, group, alleles);
      }
    }
    return true;
  }

  bool constraint_consistent() const override { return repair_; }

 private:
  bool gene_active(const Chromosome& c, std::size_t gene) const {
    if (genome_.length_class == LengthClass::fixed || c.active.empty()) return true;
    return c.slot_active(genome_.slot_of(gene));
  }

  const GenomeSpec& genome_;
  bool repair_;
};

}  // namespace

std::unique_ptr<VariationOperator> make_variation_operator(OperatorChoice choice,
                                                           const GenomeSpec& genome,
                                                           int n_p, int n_q) {
  switch (choice) {
    case OperatorChoice::uniform_lattice:
    case OperatorChoice::gauss_lattice:
      return std::make_unique<LatticeVariation>(choice, genome, n_p, n_q);
    case OperatorChoice::repair_baseline:
    case OperatorChoice::death_penalty:
      return std::make_unique<TraditionalVariation>(choice, genome);
  }
  throw std::invalid_argument("make_variation_operator: unknown operator choice");
}

}  // namespace latga
