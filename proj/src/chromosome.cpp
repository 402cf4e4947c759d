#include "latga/chromosome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latga {

double GeneDomain::apply(double x) const {
  if (wrap == WrapKind::periodic) {
    // (lo, hi] convention: the seam maps onto hi.
    const double s = span();
    double y = std::fmod(x - lo, s);
    if (y <= 0.0) y += s;
    return lo + y;
  }
  return std::clamp(x, lo, hi);
}

double GeneDomain::delta(double a, double b) const {
  double d = b - a;
  if (wrap == WrapKind::periodic) {
    const double s = span();
    d = std::fmod(d, s);
    if (d > 0.5 * s) d -= s;
    if (d <= -0.5 * s) d += s;
  }
  return d;
}

std::vector<std::size_t> GenomeSpec::free_genes() const {
  std::vector<bool> linked(gene_count(), false);
  for (const auto& group : linkage) {
    for (std::size_t idx : group.indices) linked[idx] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < linked.size(); ++i) {
    if (!linked[i]) out.push_back(i);
  }
  return out;
}

void GenomeSpec::validate() const {
  if (domains.empty()) {
    throw std::invalid_argument("GenomeSpec: no genes declared");
  }
  std::vector<bool> seen(gene_count(), false);
  for (const auto& group : linkage) {
    if (group.indices.empty()) {
      throw std::invalid_argument("GenomeSpec: linked group with no indices");
    }
    if (!group.feasible) {
      throw std::invalid_argument("GenomeSpec: linked group without feasibility predicate");
    }
    for (std::size_t idx : group.indices) {
      if (idx >= gene_count()) {
        throw std::invalid_argument("GenomeSpec: linked gene index out of range");
      }
      if (seen[idx]) {
        throw std::invalid_argument("GenomeSpec: linked groups must be disjoint");
      }
      seen[idx] = true;
    }
  }
  if (length_class == LengthClass::variable) {
    if (slots.slot_width == 0 || slots.max_slots == 0 ||
        slots.min_slots == 0 || slots.min_slots > slots.max_slots) {
      throw std::invalid_argument("GenomeSpec: bad slot layout");
    }
    if (gene_count() != slots.max_slots * slots.slot_width) {
      throw std::invalid_argument(
          "GenomeSpec: variable-length genome must hold max_slots * slot_width genes");
    }
    // No linked group may straddle a slot boundary.
    for (const auto& group : linkage) {
      const std::size_t slot = slot_of(group.indices.front());
      for (std::size_t idx : group.indices) {
        if (slot_of(idx) != slot) {
          throw std::invalid_argument("GenomeSpec: linked group crosses slot boundary");
        }
      }
    }
  }
}

bool group_active(const GenomeSpec& spec, const Chromosome& c,
                  const LinkedGeneGroup& group) {
  if (spec.length_class == LengthClass::fixed || c.active.empty()) return true;
  return c.slot_active(spec.slot_of(group.indices.front()));
}

bool chromosome_feasible(const GenomeSpec& spec, const Chromosome& c) {
  for (const auto& group : spec.linkage) {
    const auto alleles = extract_group(c, group);
    if (!group.feasible(alleles)) return false;
  }
  return true;
}

std::vector<double> extract_group(const Chromosome& c, const LinkedGeneGroup& group) {
  std::vector<double> out;
  out.reserve(group.indices.size());
  for (std::size_t idx : group.indices) out.push_back(c.genes[idx]);
  return out;
}

void assign_group(Chromosome& c, const LinkedGeneGroup& group,
                  std::span<const double> alleles) {
  for (std::size_t k = 0; k < group.indices.size(); ++k) {
    c.genes[group.indices[k]] = alleles[k];
  }
}

}  // namespace latga
