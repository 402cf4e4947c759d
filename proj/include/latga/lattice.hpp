#pragma once

#include <functional>
#include <span>
#include <vector>

#include "latga/chromosome.hpp"
#include "latga/rng.hpp"

namespace latga {

/// Finite node set spanned by two parents' linked alleles. Nodes are stored
/// node-major; at least one node always equals a parent's alleles, which
/// anchors crossover feasibility.
struct Lattice {
  std::size_t dim = 0;
  std::vector<double> values;

  std::size_t node_count() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const double> node(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }
  void push_node(std::span<const double> node) {
    values.insert(values.end(), node.begin(), node.end());
  }
};

/// Full Cartesian grid of n_p levels per gene between the two parents:
/// exactly n_p^N nodes, with level 1 equal to parent A and level n_p equal
/// to parent B componentwise. Periodic genes interpolate along the shortest
/// arc and wrap back into their domain. Throws std::invalid_argument when
/// n_p < 2.
Lattice build_uniform_lattice(std::span<const double> parent_a,
                              std::span<const double> parent_b, int n_p,
                              std::span<const GeneDomain> domains);

/// Concentric shells centered on parent A: for each quantile i = 1..n_q the
/// shell radius scale is |Delta/3 * probit(i/(n_q+1))| and n_p hypersphere
/// points are mapped through `sample_point` (Euclidean placement plus domain
/// wrap when the group supplies none). Parent A is appended as the central
/// anchor node, giving n_p*n_q + 1 nodes; parent B only sets the scale and
/// is never a node.
Lattice build_gauss_lattice(std::span<const double> parent_a,
                            std::span<const double> parent_b, int n_p, int n_q,
                            const LinkedGeneGroup& group,
                            std::span<const GeneDomain> domains, Rng& rng);

using LatticeBuilder =
    std::function<Lattice(std::span<const double>, std::span<const double>, Rng&)>;

/// Lattice-quantization crossover: builds the lattice, visits its nodes in a
/// uniformly shuffled order, and returns the first feasible node. Both
/// parents must be feasible (std::invalid_argument otherwise); the anchor
/// node guarantees the traversal terminates on a feasible result. Call again
/// with swapped parents for the second offspring.
std::vector<double> lattice_crossover(std::span<const double> parent_a,
                                      std::span<const double> parent_b,
                                      const LatticeBuilder& builder,
                                      const GroupFeasibility& feasible, Rng& rng);

}  // namespace latga
