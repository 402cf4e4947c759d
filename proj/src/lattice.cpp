#include "latga/lattice.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "latga/hypersphere.hpp"
#include "latga/probit.hpp"

namespace latga {

Lattice build_uniform_lattice(std::span<const double> parent_a,
                              std::span<const double> parent_b, int n_p,
                              std::span<const GeneDomain> domains) {
  if (n_p < 2) {
    throw std::invalid_argument("build_uniform_lattice: n_p must be at least 2");
  }
  if (parent_a.size() != parent_b.size() || parent_a.size() != domains.size()) {
    throw std::invalid_argument("build_uniform_lattice: dimension mismatch");
  }
  const std::size_t dim = parent_a.size();
  const std::size_t levels = static_cast<std::size_t>(n_p);

  double node_count = std::pow(static_cast<double>(levels), static_cast<double>(dim));
  if (node_count > 1e6) {
    throw std::invalid_argument("build_uniform_lattice: lattice would exceed 1e6 nodes");
  }

  // Per-gene coordinate arrays; endpoints reproduce the parents exactly,
  // including across periodic seams.
  std::vector<std::vector<double>> coords(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    coords[i].resize(levels);
    const double delta = domains[i].delta(parent_a[i], parent_b[i]);
    for (std::size_t j = 0; j < levels; ++j) {
      if (j == 0) {
        coords[i][j] = parent_a[i];
      } else if (j == levels - 1) {
        coords[i][j] = parent_b[i];
      } else {
        const double frac = static_cast<double>(j) / static_cast<double>(levels - 1);
        coords[i][j] = domains[i].apply(parent_a[i] + frac * delta);
      }
    }
  }

  Lattice lattice;
  lattice.dim = dim;
  lattice.values.reserve(static_cast<std::size_t>(node_count) * dim);

  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> node(dim);
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i) node[i] = coords[i][idx[i]];
    lattice.push_node(node);
    std::size_t i = 0;
    while (i < dim && ++idx[i] == levels) {
      idx[i] = 0;
      ++i;
    }
    if (i == dim) break;
  }
  return lattice;
}

Lattice build_gauss_lattice(std::span<const double> parent_a,
                            std::span<const double> parent_b, int n_p, int n_q,
                            const LinkedGeneGroup& group,
                            std::span<const GeneDomain> domains, Rng& rng) {
  if (n_p < 1 || n_q < 1) {
    throw std::invalid_argument("build_gauss_lattice: n_p and n_q must be >= 1");
  }
  if (parent_a.size() != parent_b.size() || parent_a.size() != domains.size()) {
    throw std::invalid_argument("build_gauss_lattice: dimension mismatch");
  }
  const std::size_t dim = parent_a.size();

  // Separation scale: scalar for equidistant coordinate systems, otherwise
  // the per-gene wrapped absolute difference.
  std::vector<double> delta(dim);
  if (group.scalar_delta) {
    const double d = group.scalar_delta(parent_a, parent_b);
    delta.assign(dim, d);
  } else {
    for (std::size_t i = 0; i < dim; ++i) {
      delta[i] = std::abs(domains[i].delta(parent_a[i], parent_b[i]));
    }
  }

  const UnitHypersphere sphere =
      construct_unit_hypersphere(static_cast<std::size_t>(n_p), dim, rng);

  Lattice lattice;
  lattice.dim = dim;
  lattice.values.reserve((static_cast<std::size_t>(n_p) * n_q + 1) * dim);

  std::vector<double> gamma(dim);
  std::vector<double> node(dim);
  for (int i = 1; i <= n_q; ++i) {
    const double q = static_cast<double>(i) / static_cast<double>(n_q + 1);
    const double scale = std::abs(probit(q)) / 3.0;
    for (std::size_t g = 0; g < dim; ++g) gamma[g] = delta[g] * scale;

    for (int j = 0; j < n_p; ++j) {
      const auto s = sphere.point(static_cast<std::size_t>(j));
      if (group.sample_point) {
        group.sample_point(parent_a, gamma, s, node);
      } else {
        for (std::size_t g = 0; g < dim; ++g) {
          node[g] = domains[g].apply(parent_a[g] + gamma[g] * s[g]);
        }
      }
      lattice.push_node(node);
    }
  }

  // Central anchor: the parent itself, so a feasible node always exists.
  lattice.push_node(parent_a);
  return lattice;
}

std::vector<double> lattice_crossover(std::span<const double> parent_a,
                                      std::span<const double> parent_b,
                                      const LatticeBuilder& builder,
                                      const GroupFeasibility& feasible, Rng& rng) {
  if (parent_a.size() != parent_b.size()) {
    throw std::invalid_argument("lattice_crossover: parent dimension mismatch");
  }
  if (!feasible(parent_a) || !feasible(parent_b)) {
    throw std::invalid_argument("lattice_crossover: parents must be feasible");
  }

  const Lattice lattice = builder(parent_a, parent_b, rng);
  std::vector<std::size_t> order(lattice.node_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);

  for (std::size_t idx : order) {
    const auto node = lattice.node(idx);
    if (feasible(node)) return {node.begin(), node.end()};
  }
  // Unreachable when the builder honors the anchor guarantee.
  return {parent_a.begin(), parent_a.end()};
}

}  // namespace latga
