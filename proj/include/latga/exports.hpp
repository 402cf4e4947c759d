#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "latga/montecarlo.hpp"
#include "latga/nsga2.hpp"

namespace latga {

/// All exports are deterministic: rows are ordered lexicographically by the
/// minimized objective vector, exact duplicate rows are dropped, and doubles
/// are printed with round-trip precision, so re-exporting the same front
/// yields a byte-identical file.

/// Header "generation,p5,p50,p95"; fitness is the central angle in radians.
void export_trace_csv(const MonteCarloReport& report,
                      const std::filesystem::path& path);

/// Header "optimum,run,final_best,generations,converged".
void export_mc_runs_csv(const MonteCarloReport& report,
                        const std::filesystem::path& path);

/// Header "lat,lon,m_artificial,mean_cloud,station_angle". The magnitude
/// column is maximized (darker is better); the loader negates it to recover
/// the minimized objective vector.
void export_astro_front_csv(std::span<const Individual> front,
                            const std::filesystem::path& path);

/// Header "n_sats,a1,inc1,raan1,a2,inc2,raan2,a3,inc3,raan3,access,delta_v"
/// with empty cells for inactive slots. Access is maximized; the loader
/// negates it.
void export_orbit_front_csv(std::span<const Individual> front,
                            const std::filesystem::path& path);

/// Reconstruct minimized objective vectors from exported fronts.
std::vector<ObjectiveVector> load_astro_front_objectives(
    const std::filesystem::path& path);
std::vector<ObjectiveVector> load_orbit_front_objectives(
    const std::filesystem::path& path);

/// Pairwise domination scan; true when no row dominates another.
bool mutually_nondominated(std::span<const ObjectiveVector> rows);

}  // namespace latga
