#pragma once

#include <memory>
#include <vector>

#include "latga/astro.hpp"
#include "latga/grid.hpp"
#include "latga/landmask.hpp"
#include "latga/mutation.hpp"
#include "latga/orbit.hpp"
#include "latga/problem.hpp"

namespace latga {

/// Uniform rejection sample over the mask bounding box.
/// Throws std::runtime_error when no feasible point is found within
/// max_attempts (zero feasible area).
GeoPoint sample_feasible_point(const LandMask& mask, Rng& rng,
                               int max_attempts = 20000);

/// Single-objective geographic search: minimize the central angle (radians)
/// to `optimum`, constrained to the land mask. The (lat, lon) pair forms one
/// linked group with a scalar central-angle separation, the lat-lon sample
/// point, a bounding-box mutation sampler, and nearest-boundary repair.
ProblemDefinition make_geo_search_problem(std::shared_ptr<const LandMask> mask,
                                          GeoPoint optimum);

struct AstroData {
  std::shared_ptr<const LandMask> mask;
  GriddedField brightness;          // artificial zenith luminance, mcd/m^2
  std::vector<GriddedField> cloud;  // 12 monthly cloud-fraction fields
  StationList stations;             // proximity targets
};

/// Telescope placement: maximize sky darkness (negated magnitudes), minimize
/// mean cloud cover and the minimum station angle, constrained to land.
/// The supplied grids must cover the mask bounding box.
ProblemDefinition make_astro_problem(std::shared_ptr<const AstroData> data);

/// Objective vector for a single location, in the astro problem's minimized
/// convention: (-brightness magnitude, mean cloud, station angle).
ObjectiveVector astro_objectives(const AstroData& data, GeoPoint p);

struct OrbitProblemConfig {
  Scenario scenario;
  std::shared_ptr<const MutationPool> pool;  // feasible (a, inc) pairs
  double slot_toggle_probability = 0.1;
};

/// Constellation design over a variable-length chromosome of 1-3 slots, each
/// slot holding (a, inc, raan). (a, inc) pairs are linked by the admissible
/// orbit bands and mutate by advance sampling from the pool; raan is a free
/// periodic gene. Objectives: (-total access, total delta-v).
ProblemDefinition make_orbit_problem(std::shared_ptr<const OrbitProblemConfig> cfg);

/// n_random admissible (a, inc) samples plus five preempted entries covering
/// mock Starlink, the 4- and 3-rev/day semi-synchronous bands, mock GPS, and
/// standard GEO.
MutationPool generate_orbit_pool(std::size_t n_random, Rng& rng);

}  // namespace latga
