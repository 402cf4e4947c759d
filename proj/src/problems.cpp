#include "latga/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace latga {

namespace {

GeoPoint point_from(std::span<const double> alleles) {
  return {alleles[0], alleles[1]};
}

GenomeSpec make_latlon_genome(std::shared_ptr<const LandMask> mask) {
  GenomeSpec genome;
  genome.domains = {
      {-90.0, 90.0, WrapKind::clamp},     // latitude
      {-180.0, 180.0, WrapKind::periodic} // longitude
  };

  const BoundingBox box = mask->bounding_box();
  LinkedGeneGroup group;
  group.indices = {0, 1};
  group.feasible = [mask](std::span<const double> a) {
    return contains(*mask, point_from(a));
  };
  group.scalar_delta = [](std::span<const double> a, std::span<const double> b) {
    return haversine_angle(point_from(a), point_from(b));
  };
  group.sample_point = [](std::span<const double> parent, std::span<const double> gamma,
                          std::span<const double> s, std::span<double> out) {
    const GeoPoint p = sample_point_latlon(point_from(parent), gamma[0], s[0], s[1]);
    out[0] = p.lat;
    out[1] = p.lon;
  };
  group.domain_sample = [box](std::span<double> out, Rng& rng) {
    out[0] = rng.uniform(box.lat_min, box.lat_max);
    out[1] = rng.uniform(box.lon_min, box.lon_max);
  };
  group.repair = [mask](std::span<double> a) {
    const GeoPoint repaired = repair_to_boundary(point_from(a), *mask);
    a[0] = repaired.lat;
    a[1] = repaired.lon;
  };
  genome.linkage.push_back(std::move(group));
  return genome;
}

std::function<Chromosome(Rng&)> make_latlon_initializer(
    std::shared_ptr<const LandMask> mask) {
  return [mask](Rng& rng) {
    const GeoPoint p = sample_feasible_point(*mask, rng);
    Chromosome c;
    c.genes = {p.lat, p.lon};
    return c;
  };
}

}  // namespace

GeoPoint sample_feasible_point(const LandMask& mask, Rng& rng, int max_attempts) {
  const BoundingBox box = mask.bounding_box();
  for (int i = 0; i < max_attempts; ++i) {
    const GeoPoint p{rng.uniform(box.lat_min, box.lat_max),
                     rng.uniform(box.lon_min, box.lon_max)};
    if (contains(mask, p)) return p;
  }
  throw std::runtime_error("sample_feasible_point: mask has no sampleable feasible area");
}

ProblemDefinition make_geo_search_problem(std::shared_ptr<const LandMask> mask,
                                          GeoPoint optimum) {
  ProblemDefinition problem;
  problem.name = "geo-search";
  problem.objective_count = 1;
  problem.genome = make_latlon_genome(mask);
  problem.initialize = make_latlon_initializer(mask);
  problem.evaluate = [optimum](const Chromosome& c) {
    ObjectiveVector v;
    v.values = {haversine_angle({c.genes[0], c.genes[1]}, optimum)};
    return v;
  };
  return problem;
}

ObjectiveVector astro_objectives(const AstroData& data, GeoPoint p) {
  ObjectiveVector v;
  const double magnitude = luminance_to_brightness(interpolate(data.brightness, p));
  v.values = {
      -magnitude,  // darkness is maximized
      mean_cloud_cover(data.cloud, p),
      min_station_angle(p, data.stations),
  };
  return v;
}

ProblemDefinition make_astro_problem(std::shared_ptr<const AstroData> data) {
  if (!data || !data->mask) {
    throw std::invalid_argument("make_astro_problem: missing data");
  }
  if (data->cloud.size() != 12) {
    throw std::invalid_argument("make_astro_problem: exactly 12 cloud fields required");
  }
  ProblemDefinition problem;
  problem.name = "astro";
  problem.objective_count = 3;
  problem.genome = make_latlon_genome(data->mask);
  problem.initialize = make_latlon_initializer(data->mask);
  problem.evaluate = [data](const Chromosome& c) {
    return astro_objectives(*data, {c.genes[0], c.genes[1]});
  };
  return problem;
}

ProblemDefinition make_orbit_problem(std::shared_ptr<const OrbitProblemConfig> cfg) {
  if (!cfg || !cfg->pool || cfg->pool->size() == 0) {
    throw std::invalid_argument("make_orbit_problem: a nonempty mutation pool is required");
  }
  if (cfg->scenario.stations.entries.empty()) {
    throw std::invalid_argument("make_orbit_problem: scenario needs ground stations");
  }

  constexpr std::size_t kMaxSlots = 3;
  constexpr double kAltLo = 350.0;
  constexpr double kAltHi = 36500.0;
  const double a_lo = constants::kEarthRadius + kAltLo;
  const double a_hi = constants::kEarthRadius + kAltHi;

  ProblemDefinition problem;
  problem.name = "orbit";
  problem.objective_count = 2;

  GenomeSpec& genome = problem.genome;
  genome.length_class = LengthClass::variable;
  genome.slots = {1, kMaxSlots, 3, cfg->slot_toggle_probability};
  for (std::size_t slot = 0; slot < kMaxSlots; ++slot) {
    genome.domains.push_back({a_lo, a_hi, WrapKind::clamp});        // a
    genome.domains.push_back({0.0, 60.0, WrapKind::clamp});         // inc
    genome.domains.push_back({-180.0, 180.0, WrapKind::periodic});  // raan

    LinkedGeneGroup group;
    group.indices = {3 * slot, 3 * slot + 1};
    group.feasible = [](std::span<const double> alleles) {
      return is_feasible_orbit(alleles[0] - constants::kEarthRadius, alleles[1]);
    };
    group.pool = cfg->pool;
    genome.linkage.push_back(std::move(group));
  }

  problem.initialize = [cfg](Rng& rng) {
    Chromosome c;
    c.genes.resize(3 * kMaxSlots);
    c.active.assign(kMaxSlots, 0);
    for (std::size_t slot = 0; slot < kMaxSlots; ++slot) {
      const auto entry = cfg->pool->entry(rng.uniform_index(cfg->pool->size()));
      c.genes[3 * slot] = entry[0];
      c.genes[3 * slot + 1] = entry[1];
      c.genes[3 * slot + 2] = rng.uniform(-180.0, 180.0);
    }
    const std::size_t n_active = 1 + rng.uniform_index(kMaxSlots);
    std::vector<std::size_t> order = {0, 1, 2};
    rng.shuffle(order);
    for (std::size_t k = 0; k < n_active; ++k) c.active[order[k]] = 1;
    return c;
  };

  problem.evaluate = [cfg](const Chromosome& c) {
    Constellation constellation;
    for (std::size_t slot = 0; slot < kMaxSlots; ++slot) {
      if (!c.slot_active(slot)) continue;
      constellation.orbits.push_back(
          {c.genes[3 * slot], c.genes[3 * slot + 1], c.genes[3 * slot + 2]});
    }
    ObjectiveVector v;
    v.values = {-total_access(constellation, cfg->scenario),
                total_delta_v(constellation)};
    return v;
  };
  return problem;
}

MutationPool generate_orbit_pool(std::size_t n_random, Rng& rng) {
  MutationPool pool;
  pool.gene_names = {"a", "inc"};
  pool.dim = 2;

  constexpr double kAltLo = 350.0;
  constexpr double kAltHi = 36500.0;
  for (std::size_t k = 0; k < n_random; ++k) {
    for (;;) {
      const double h = rng.uniform(kAltLo, kAltHi);
      const double inc = rng.uniform(0.0, 60.0);
      if (is_feasible_orbit(h, inc)) {
        const double entry[2] = {constants::kEarthRadius + h, inc};
        pool.add(entry, false);
        break;
      }
    }
  }

  const double preempted[][2] = {
      {6828.0, 53.0},   // mock Starlink
      {16763.0, 52.0},  // semi-synchronous, 4 revs/day
      {20307.0, 57.0},  // semi-synchronous, 3 revs/day
      {26560.0, 55.0},  // mock GPS
      {42164.0, 0.0},   // standard GEO
  };
  for (const auto& row : preempted) pool.add(row, true);
  return pool;
}

}  // namespace latga
