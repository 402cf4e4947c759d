#include "latga/exports.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latga {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path.string());
  }
  return out;
}

struct FrontRow {
  std::vector<double> objectives;
  std::string text;
};

void write_front(std::ofstream& out, std::vector<FrontRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const FrontRow& a, const FrontRow& b) {
    if (a.objectives != b.objectives) return a.objectives < b.objectives;
    return a.text < b.text;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const FrontRow& a, const FrontRow& b) {
                           return a.text == b.text;
                         }),
             rows.end());
  for (const auto& row : rows) out << row.text << "\n";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

void export_trace_csv(const MonteCarloReport& report,
                      const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "generation,p5,p50,p95\n";
  for (std::size_t g = 0; g < report.percentile_trace.size(); ++g) {
    const auto& p = report.percentile_trace[g];
    out << g << "," << fmt(p[0]) << "," << fmt(p[1]) << "," << fmt(p[2]) << "\n";
  }
}

void export_mc_runs_csv(const MonteCarloReport& report,
                        const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "optimum,run,final_best,generations,converged\n";
  for (const auto& rec : report.runs) {
    out << rec.optimum_index << "," << rec.run_index << "," << fmt(rec.final_best)
        << "," << rec.generations << "," << (rec.converged ? 1 : 0) << "\n";
  }
}

void export_astro_front_csv(std::span<const Individual> front,
                            const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "lat,lon,m_artificial,mean_cloud,station_angle\n";

  std::vector<FrontRow> rows;
  rows.reserve(front.size());
  for (const auto& ind : front) {
    const auto& obj = ind.objectives->values;
    FrontRow row;
    row.objectives = obj;
    row.text = fmt(ind.chromosome.genes[0]) + "," + fmt(ind.chromosome.genes[1]) +
               "," + fmt(-obj[0]) + "," + fmt(obj[1]) + "," + fmt(obj[2]);
    rows.push_back(std::move(row));
  }
  write_front(out, std::move(rows));
}

void export_orbit_front_csv(std::span<const Individual> front,
                            const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "n_sats,a1,inc1,raan1,a2,inc2,raan2,a3,inc3,raan3,access,delta_v\n";

  std::vector<FrontRow> rows;
  rows.reserve(front.size());
  for (const auto& ind : front) {
    const auto& obj = ind.objectives->values;
    const auto& c = ind.chromosome;
    FrontRow row;
    row.objectives = obj;

    std::string text = std::to_string(c.active_slot_count());
    const std::size_t slots = c.active.empty() ? 1 : c.active.size();
    for (std::size_t slot = 0; slot < 3; ++slot) {
      if (slot < slots && c.slot_active(slot)) {
        text += "," + fmt(c.genes[3 * slot]) + "," + fmt(c.genes[3 * slot + 1]) +
                "," + fmt(c.genes[3 * slot + 2]);
      } else {
        text += ",,,";
      }
    }
    text += "," + fmt(-obj[0]) + "," + fmt(obj[1]);
    row.text = std::move(text);
    rows.push_back(std::move(row));
  }
  write_front(out, std::move(rows));
}

std::vector<ObjectiveVector> load_astro_front_objectives(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open front file: " + path.string());
  }
  std::string line;
  std::getline(in, line);  // header
  std::vector<ObjectiveVector> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 5) {
      throw std::runtime_error("astro front: malformed row '" + line + "'");
    }
    ObjectiveVector v;
    v.values = {-std::stod(cells[2]), std::stod(cells[3]), std::stod(cells[4])};
    rows.push_back(std::move(v));
  }
  return rows;
}

std::vector<ObjectiveVector> load_orbit_front_objectives(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open front file: " + path.string());
  }
  std::string line;
  std::getline(in, line);  // header
  std::vector<ObjectiveVector> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 12) {
      throw std::runtime_error("orbit front: malformed row '" + line + "'");
    }
    ObjectiveVector v;
    v.values = {-std::stod(cells[10]), std::stod(cells[11])};
    rows.push_back(std::move(v));
  }
  return rows;
}

bool mutually_nondominated(std::span<const ObjectiveVector> rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i != j && dominates(rows[i], rows[j])) return false;
    }
  }
  return true;
}

}  // namespace latga
