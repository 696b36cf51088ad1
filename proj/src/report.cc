// Copyright 2026 The stationplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "stationplan/report.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stationplan/errors.h"
#include "stationplan/ingest.h"

namespace stationplan {
namespace {

using Json = nlohmann::ordered_json;

std::string number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string_view lean_name(Lean lean, std::string_view below, std::string_view above) {
  switch (lean) {
    case Lean::kBelow: return below;
    case Lean::kAbove: return above;
    case Lean::kEven: break;
  }
  return "even";
}

Lean compare(double a, double b) {
  if (a < b) return Lean::kBelow;
  if (a > b) return Lean::kAbove;
  return Lean::kEven;
}

std::string summary_line(const DiffSummary& s) {
  return "same=" + std::to_string(s.same) + " more=" + std::to_string(s.more) +
         " fewer=" + std::to_string(s.fewer);
}

Json diff_json(const AllocationDiff& d, DiffView view) {
  const SkewReading sk = skew(d);
  Json j;
  j["summary"] = {{"same", d.summary.same}, {"more", d.summary.more}, {"fewer", d.summary.fewer}};
  j["buildings"] = d.rows.size();
  j["skew"] = {{"mean", sk.mean},
               {"median", sk.median},
               {"mean_vs_median", lean_name(sk.mean_vs_median, "below", "above")},
               {"more_vs_fewer", lean_name(sk.more_vs_fewer, "fewer", "more")}};
  Json hist = Json::array();
  for (const auto& [delta, count] : d.histogram) hist.push_back({{"delta", delta}, {"count", count}});
  j["histogram"] = std::move(hist);
  if (view == DiffView::kTable) {
    Json rows = Json::array();
    for (const auto& r : d.rows) {
      rows.push_back({{"building_id", r.building.str()},
                      {"baseline", r.baseline},
                      {"candidate", r.candidate},
                      {"delta", r.delta}});
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

// Bars are one '#' per building.
void ascii_histogram(std::ostream& out, const std::map<Count, std::size_t>& histogram) {
  std::size_t width = 5;
  for (const auto& [delta, count] : histogram) {
    width = std::max(width, std::to_string(delta).size());
  }
  out << std::setw(static_cast<int>(width)) << "delta" << " | buildings\n";
  for (const auto& [delta, count] : histogram) {
    out << std::setw(static_cast<int>(width)) << delta << " | " << std::string(count, '#') << ' '
        << count << '\n';
  }
}

Json sites_json(const CoverageInstance& instance, const std::vector<std::size_t>& sites) {
  Json arr = Json::array();
  for (std::size_t j : sites) arr.push_back({{"index", j}, {"site_id", instance.sites()[j]}});
  return arr;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

Count AllocationDiff::delta(const BuildingId& id) const {
  for (const auto& r : rows) {
    if (r.building == id) return r.delta;
  }
  throw LookupError("diff has no building '" + id.str() + "'");
}

AllocationDiff diff(const BuildingAllocation& candidate, const BuildingAllocation& baseline) {
  std::set<std::string> only_baseline;
  std::set<std::string> only_candidate;
  for (const auto& bc : baseline.per_building()) {
    if (!candidate.find(bc.building)) only_baseline.insert(bc.building.str());
  }
  for (const auto& bc : candidate.per_building()) {
    if (!baseline.find(bc.building)) only_candidate.insert(bc.building.str());
  }
  if (!only_baseline.empty() || !only_candidate.empty()) {
    std::string msg = "allocations cover different buildings;";
    auto list = [&](std::string_view what, const std::set<std::string>& ids) {
      if (ids.empty()) return;
      msg += std::string(" only in ") + std::string(what) + ":";
      for (const auto& id : ids) msg += " '" + id + "'";
    };
    list("baseline", only_baseline);
    list("candidate", only_candidate);
    throw DataError(msg);
  }

  AllocationDiff d;
  d.rows.reserve(baseline.size());
  for (const auto& bc : baseline.per_building()) {
    const Count cand = candidate.stations(bc.building);
    const Count delta = cand - bc.stations;
    d.rows.push_back({bc.building, bc.stations, cand, delta});
    ++d.histogram[delta];
    if (delta == 0) {
      ++d.summary.same;
    } else if (delta > 0) {
      ++d.summary.more;
    } else {
      ++d.summary.fewer;
    }
  }
  return d;
}

SkewReading skew(const AllocationDiff& d) {
  SkewReading s;
  s.more_vs_fewer = compare(static_cast<double>(d.summary.more), static_cast<double>(d.summary.fewer));
  if (d.rows.empty()) return s;
  std::vector<Count> deltas;
  deltas.reserve(d.rows.size());
  Count sum = 0;
  for (const auto& r : d.rows) {
    deltas.push_back(r.delta);
    sum += r.delta;
  }
  std::sort(deltas.begin(), deltas.end());
  const std::size_t n = deltas.size();
  s.mean = static_cast<double>(sum) / static_cast<double>(n);
  s.median = n % 2 ? static_cast<double>(deltas[n / 2])
                   : (static_cast<double>(deltas[n / 2 - 1]) + static_cast<double>(deltas[n / 2])) / 2.0;
  // Compare on the exact scale to avoid rounding in the mean.
  const Count scaled_median = n % 2 ? 2 * deltas[n / 2] : deltas[n / 2 - 1] + deltas[n / 2];
  s.mean_vs_median = compare(static_cast<double>(2 * sum),
                             static_cast<double>(scaled_median) * static_cast<double>(n));
  return s;
}

SensitivityReport sensitivity(const Allocator& allocator,
                              const std::vector<DemandSnapshot>& snapshots,
                              const CampusRegistry& registry) {
  if (snapshots.size() < 2) {
    throw ArgumentError("sensitivity needs at least two snapshots, got " +
                        std::to_string(snapshots.size()));
  }
  for (const auto& s : snapshots) s.require_bound_to(registry);

  std::vector<BuildingAllocation> runs;
  runs.reserve(snapshots.size());
  for (const auto& s : snapshots) runs.push_back(allocator(s));

  SensitivityReport report;
  for (const auto& s : snapshots) report.snapshots.push_back(s.label());
  for (const auto& rec : registry.buildings()) {
    Count lo = runs.front().stations(rec.id);
    Count hi = lo;
    for (const auto& run : runs) {
      const Count v = run.stations(rec.id);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    report.buildings.push_back({rec.id, lo, hi, hi - lo});
    if (lo == hi) ++report.agreeing;
    report.max_abs_delta = std::max(report.max_abs_delta, hi - lo);
  }
  report.agreement_fraction =
      registry.empty() ? 1.0
                       : static_cast<double>(report.agreeing) / static_cast<double>(registry.size());
  return report;
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw ArgumentError("unknown format '" + std::string(name) + "'; use text, csv or json");
}

std::string render(const AllocationDiff& d, Format format, DiffView view) {
  std::ostringstream out;
  switch (format) {
    case Format::kCsv:
      if (view == DiffView::kTable) {
        out << "building_id,baseline,candidate,delta\n";
        for (const auto& r : d.rows) {
          out << r.building.str() << ',' << r.baseline << ',' << r.candidate << ',' << r.delta
              << '\n';
        }
      } else {
        out << "delta,count\n";
        for (const auto& [delta, count] : d.histogram) out << delta << ',' << count << '\n';
      }
      break;
    case Format::kJson:
      out << diff_json(d, view).dump(2) << '\n';
      break;
    case Format::kText: {
      const SkewReading sk = skew(d);
      out << summary_line(d.summary) << '\n';
      out << "buildings=" << d.rows.size() << " mean_delta=" << number(sk.mean)
          << " median_delta=" << number(sk.median)
          << " mean_vs_median=" << lean_name(sk.mean_vs_median, "below", "above")
          << " more_vs_fewer=" << lean_name(sk.more_vs_fewer, "fewer", "more") << '\n';
      ascii_histogram(out, d.histogram);
      if (view == DiffView::kTable) {
        out << '\n';
        for (const auto& r : d.rows) {
          out << r.building.str() << ' ' << r.baseline << " -> " << r.candidate << " ("
              << (r.delta > 0 ? "+" : "") << r.delta << ")\n";
        }
      }
      break;
    }
  }
  return out.str();
}

std::string render(const SensitivityReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kCsv:
      out << "building_id,min_alloc,max_alloc,spread\n";
      for (const auto& b : report.buildings) {
        out << b.building.str() << ',' << b.min_alloc << ',' << b.max_alloc << ',' << b.spread
            << '\n';
      }
      break;
    case Format::kJson: {
      Json j;
      j["snapshots"] = report.snapshots;
      j["agreeing"] = report.agreeing;
      j["buildings_total"] = report.buildings.size();
      j["agreement_fraction"] = report.agreement_fraction;
      j["max_abs_delta"] = report.max_abs_delta;
      Json rows = Json::array();
      for (const auto& b : report.buildings) {
        rows.push_back({{"building_id", b.building.str()},
                        {"min_alloc", b.min_alloc},
                        {"max_alloc", b.max_alloc},
                        {"spread", b.spread}});
      }
      j["buildings"] = std::move(rows);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kText: {
      out << "snapshots:";
      for (const auto& s : report.snapshots) out << ' ' << s;
      out << '\n';
      out << "agreement=" << report.agreeing << '/' << report.buildings.size()
          << " fraction=" << number(report.agreement_fraction)
          << " max_abs_delta=" << report.max_abs_delta << '\n';
      for (const auto& b : report.buildings) {
        if (b.spread == 0) continue;
        out << b.building.str() << ' ' << b.min_alloc << ".." << b.max_alloc << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string render(const BuildingAllocation& allocation, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kCsv:
      write_allocation(out, allocation);
      break;
    case Format::kJson: {
      Json j;
      j["model"] = to_string(allocation.model_tag());
      j["total"] = allocation.total();
      Json rows = Json::array();
      for (const auto& bc : allocation.per_building()) {
        rows.push_back({{"building_id", bc.building.str()}, {"stations", bc.stations}});
      }
      j["buildings"] = std::move(rows);
      if (allocation.has_per_door()) {
        Json doors = Json::array();
        for (const auto& da : *allocation.per_door()) {
          doors.push_back({{"building_id", da.door.building.str()},
                           {"door_index", da.door.door_index},
                           {"door_label", da.label},
                           {"stations", da.stations}});
        }
        j["doors"] = std::move(doors);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kText: {
      out << "model=" << to_string(allocation.model_tag()) << " total=" << allocation.total()
          << " buildings=" << allocation.size() << '\n';
      for (const auto& bc : allocation.per_building()) {
        out << bc.building.str() << ' ' << bc.stations;
        if (allocation.has_per_door()) {
          std::string doors;
          for (const auto& da : *allocation.per_door()) {
            if (da.door.building == bc.building && da.stations > 0) {
              doors += (doors.empty() ? "" : " ") + da.label + "=" + std::to_string(da.stations);
            }
          }
          out << " [" << doors << ']';
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string render(const CoverageInstance& instance, const CoverageSolution& solution,
                   Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kCsv:
      out << "site_index,site_id\n";
      for (std::size_t j : solution.chosen_sites) out << j << ',' << instance.sites()[j] << '\n';
      break;
    case Format::kJson: {
      Json j;
      j["objective"] = solution.objective;
      j["classrooms"] = instance.classroom_count();
      j["chosen_sites"] = sites_json(instance, solution.chosen_sites);
      Json covered = Json::array();
      for (std::size_t c : solution.covered_classrooms) {
        covered.push_back({{"index", c}, {"classroom_id", instance.classrooms()[c]}});
      }
      j["covered_classrooms"] = std::move(covered);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kText:
      out << "objective=" << solution.objective << " classrooms=" << instance.classroom_count()
          << '\n';
      out << "sites: " << index_list(solution.chosen_sites) << '\n';
      out << "covered: " << index_list(solution.covered_classrooms) << '\n';
      break;
  }
  return out.str();
}

std::string render(const CoverageInstance& instance, const ThresholdSolution& solution,
                   Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kCsv:
      out << "threshold_seconds,site_index,site_id\n";
      for (std::size_t j : solution.chosen_sites) {
        out << number(solution.threshold) << ',' << j << ',' << instance.sites()[j] << '\n';
      }
      break;
    case Format::kJson: {
      Json j;
      j["threshold_seconds"] = solution.threshold;
      j["chosen_sites"] = sites_json(instance, solution.chosen_sites);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kText:
      out << "threshold_seconds=" << number(solution.threshold) << '\n';
      out << "sites: " << index_list(solution.chosen_sites) << '\n';
      break;
  }
  return out.str();
}

}  // namespace stationplan
