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

#include "stationplan/ingest.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <set>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "csv.h"
#include "stationplan/errors.h"

namespace stationplan {
namespace {

using namespace std::string_view_literals;

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

// Applies the strict/lenient policy to one soft problem.
class RowPolicy {
 public:
  RowPolicy(bool strict, IngestReport& report) : strict_(strict), report_(report) {}

  void reject(std::size_t line, const std::string& message) {
    if (strict_) throw DataError(at_line(line) + message);
    ++report_.rows_rejected;
    report_.warnings.push_back({line, message});
  }

 private:
  bool strict_;
  IngestReport& report_;
};

constexpr std::array kRegistryHeader = {"building_id"sv, "display_name"sv, "door_count"sv,
                                        "baseline_stations"sv};
constexpr std::array kDemandHeader = {"building_id"sv, "door_label"sv, "week"sv,
                                      "event_count"sv};
constexpr std::array kCoverageHeader = {"classroom_id"sv, "site_id"sv, "seconds"sv};
constexpr std::array kAllocationHeader = {"building_id"sv, "stations"sv};
constexpr std::array kDoorAllocationHeader = {"building_id"sv, "door_label"sv, "stations"sv};
constexpr std::array kQuotaHeader = {"building_id"sv, "quota"sv};

std::string field_count_message(std::size_t got, std::size_t want) {
  return "expected " + std::to_string(want) + " fields, found " + std::to_string(got);
}

// Demand rows that survived validation.
struct DemandRow {
  std::size_t line;
  std::size_t building;
  std::string label;
  std::string week;
  Count count;
};

struct ParsedDemand {
  std::vector<DemandRow> rows;
  std::vector<std::vector<std::string>> labels;  // per building, first-seen
  std::vector<std::unordered_map<std::string, std::size_t>> label_index;
  std::vector<std::string> weeks;                // first-seen
  IngestReport report;
};

ParsedDemand parse_demand(std::istream& in, const CampusRegistry& registry, bool strict) {
  ParsedDemand parsed;
  parsed.labels.resize(registry.size());
  parsed.label_index.resize(registry.size());
  RowPolicy policy(strict, parsed.report);
  std::set<std::string> seen_weeks;

  for (const csv::Record& rec : csv::read_with_header(in, kDemandHeader)) {
    ++parsed.report.rows_read;
    const auto& f = rec.fields;
    if (f.size() != kDemandHeader.size()) {
      policy.reject(rec.line, field_count_message(f.size(), kDemandHeader.size()));
      continue;
    }
    if (f[0].empty() || f[1].empty() || f[2].empty()) {
      policy.reject(rec.line, "building_id, door_label and week must be non-empty");
      continue;
    }
    auto count = csv::parse_int(f[3]);
    if (!count) {
      policy.reject(rec.line, "event_count '" + f[3] + "' is not an integer");
      continue;
    }
    if (*count < 0) {
      throw DataError(at_line(rec.line) + "negative event_count " + f[3] + " for building '" +
                      f[0] + "' door '" + f[1] + "'");
    }
    auto building = registry.find(BuildingId(f[0]));
    if (!building) {
      policy.reject(rec.line, "building '" + f[0] + "' is not in the registry");
      continue;
    }
    auto& index = parsed.label_index[*building];
    if (!index.contains(f[1])) {
      const auto doors = static_cast<std::size_t>(registry.buildings()[*building].door_count);
      if (index.size() >= doors) {
        throw DataError(at_line(rec.line) + "building '" + f[0] + "' door label '" + f[1] +
                        "' exceeds the registry door_count of " + std::to_string(doors));
      }
      index.emplace(f[1], index.size());
      parsed.labels[*building].push_back(f[1]);
    }
    if (seen_weeks.insert(f[2]).second) parsed.weeks.push_back(f[2]);
    parsed.rows.push_back({rec.line, *building, f[1], f[2], *count});
  }
  return parsed;
}

DemandSnapshot build_snapshot(const ParsedDemand& parsed, const CampusRegistry& registry,
                              std::string label, const std::set<std::string>& weeks) {
  std::vector<std::vector<Count>> counts;
  counts.reserve(registry.size());
  for (const auto& rec : registry.buildings()) {
    counts.emplace_back(static_cast<std::size_t>(rec.door_count), 0);
  }
  for (const DemandRow& row : parsed.rows) {
    if (!weeks.contains(row.week)) continue;
    counts[row.building][parsed.label_index[row.building].at(row.label)] += row.count;
  }
  return DemandSnapshot(std::move(label), registry, std::move(counts), parsed.labels);
}

std::string format_seconds(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

bool strict_from_env() {
  const char* v = std::getenv("STATIONPLAN_STRICT");
  return v != nullptr && std::string_view(v) == "1";
}

Loaded<CampusRegistry> load_registry(std::istream& in, const IngestOptions& options) {
  IngestReport report;
  RowPolicy policy(options.strict, report);
  std::vector<BuildingRecord> buildings;
  std::unordered_map<std::string, std::size_t> first_line;

  for (const csv::Record& rec : csv::read_with_header(in, kRegistryHeader)) {
    ++report.rows_read;
    const auto& f = rec.fields;
    if (f.size() != kRegistryHeader.size()) {
      policy.reject(rec.line, field_count_message(f.size(), kRegistryHeader.size()));
      continue;
    }
    if (f[0].empty()) {
      policy.reject(rec.line, "building_id is empty");
      continue;
    }
    auto doors = csv::parse_int(f[2]);
    auto baseline = csv::parse_int(f[3]);
    if (!doors) {
      policy.reject(rec.line, "door_count '" + f[2] + "' is not an integer");
      continue;
    }
    if (*doors <= 0) {
      throw DataError(at_line(rec.line) + "building '" + f[0] + "' has door_count " + f[2] +
                      "; at least one door is required");
    }
    if (!baseline || *baseline < 0) {
      policy.reject(rec.line, "baseline_stations '" + f[3] + "' is not a non-negative integer");
      continue;
    }
    auto [it, inserted] = first_line.emplace(f[0], rec.line);
    if (!inserted) {
      throw DataError("duplicate building id '" + f[0] + "' on lines " +
                      std::to_string(it->second) + " and " + std::to_string(rec.line));
    }
    buildings.push_back({BuildingId(f[0]), f[1], *doors, *baseline});
  }
  return {CampusRegistry(std::move(buildings)), std::move(report)};
}

Loaded<DemandSnapshot> load_demand(std::istream& in, const CampusRegistry& registry,
                                   const DemandOptions& options) {
  ParsedDemand parsed = parse_demand(in, registry, options.strict);
  std::set<std::string> selected;
  std::string label;
  if (options.week) {
    if (std::find(parsed.weeks.begin(), parsed.weeks.end(), *options.week) == parsed.weeks.end()) {
      throw DataError("week '" + *options.week + "' does not appear in the demand file");
    }
    selected.insert(*options.week);
    label = *options.week;
  } else if (parsed.weeks.size() > 1 && !options.aggregate_weeks) {
    std::string list;
    for (const auto& w : parsed.weeks) list += (list.empty() ? "" : ", ") + w;
    throw DataError("demand file holds " + std::to_string(parsed.weeks.size()) + " weeks (" +
                    list + "); select one week");
  } else {
    for (const auto& w : parsed.weeks) {
      selected.insert(w);
      label += (label.empty() ? "" : "+") + w;
    }
  }
  DemandSnapshot snapshot = build_snapshot(parsed, registry, std::move(label), selected);
  return {std::move(snapshot), std::move(parsed.report)};
}

Loaded<std::vector<DemandSnapshot>> load_demand_weeks(std::istream& in,
                                                      const CampusRegistry& registry,
                                                      const IngestOptions& options) {
  ParsedDemand parsed = parse_demand(in, registry, options.strict);
  std::vector<DemandSnapshot> snapshots;
  snapshots.reserve(parsed.weeks.size());
  for (const auto& week : parsed.weeks) {
    snapshots.push_back(build_snapshot(parsed, registry, week, {week}));
  }
  return {std::move(snapshots), std::move(parsed.report)};
}

CoverageInstance load_coverage_instance(std::istream& in) {
  std::vector<std::string> classrooms;
  std::vector<std::string> sites;
  std::unordered_map<std::string, std::size_t> classroom_index;
  std::unordered_map<std::string, std::size_t> site_index;
  struct Entry {
    std::size_t classroom;
    std::size_t site;
    double seconds;
  };
  std::vector<Entry> entries;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;

  for (const csv::Record& rec : csv::read_with_header(in, kCoverageHeader)) {
    const auto& f = rec.fields;
    if (f.size() != kCoverageHeader.size()) {
      throw DataError(at_line(rec.line) + field_count_message(f.size(), kCoverageHeader.size()));
    }
    if (f[0].empty() || f[1].empty()) {
      throw DataError(at_line(rec.line) + "classroom_id and site_id must be non-empty");
    }
    auto seconds = csv::parse_double(f[2]);
    if (!seconds) {
      throw DataError(at_line(rec.line) + "seconds '" + f[2] + "' is not a finite number");
    }
    if (*seconds < 0) {
      throw DataError(at_line(rec.line) + "negative travel time " + f[2] + " from classroom '" +
                      f[0] + "' to site '" + f[1] + "'");
    }
    auto [ci, c_new] = classroom_index.emplace(f[0], classrooms.size());
    if (c_new) classrooms.push_back(f[0]);
    auto [si, s_new] = site_index.emplace(f[1], sites.size());
    if (s_new) sites.push_back(f[1]);
    auto [dup, fresh] = seen.emplace(std::pair{ci->second, si->second}, rec.line);
    if (!fresh) {
      throw DataError(at_line(rec.line) + "pair (classroom '" + f[0] + "', site '" + f[1] +
                      "') already given on line " + std::to_string(dup->second));
    }
    entries.push_back({ci->second, si->second, *seconds});
  }

  if (entries.size() != classrooms.size() * sites.size()) {
    std::string missing;
    for (std::size_t c = 0; c < classrooms.size(); ++c) {
      for (std::size_t j = 0; j < sites.size(); ++j) {
        if (!seen.contains({c, j})) {
          missing += (missing.empty() ? "" : ", ") + ("(" + classrooms[c] + ", " + sites[j] + ")");
        }
      }
    }
    throw DataError("travel-time table is missing pairs: " + missing);
  }
  std::vector<double> matrix(entries.size());
  for (const Entry& e : entries) matrix[e.classroom * sites.size() + e.site] = e.seconds;
  return CoverageInstance(std::move(classrooms), std::move(sites), std::move(matrix));
}

Loaded<BuildingAllocation> load_allocation(std::istream& in, ModelTag tag,
                                           const IngestOptions& options) {
  auto records = csv::read_all(in);
  if (records.empty()) throw DataError("missing header row in allocation file");
  const auto& header = records.front().fields;
  const bool door_level = header.size() == kDoorAllocationHeader.size() &&
                          std::equal(header.begin(), header.end(), kDoorAllocationHeader.begin());
  const bool building_level = header.size() == kAllocationHeader.size() &&
                              std::equal(header.begin(), header.end(), kAllocationHeader.begin());
  if (!door_level && !building_level) {
    throw DataError(
        "line 1: unexpected header; expected 'building_id,stations' or "
        "'building_id,door_label,stations'");
  }

  IngestReport report;
  RowPolicy policy(options.strict, report);
  std::vector<BuildingCount> per_building;
  std::unordered_map<std::string, std::size_t> building_index;
  std::vector<std::unordered_map<std::string, std::size_t>> door_index;
  std::vector<DoorAllocation> per_door;
  const std::size_t width = header.size();

  for (std::size_t r = 1; r < records.size(); ++r) {
    const csv::Record& rec = records[r];
    ++report.rows_read;
    const auto& f = rec.fields;
    if (f.size() != width) {
      policy.reject(rec.line, field_count_message(f.size(), width));
      continue;
    }
    if (f[0].empty() || (door_level && f[1].empty())) {
      policy.reject(rec.line, "identifier field is empty");
      continue;
    }
    auto stations = csv::parse_int(f[width - 1]);
    if (!stations || *stations < 0) {
      policy.reject(rec.line, "stations '" + f[width - 1] + "' is not a non-negative integer");
      continue;
    }
    auto [bi, b_new] = building_index.emplace(f[0], per_building.size());
    if (b_new) {
      per_building.push_back({BuildingId(f[0]), 0});
      door_index.emplace_back();
    } else if (!door_level) {
      throw DataError(at_line(rec.line) + "building '" + f[0] + "' listed twice");
    }
    per_building[bi->second].stations += *stations;
    if (door_level) {
      auto& doors = door_index[bi->second];
      auto [di, d_new] = doors.emplace(f[1], doors.size());
      if (!d_new) {
        throw DataError(at_line(rec.line) + "building '" + f[0] + "' door '" + f[1] +
                        "' listed twice");
      }
      per_door.push_back({DoorRef{BuildingId(f[0]), di->second}, f[1], *stations});
    }
  }
  std::optional<std::vector<DoorAllocation>> doors;
  if (door_level) doors = std::move(per_door);
  return {BuildingAllocation(tag, std::move(per_building), std::move(doors)), std::move(report)};
}

Loaded<std::map<BuildingId, Count>> load_quotas(std::istream& in, const IngestOptions& options) {
  IngestReport report;
  RowPolicy policy(options.strict, report);
  std::map<BuildingId, Count> quotas;
  for (const csv::Record& rec : csv::read_with_header(in, kQuotaHeader)) {
    ++report.rows_read;
    const auto& f = rec.fields;
    if (f.size() != kQuotaHeader.size() || f[0].empty()) {
      policy.reject(rec.line, "expected 'building_id,quota'");
      continue;
    }
    auto quota = csv::parse_int(f[1]);
    if (!quota || *quota < 0) {
      policy.reject(rec.line, "quota '" + f[1] + "' is not a non-negative integer");
      continue;
    }
    if (!quotas.emplace(BuildingId(f[0]), *quota).second) {
      throw DataError(at_line(rec.line) + "building '" + f[0] + "' listed twice");
    }
  }
  return {std::move(quotas), std::move(report)};
}

AppendixTable load_appendix_table(std::istream& in) {
  constexpr std::array header = {"building_id"sv,      "display_name"sv,
                                 "initial"sv,          "heuristic"sv,
                                 "building_allocation"sv, "door_unrestricted"sv};
  std::vector<std::string> names;
  std::array<std::vector<BuildingCount>, 4> columns;
  std::set<std::string> ids;
  for (const csv::Record& rec : csv::read_with_header(in, header)) {
    const auto& f = rec.fields;
    if (f.size() != header.size()) {
      throw DataError(at_line(rec.line) + field_count_message(f.size(), header.size()));
    }
    if (f[0].empty()) throw DataError(at_line(rec.line) + "building_id is empty");
    if (!ids.insert(f[0]).second) {
      throw DataError(at_line(rec.line) + "building '" + f[0] + "' listed twice");
    }
    names.push_back(f[1]);
    for (std::size_t k = 0; k < 4; ++k) {
      auto v = csv::parse_int(f[k + 2]);
      if (!v || *v < 0) {
        throw DataError(at_line(rec.line) + "column '" + std::string(header[k + 2]) +
                        "' value '" + f[k + 2] + "' is not a non-negative integer");
      }
      columns[k].push_back({BuildingId(f[0]), *v});
    }
  }
  return AppendixTable{
      std::move(names),
      BuildingAllocation(ModelTag::kBaseline, std::move(columns[0])),
      BuildingAllocation(ModelTag::kHeuristic0, std::move(columns[1])),
      BuildingAllocation(ModelTag::kTarget2, std::move(columns[2])),
      BuildingAllocation(ModelTag::kDoorUnrestricted4, std::move(columns[3])),
  };
}

void write_registry(std::ostream& out, const CampusRegistry& registry) {
  const std::vector<std::string> header(kRegistryHeader.begin(), kRegistryHeader.end());
  csv::write_row(out, header);
  for (const auto& rec : registry.buildings()) {
    const std::vector<std::string> row = {rec.id.str(), rec.display_name,
                                          std::to_string(rec.door_count),
                                          std::to_string(rec.baseline_stations)};
    csv::write_row(out, row);
  }
}

namespace {

void write_demand_rows(std::ostream& out, const DemandSnapshot& snapshot) {
  for (std::size_t k = 0; k < snapshot.building_count(); ++k) {
    const auto counts = snapshot.door_counts(k);
    const auto labels = snapshot.door_labels(k);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const std::vector<std::string> row = {snapshot.building_ids()[k].str(), labels[i],
                                            snapshot.label(), std::to_string(counts[i])};
      csv::write_row(out, row);
    }
  }
}

}  // namespace

void write_demand(std::ostream& out, const DemandSnapshot& snapshot) {
  write_demand(out, std::vector<DemandSnapshot>{snapshot});
}

void write_demand(std::ostream& out, const std::vector<DemandSnapshot>& snapshots) {
  const std::vector<std::string> header(kDemandHeader.begin(), kDemandHeader.end());
  csv::write_row(out, header);
  for (const auto& s : snapshots) write_demand_rows(out, s);
}

void write_allocation(std::ostream& out, const BuildingAllocation& allocation) {
  if (!allocation.has_per_door()) {
    const std::vector<std::string> header(kAllocationHeader.begin(), kAllocationHeader.end());
    csv::write_row(out, header);
    for (const auto& bc : allocation.per_building()) {
      const std::vector<std::string> row = {bc.building.str(), std::to_string(bc.stations)};
      csv::write_row(out, row);
    }
    return;
  }
  const std::vector<std::string> header(kDoorAllocationHeader.begin(),
                                        kDoorAllocationHeader.end());
  csv::write_row(out, header);
  for (const auto& da : *allocation.per_door()) {
    const std::vector<std::string> row = {da.door.building.str(), da.label,
                                          std::to_string(da.stations)};
    csv::write_row(out, row);
  }
}

void write_coverage_instance(std::ostream& out, const CoverageInstance& instance) {
  const std::vector<std::string> header(kCoverageHeader.begin(), kCoverageHeader.end());
  csv::write_row(out, header);
  for (std::size_t c = 0; c < instance.classroom_count(); ++c) {
    for (std::size_t j = 0; j < instance.site_count(); ++j) {
      const std::vector<std::string> row = {instance.classrooms()[c], instance.sites()[j],
                                            format_seconds(instance.seconds(c, j))};
      csv::write_row(out, row);
    }
  }
}

}  // namespace stationplan
