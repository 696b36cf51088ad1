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

// CSV loaders and writers for the registry, door-access demand, coverage
// instance, allocation interchange and appendix fixture formats.
//
// Row numbers in messages are 1-based file lines (the header is line 1).
// Hard errors throw DataError. Soft problems reject the row and add a
// warning, unless strict mode is on, in which case they are hard errors.

#ifndef STATIONPLAN_INGEST_H_
#define STATIONPLAN_INGEST_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stationplan/core_model.h"

namespace stationplan {

struct IngestWarning {
  std::size_t row = 0;
  std::string message;

  friend bool operator==(const IngestWarning&, const IngestWarning&) = default;
};

struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_rejected = 0;
  std::vector<IngestWarning> warnings;
};

template <typename T>
struct Loaded {
  T value;
  IngestReport report;
};

struct IngestOptions {
  bool strict = false;
};

// True when STATIONPLAN_STRICT=1.
bool strict_from_env();

struct DemandOptions {
  bool strict = false;
  // Selects one week label. Without it a file holding more than one week is
  // an error unless aggregate_weeks is set.
  std::optional<std::string> week;
  bool aggregate_weeks = false;
};

// Header: building_id,display_name,door_count,baseline_stations
Loaded<CampusRegistry> load_registry(std::istream& in, const IngestOptions& options = {});

// Header: building_id,door_label,week,event_count
//
// Door labels map to dense indices per building in first-seen order over the
// whole file, so every week of one file shares the same door indexing.
// Repeated (building, door, week) rows are summed.
Loaded<DemandSnapshot> load_demand(std::istream& in, const CampusRegistry& registry,
                                   const DemandOptions& options = {});

// One snapshot per distinct week, in first-seen order.
Loaded<std::vector<DemandSnapshot>> load_demand_weeks(std::istream& in,
                                                      const CampusRegistry& registry,
                                                      const IngestOptions& options = {});

// Header: classroom_id,site_id,seconds. Every (classroom, site) pair must
// appear exactly once; any violation is a hard error.
CoverageInstance load_coverage_instance(std::istream& in);

// Header: building_id,stations  or  building_id,door_label,stations
//
// In the door-level form each building's total is the sum of its door rows
// and door indices follow first-seen label order per building.
Loaded<BuildingAllocation> load_allocation(std::istream& in, ModelTag tag = ModelTag::kBaseline,
                                           const IngestOptions& options = {});

// Header: building_id,quota
Loaded<std::map<BuildingId, Count>> load_quotas(std::istream& in,
                                                const IngestOptions& options = {});

// The four published allocation columns, keyed by building id.
struct AppendixTable {
  std::vector<std::string> display_names;
  BuildingAllocation initial;
  BuildingAllocation heuristic;
  BuildingAllocation building_allocation;
  BuildingAllocation door_unrestricted;
};

// Header: building_id,display_name,initial,heuristic,building_allocation,door_unrestricted
// Always strict.
AppendixTable load_appendix_table(std::istream& in);

void write_registry(std::ostream& out, const CampusRegistry& registry);
// Writes every door of every building, including zero counts.
void write_demand(std::ostream& out, const DemandSnapshot& snapshot);
void write_demand(std::ostream& out, const std::vector<DemandSnapshot>& snapshots);
// Door-level form when the allocation carries per-door counts.
void write_allocation(std::ostream& out, const BuildingAllocation& allocation);
void write_coverage_instance(std::ostream& out, const CoverageInstance& instance);

}  // namespace stationplan

#endif  // STATIONPLAN_INGEST_H_
