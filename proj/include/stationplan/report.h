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
// Allocation comparison: per-building deltas against a baseline, exact
// delta histograms and same/more/fewer tallies, multi-week sensitivity, and
// deterministic text/csv/json rendering of all of the above.

#ifndef STATIONPLAN_REPORT_H_
#define STATIONPLAN_REPORT_H_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stationplan/core_model.h"
#include "stationplan/coverage_solver.h"

namespace stationplan {

struct DiffSummary {
  std::size_t same = 0;
  std::size_t more = 0;
  std::size_t fewer = 0;

  friend bool operator==(const DiffSummary&, const DiffSummary&) = default;
};

struct BuildingDelta {
  BuildingId building;
  Count baseline = 0;
  Count candidate = 0;
  Count delta = 0;  // candidate - baseline

  friend bool operator==(const BuildingDelta&, const BuildingDelta&) = default;
};

struct AllocationDiff {
  std::vector<BuildingDelta> rows;          // baseline's building order
  std::map<Count, std::size_t> histogram;   // delta -> number of buildings
  DiffSummary summary;

  Count delta(const BuildingId& id) const;
};

// Throws DataError listing the symmetric difference when the two
// allocations cover different building sets.
AllocationDiff diff(const BuildingAllocation& candidate, const BuildingAllocation& baseline);

enum class Lean { kBelow, kEven, kAbove };

// Shape of the delta distribution: mean against median, plus which side
// holds more buildings.
struct SkewReading {
  double mean = 0;
  double median = 0;
  Lean mean_vs_median = Lean::kEven;
  Lean more_vs_fewer = Lean::kEven;
};

SkewReading skew(const AllocationDiff& d);

using Allocator = std::function<BuildingAllocation(const DemandSnapshot&)>;

struct BuildingSpread {
  BuildingId building;
  Count min_alloc = 0;
  Count max_alloc = 0;
  Count spread = 0;

  friend bool operator==(const BuildingSpread&, const BuildingSpread&) = default;
};

struct SensitivityReport {
  std::vector<std::string> snapshots;
  std::size_t agreeing = 0;        // buildings identical across all snapshots
  double agreement_fraction = 0;   // agreeing / buildings, 1 when there are none
  Count max_abs_delta = 0;         // largest spread over buildings
  std::vector<BuildingSpread> buildings;
};

// Runs the allocator on each snapshot and compares the results building by
// building. Throws ArgumentError for fewer than two snapshots and DataError
// when a snapshot is not bound to the registry.
SensitivityReport sensitivity(const Allocator& allocator,
                              const std::vector<DemandSnapshot>& snapshots,
                              const CampusRegistry& registry);

enum class Format { kText, kCsv, kJson };

// Throws ArgumentError for anything other than text, csv or json.
Format parse_format(std::string_view name);

enum class DiffView { kHistogram, kTable };

// csv: histogram (delta,count) or per-building table
// (building_id,baseline,candidate,delta) depending on view. text and json
// carry the summary, skew reading and histogram, plus the table when
// view == kTable.
std::string render(const AllocationDiff& d, Format format, DiffView view = DiffView::kHistogram);
// csv: building_id,min_alloc,max_alloc,spread
std::string render(const SensitivityReport& report, Format format);
// csv: the allocation interchange format.
std::string render(const BuildingAllocation& allocation, Format format);
std::string render(const CoverageInstance& instance, const CoverageSolution& solution,
                   Format format);
std::string render(const CoverageInstance& instance, const ThresholdSolution& solution,
                   Format format);

}  // namespace stationplan

#endif  // STATIONPLAN_REPORT_H_
