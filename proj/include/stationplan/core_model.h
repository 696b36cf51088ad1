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

// Domain types shared by the solvers and the reporting layer.
//
// A campus is a list of buildings, each with a number of exterior doors
// (indexed densely from 0) and a baseline station count. Weekly door-access
// counts form a DemandSnapshot; solver outputs are BuildingAllocations.
// Every type here is immutable once constructed.

#ifndef STATIONPLAN_CORE_MODEL_H_
#define STATIONPLAN_CORE_MODEL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stationplan {

using Count = std::int64_t;
// Exact intermediate for products of counts.
__extension__ typedef __int128 WideCount;

inline constexpr Count kDefaultPumpsPerStation = 500;
inline constexpr Count kDefaultMaxPerDoor = 2;

// Case-sensitive, non-empty building token.
class BuildingId {
 public:
  explicit BuildingId(std::string value);

  const std::string& str() const { return value_; }

  friend auto operator<=>(const BuildingId&, const BuildingId&) = default;
  friend bool operator==(const BuildingId&, const BuildingId&) = default;

 private:
  std::string value_;
};

struct DoorRef {
  BuildingId building;
  std::size_t door_index = 0;

  friend auto operator<=>(const DoorRef&, const DoorRef&) = default;
  friend bool operator==(const DoorRef&, const DoorRef&) = default;
};

struct BuildingRecord {
  BuildingId id;
  std::string display_name;
  Count door_count = 1;
  Count baseline_stations = 0;

  friend bool operator==(const BuildingRecord&, const BuildingRecord&) = default;
};

class CampusRegistry {
 public:
  CampusRegistry() = default;
  // Throws DataError on duplicate ids, door_count < 1 or negative baselines.
  explicit CampusRegistry(std::vector<BuildingRecord> buildings);

  std::span<const BuildingRecord> buildings() const { return buildings_; }
  std::size_t size() const { return buildings_.size(); }
  bool empty() const { return buildings_.empty(); }

  std::optional<std::size_t> find(const BuildingId& id) const;
  // Throws LookupError naming the id.
  std::size_t index_of(const BuildingId& id) const;
  const BuildingRecord& at(const BuildingId& id) const;

  // l_bi: true exactly when the door exists.
  bool contains(const DoorRef& door) const;

  Count total_baseline() const { return total_baseline_; }
  Count total_doors() const { return total_doors_; }

  friend bool operator==(const CampusRegistry& a, const CampusRegistry& b) {
    return a.buildings_ == b.buildings_;
  }

 private:
  std::vector<BuildingRecord> buildings_;
  std::unordered_map<std::string, std::size_t> index_;
  Count total_baseline_ = 0;
  Count total_doors_ = 0;
};

// Door-access event counts for one week, aligned with a registry.
class DemandSnapshot {
 public:
  // door_counts[k] holds the per-door counts of registry.buildings()[k] and
  // must have exactly door_count entries. door_labels is optional and must
  // be unique per building; missing labels default to "#<index>", suffixed
  // with '_' when that name is taken.
  DemandSnapshot(std::string label, const CampusRegistry& registry,
                 std::vector<std::vector<Count>> door_counts,
                 std::vector<std::vector<std::string>> door_labels = {});

  // Snapshot with every door at zero.
  static DemandSnapshot zeros(std::string label, const CampusRegistry& registry);

  const std::string& label() const { return label_; }
  std::size_t building_count() const { return ids_.size(); }
  std::span<const BuildingId> building_ids() const { return ids_; }

  std::span<const Count> door_counts(std::size_t building_index) const;
  std::span<const Count> door_counts(const BuildingId& id) const;
  std::span<const std::string> door_labels(std::size_t building_index) const;
  Count count(const DoorRef& door) const;
  const std::string& door_label(const DoorRef& door) const;

  Count building_demand(std::size_t building_index) const;
  Count building_demand(const BuildingId& id) const;
  Count total_demand() const;

  // Same building ids in the same order with the same door counts.
  bool bound_to(const CampusRegistry& registry) const;
  // Throws DataError describing the first mismatch.
  void require_bound_to(const CampusRegistry& registry) const;

  friend bool operator==(const DemandSnapshot& a, const DemandSnapshot& b) {
    return a.label_ == b.label_ && a.ids_ == b.ids_ && a.counts_ == b.counts_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t index_of(const BuildingId& id) const;

  std::string label_;
  std::vector<BuildingId> ids_;
  std::vector<std::vector<Count>> counts_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<Count> building_totals_;
  std::unordered_map<std::string, std::size_t> index_;
};

// d_b: exact sum of the building's door counts. Throws LookupError.
Count building_demand(const DemandSnapshot& snapshot, const BuildingId& id);

std::string default_door_label(std::size_t door_index);

enum class ModelTag { kHeuristic0, kTarget2, kDoorRestricted3, kDoorUnrestricted4, kBaseline };

std::string_view to_string(ModelTag tag);
// Accepts the names produced by to_string. Throws ArgumentError otherwise.
ModelTag parse_model_tag(std::string_view name);

struct BuildingCount {
  BuildingId building;
  Count stations = 0;

  friend bool operator==(const BuildingCount&, const BuildingCount&) = default;
};

struct DoorAllocation {
  DoorRef door;
  std::string label;
  Count stations = 0;

  friend bool operator==(const DoorAllocation&, const DoorAllocation&) = default;
};

// Station counts per building (x_b) and optionally per door (x̂_bi / x̄_bi).
class BuildingAllocation {
 public:
  // Throws DataError on duplicate buildings, negative counts, door entries
  // naming an unlisted building, or door sums that disagree with the
  // building totals.
  BuildingAllocation(ModelTag tag, std::vector<BuildingCount> per_building,
                     std::optional<std::vector<DoorAllocation>> per_door = std::nullopt);

  // The registry's baseline_stations column.
  static BuildingAllocation baseline(const CampusRegistry& registry);

  ModelTag model_tag() const { return tag_; }
  std::span<const BuildingCount> per_building() const { return per_building_; }
  const std::optional<std::vector<DoorAllocation>>& per_door() const { return per_door_; }
  bool has_per_door() const { return per_door_.has_value(); }
  std::size_t size() const { return per_building_.size(); }

  std::optional<Count> find(const BuildingId& id) const;
  Count stations(const BuildingId& id) const;
  Count total() const;

  friend bool operator==(const BuildingAllocation& a, const BuildingAllocation& b) {
    return a.tag_ == b.tag_ && a.per_building_ == b.per_building_ && a.per_door_ == b.per_door_;
  }

 private:
  ModelTag tag_;
  std::vector<BuildingCount> per_building_;
  std::optional<std::vector<DoorAllocation>> per_door_;
  std::unordered_map<std::string, std::size_t> index_;
};

// One building's classrooms, candidate sites and walking times.
class CoverageInstance {
 public:
  // travel_seconds is row-major, rows = classrooms. classroom_weights
  // defaults to all ones.
  CoverageInstance(std::vector<std::string> classrooms, std::vector<std::string> sites,
                   std::vector<double> travel_seconds, std::vector<Count> classroom_weights = {});

  std::span<const std::string> classrooms() const { return classrooms_; }
  std::span<const std::string> sites() const { return sites_; }
  std::size_t classroom_count() const { return classrooms_.size(); }
  std::size_t site_count() const { return sites_.size(); }
  double seconds(std::size_t classroom, std::size_t site) const {
    return seconds_[classroom * sites_.size() + site];
  }
  std::span<const double> travel_seconds() const { return seconds_; }
  std::span<const Count> classroom_weights() const { return weights_; }

  friend bool operator==(const CoverageInstance&, const CoverageInstance&) = default;

 private:
  std::vector<std::string> classrooms_;
  std::vector<std::string> sites_;
  std::vector<double> seconds_;
  std::vector<Count> weights_;
};

class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

// w[c][j] = 1 exactly when t_cj < threshold (strict). Throws ArgumentError
// for negative or NaN thresholds.
BinaryMatrix coverage_matrix(const CoverageInstance& instance, double threshold);

// Solver parameters. Each solver reads only what it needs.
struct ModelParams {
  std::optional<Count> total_stations;   // N
  Count pumps_per_station = kDefaultPumpsPerStation;  // u
  std::optional<Count> station_count;    // p
  std::optional<double> threshold_seconds;  // T
  std::optional<std::map<BuildingId, Count>> per_building_quota;  // s_b
  Count max_per_door = kDefaultMaxPerDoor;
};

}  // namespace stationplan

#endif  // STATIONPLAN_CORE_MODEL_H_
