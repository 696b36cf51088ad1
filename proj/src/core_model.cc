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

#include "stationplan/core_model.h"

#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "stationplan/errors.h"

namespace stationplan {

BuildingId::BuildingId(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw ArgumentError("building id must be non-empty");
}

CampusRegistry::CampusRegistry(std::vector<BuildingRecord> buildings)
    : buildings_(std::move(buildings)) {
  index_.reserve(buildings_.size());
  for (std::size_t k = 0; k < buildings_.size(); ++k) {
    const BuildingRecord& rec = buildings_[k];
    if (!index_.emplace(rec.id.str(), k).second) {
      throw DataError("duplicate building id '" + rec.id.str() + "'");
    }
    if (rec.door_count < 1) {
      throw DataError("building '" + rec.id.str() + "' has door_count " +
                      std::to_string(rec.door_count) + "; at least one door is required");
    }
    if (rec.baseline_stations < 0) {
      throw DataError("building '" + rec.id.str() + "' has negative baseline_stations");
    }
    total_baseline_ += rec.baseline_stations;
    total_doors_ += rec.door_count;
  }
}

std::optional<std::size_t> CampusRegistry::find(const BuildingId& id) const {
  auto it = index_.find(id.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CampusRegistry::index_of(const BuildingId& id) const {
  if (auto k = find(id)) return *k;
  throw LookupError("unknown building id '" + id.str() + "'");
}

const BuildingRecord& CampusRegistry::at(const BuildingId& id) const {
  return buildings_[index_of(id)];
}

bool CampusRegistry::contains(const DoorRef& door) const {
  auto k = find(door.building);
  return k && door.door_index < static_cast<std::size_t>(buildings_[*k].door_count);
}

std::string default_door_label(std::size_t door_index) {
  return "#" + std::to_string(door_index);
}

DemandSnapshot::DemandSnapshot(std::string label, const CampusRegistry& registry,
                               std::vector<std::vector<Count>> door_counts,
                               std::vector<std::vector<std::string>> door_labels)
    : label_(std::move(label)), counts_(std::move(door_counts)), labels_(std::move(door_labels)) {
  const auto buildings = registry.buildings();
  if (counts_.size() != buildings.size()) {
    throw DataError("snapshot '" + label_ + "' has counts for " + std::to_string(counts_.size()) +
                    " buildings, registry has " + std::to_string(buildings.size()));
  }
  if (labels_.empty()) labels_.resize(buildings.size());
  if (labels_.size() != buildings.size()) {
    throw DataError("snapshot '" + label_ + "' door label table does not match the registry");
  }
  ids_.reserve(buildings.size());
  building_totals_.reserve(buildings.size());
  for (std::size_t k = 0; k < buildings.size(); ++k) {
    const BuildingRecord& rec = buildings[k];
    const auto doors = static_cast<std::size_t>(rec.door_count);
    if (counts_[k].size() != doors) {
      throw DataError("snapshot '" + label_ + "': building '" + rec.id.str() + "' has " +
                      std::to_string(counts_[k].size()) + " door counts, registry lists " +
                      std::to_string(doors) + " doors");
    }
    if (labels_[k].size() > doors) {
      throw DataError("snapshot '" + label_ + "': building '" + rec.id.str() +
                      "' has more door labels than doors");
    }
    std::set<std::string> used(labels_[k].begin(), labels_[k].end());
    if (used.size() != labels_[k].size()) {
      throw DataError("snapshot '" + label_ + "': building '" + rec.id.str() +
                      "' has duplicate door labels");
    }
    for (std::size_t i = labels_[k].size(); i < doors; ++i) {
      std::string name = default_door_label(i);
      while (used.contains(name)) name += '_';
      used.insert(name);
      labels_[k].push_back(std::move(name));
    }
    Count total = 0;
    for (std::size_t i = 0; i < doors; ++i) {
      if (counts_[k][i] < 0) {
        throw DataError("snapshot '" + label_ + "': negative count at building '" + rec.id.str() +
                        "' door " + std::to_string(i));
      }
      total += counts_[k][i];
    }
    ids_.push_back(rec.id);
    building_totals_.push_back(total);
    index_.emplace(rec.id.str(), k);
  }
}

DemandSnapshot DemandSnapshot::zeros(std::string label, const CampusRegistry& registry) {
  std::vector<std::vector<Count>> counts;
  for (const auto& rec : registry.buildings()) {
    counts.emplace_back(static_cast<std::size_t>(rec.door_count), 0);
  }
  return DemandSnapshot(std::move(label), registry, std::move(counts));
}

std::size_t DemandSnapshot::index_of(const BuildingId& id) const {
  auto it = index_.find(id.str());
  if (it == index_.end()) {
    throw LookupError("unknown building id '" + id.str() + "' in snapshot '" + label_ + "'");
  }
  return it->second;
}

std::span<const Count> DemandSnapshot::door_counts(std::size_t building_index) const {
  return counts_.at(building_index);
}

std::span<const Count> DemandSnapshot::door_counts(const BuildingId& id) const {
  return counts_[index_of(id)];
}

std::span<const std::string> DemandSnapshot::door_labels(std::size_t building_index) const {
  return labels_.at(building_index);
}

Count DemandSnapshot::count(const DoorRef& door) const {
  const auto& doors = counts_[index_of(door.building)];
  if (door.door_index >= doors.size()) {
    throw LookupError("building '" + door.building.str() + "' has no door " +
                      std::to_string(door.door_index));
  }
  return doors[door.door_index];
}

const std::string& DemandSnapshot::door_label(const DoorRef& door) const {
  const auto& labels = labels_[index_of(door.building)];
  if (door.door_index >= labels.size()) {
    throw LookupError("building '" + door.building.str() + "' has no door " +
                      std::to_string(door.door_index));
  }
  return labels[door.door_index];
}

Count DemandSnapshot::building_demand(std::size_t building_index) const {
  return building_totals_.at(building_index);
}

Count DemandSnapshot::building_demand(const BuildingId& id) const {
  return building_totals_[index_of(id)];
}

Count DemandSnapshot::total_demand() const {
  return std::accumulate(building_totals_.begin(), building_totals_.end(), Count{0});
}

bool DemandSnapshot::bound_to(const CampusRegistry& registry) const {
  const auto buildings = registry.buildings();
  if (buildings.size() != ids_.size()) return false;
  for (std::size_t k = 0; k < ids_.size(); ++k) {
    if (buildings[k].id != ids_[k]) return false;
    if (static_cast<std::size_t>(buildings[k].door_count) != counts_[k].size()) return false;
  }
  return true;
}

void DemandSnapshot::require_bound_to(const CampusRegistry& registry) const {
  const auto buildings = registry.buildings();
  if (buildings.size() != ids_.size()) {
    throw DataError("snapshot '" + label_ + "' covers " + std::to_string(ids_.size()) +
                    " buildings, registry has " + std::to_string(buildings.size()));
  }
  for (std::size_t k = 0; k < ids_.size(); ++k) {
    if (buildings[k].id != ids_[k]) {
      throw DataError("snapshot '" + label_ + "' building " + std::to_string(k) + " is '" +
                      ids_[k].str() + "', registry has '" + buildings[k].id.str() + "'");
    }
    if (static_cast<std::size_t>(buildings[k].door_count) != counts_[k].size()) {
      throw DataError("snapshot '" + label_ + "' door count for '" + ids_[k].str() +
                      "' differs from the registry");
    }
  }
}

Count building_demand(const DemandSnapshot& snapshot, const BuildingId& id) {
  return snapshot.building_demand(id);
}

std::string_view to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::kHeuristic0: return "heuristic";
    case ModelTag::kTarget2: return "target";
    case ModelTag::kDoorRestricted3: return "doors-restricted";
    case ModelTag::kDoorUnrestricted4: return "doors-unrestricted";
    case ModelTag::kBaseline: return "baseline";
  }
  return "baseline";
}

ModelTag parse_model_tag(std::string_view name) {
  for (ModelTag tag : {ModelTag::kHeuristic0, ModelTag::kTarget2, ModelTag::kDoorRestricted3,
                       ModelTag::kDoorUnrestricted4, ModelTag::kBaseline}) {
    if (to_string(tag) == name) return tag;
  }
  throw ArgumentError("unknown model '" + std::string(name) + "'");
}

BuildingAllocation::BuildingAllocation(ModelTag tag, std::vector<BuildingCount> per_building,
                                       std::optional<std::vector<DoorAllocation>> per_door)
    : tag_(tag), per_building_(std::move(per_building)), per_door_(std::move(per_door)) {
  index_.reserve(per_building_.size());
  for (std::size_t k = 0; k < per_building_.size(); ++k) {
    const BuildingCount& bc = per_building_[k];
    if (!index_.emplace(bc.building.str(), k).second) {
      throw DataError("allocation lists building '" + bc.building.str() + "' twice");
    }
    if (bc.stations < 0) {
      throw DataError("allocation for building '" + bc.building.str() + "' is negative");
    }
  }
  if (!per_door_) return;

  std::vector<Count> sums(per_building_.size(), 0);
  for (const DoorAllocation& da : *per_door_) {
    auto it = index_.find(da.door.building.str());
    if (it == index_.end()) {
      throw DataError("door allocation names building '" + da.door.building.str() +
                      "' which has no building total");
    }
    if (da.stations < 0) {
      throw DataError("door allocation for building '" + da.door.building.str() + "' door " +
                      std::to_string(da.door.door_index) + " is negative");
    }
    sums[it->second] += da.stations;
  }
  for (std::size_t k = 0; k < per_building_.size(); ++k) {
    if (sums[k] != per_building_[k].stations) {
      throw DataError("building '" + per_building_[k].building.str() + "' total " +
                      std::to_string(per_building_[k].stations) + " differs from its door sum " +
                      std::to_string(sums[k]));
    }
  }
}

BuildingAllocation BuildingAllocation::baseline(const CampusRegistry& registry) {
  std::vector<BuildingCount> counts;
  counts.reserve(registry.size());
  for (const auto& rec : registry.buildings()) counts.push_back({rec.id, rec.baseline_stations});
  return BuildingAllocation(ModelTag::kBaseline, std::move(counts));
}

std::optional<Count> BuildingAllocation::find(const BuildingId& id) const {
  auto it = index_.find(id.str());
  if (it == index_.end()) return std::nullopt;
  return per_building_[it->second].stations;
}

Count BuildingAllocation::stations(const BuildingId& id) const {
  if (auto v = find(id)) return *v;
  throw LookupError("allocation has no building '" + id.str() + "'");
}

Count BuildingAllocation::total() const {
  Count total = 0;
  for (const auto& bc : per_building_) total += bc.stations;
  return total;
}

CoverageInstance::CoverageInstance(std::vector<std::string> classrooms,
                                   std::vector<std::string> sites,
                                   std::vector<double> travel_seconds,
                                   std::vector<Count> classroom_weights)
    : classrooms_(std::move(classrooms)),
      sites_(std::move(sites)),
      seconds_(std::move(travel_seconds)),
      weights_(std::move(classroom_weights)) {
  if (seconds_.size() != classrooms_.size() * sites_.size()) {
    throw DataError("travel-time matrix has " + std::to_string(seconds_.size()) +
                    " entries, expected " + std::to_string(classrooms_.size()) + " x " +
                    std::to_string(sites_.size()));
  }
  for (std::size_t k = 0; k < seconds_.size(); ++k) {
    if (!std::isfinite(seconds_[k]) || seconds_[k] < 0) {
      throw DataError("travel time from classroom '" + classrooms_[k / sites_.size()] +
                      "' to site '" + sites_[k % sites_.size()] +
                      "' must be finite and non-negative");
    }
  }
  if (weights_.empty()) weights_.assign(classrooms_.size(), 1);
  if (weights_.size() != classrooms_.size()) {
    throw DataError("classroom weight count does not match classroom count");
  }
  for (Count w : weights_) {
    if (w < 0) throw DataError("classroom weights must be non-negative");
  }
}

BinaryMatrix coverage_matrix(const CoverageInstance& instance, double threshold) {
  if (!(threshold >= 0)) throw ArgumentError("coverage threshold must be non-negative");
  BinaryMatrix w(instance.classroom_count(), instance.site_count());
  for (std::size_t c = 0; c < w.rows(); ++c) {
    for (std::size_t j = 0; j < w.cols(); ++j) w.set(c, j, instance.seconds(c, j) < threshold);
  }
  return w;
}

}  // namespace stationplan
