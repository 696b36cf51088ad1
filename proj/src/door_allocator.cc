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
#include "stationplan/door_allocator.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "stationplan/errors.h"

namespace stationplan {
namespace {

// Door indices of one building by (demand desc, index asc).
std::vector<std::size_t> busiest_first(std::span<const Count> demand) {
  std::vector<std::size_t> order(demand.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return demand[a] > demand[b]; });
  return order;
}

BuildingAllocation assemble(ModelTag tag, const DemandSnapshot& snapshot,
                            const CampusRegistry& registry,
                            const std::vector<std::vector<Count>>& stations) {
  std::vector<BuildingCount> per_building;
  std::vector<DoorAllocation> per_door;
  per_building.reserve(registry.size());
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const BuildingId& id = registry.buildings()[k].id;
    const auto labels = snapshot.door_labels(k);
    Count sum = 0;
    for (std::size_t i = 0; i < stations[k].size(); ++i) {
      per_door.push_back({DoorRef{id, i}, labels[i], stations[k][i]});
      sum += stations[k][i];
    }
    per_building.push_back({id, sum});
  }
  return BuildingAllocation(tag, std::move(per_building), std::move(per_door));
}

}  // namespace

BuildingAllocation doors_restricted(const DemandSnapshot& snapshot,
                                    const CampusRegistry& registry,
                                    const std::map<BuildingId, Count>& quotas,
                                    Count max_per_door) {
  if (max_per_door < 1) throw ArgumentError("stations per door cap must be at least 1");
  snapshot.require_bound_to(registry);
  for (const auto& [id, quota] : quotas) {
    registry.index_of(id);
    if (quota < 0) throw ArgumentError("quota for building '" + id.str() + "' is negative");
  }

  std::vector<std::vector<Count>> stations(registry.size());
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const BuildingRecord& rec = registry.buildings()[k];
    auto it = quotas.find(rec.id);
    Count remaining = it != quotas.end() ? it->second : rec.baseline_stations;
    const Count capacity = max_per_door * rec.door_count;
    if (remaining > capacity) {
      throw InfeasibleError("building '" + rec.id.str() + "' quota " + std::to_string(remaining) +
                            " exceeds its door capacity " + std::to_string(capacity) + " (" +
                            std::to_string(rec.door_count) + " doors x " +
                            std::to_string(max_per_door) + ")");
    }
    stations[k].assign(static_cast<std::size_t>(rec.door_count), 0);
    for (std::size_t door : busiest_first(snapshot.door_counts(k))) {
      if (remaining == 0) break;
      const Count put = std::min(remaining, max_per_door);
      stations[k][door] = put;
      remaining -= put;
    }
  }
  return assemble(ModelTag::kDoorRestricted3, snapshot, registry, stations);
}

BuildingAllocation doors_restricted(const DemandSnapshot& snapshot,
                                    const CampusRegistry& registry, Count max_per_door) {
  std::map<BuildingId, Count> quotas;
  for (const auto& rec : registry.buildings()) quotas.emplace(rec.id, rec.baseline_stations);
  return doors_restricted(snapshot, registry, quotas, max_per_door);
}

BuildingAllocation doors_unrestricted(const DemandSnapshot& snapshot,
                                      const CampusRegistry& registry, Count total) {
  snapshot.require_bound_to(registry);
  const auto buildings = static_cast<Count>(registry.size());
  if (total < buildings) {
    throw InfeasibleError("every building needs at least one door station: " +
                          std::to_string(buildings) + " buildings but only " +
                          std::to_string(total) + " stations available");
  }
  if (total > registry.total_doors()) {
    throw InfeasibleError("at most one station per door: " + std::to_string(total) +
                          " stations exceed the " + std::to_string(registry.total_doors()) +
                          " doors on campus");
  }

  struct Candidate {
    Count demand;
    std::size_t building;
    std::size_t door;
  };
  std::vector<std::vector<Count>> stations(registry.size());
  std::vector<Candidate> rest;
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const auto demand = snapshot.door_counts(k);
    stations[k].assign(demand.size(), 0);
    const auto order = busiest_first(demand);
    stations[k][order.front()] = 1;
    for (std::size_t r = 1; r < order.size(); ++r) rest.push_back({demand[order[r]], k, order[r]});
  }
  std::sort(rest.begin(), rest.end(), [](const Candidate& a, const Candidate& b) {
    if (a.demand != b.demand) return a.demand > b.demand;
    if (a.building != b.building) return a.building < b.building;
    return a.door < b.door;
  });
  const auto extra = static_cast<std::size_t>(total - buildings);
  for (std::size_t r = 0; r < extra; ++r) stations[rest[r].building][rest[r].door] = 1;
  return assemble(ModelTag::kDoorUnrestricted4, snapshot, registry, stations);
}

Count door_coverage(const DemandSnapshot& snapshot, const BuildingAllocation& allocation) {
  if (!allocation.has_per_door()) {
    throw ArgumentError("door coverage needs a door-level allocation");
  }
  Count sum = 0;
  for (const auto& da : *allocation.per_door()) sum += da.stations * snapshot.count(da.door);
  return sum;
}

}  // namespace stationplan
