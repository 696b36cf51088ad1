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
#include "stationplan/target_allocator.h"

#include <string>
#include <vector>

#include "stationplan/errors.h"

namespace stationplan {

BuildingAllocation target_allocate(const DemandSnapshot& snapshot, const CampusRegistry& registry,
                                   Count total, Count pumps) {
  if (pumps < 1) throw ArgumentError("pumps per station must be at least 1");
  snapshot.require_bound_to(registry);
  const auto buildings = static_cast<Count>(registry.size());
  if (total < buildings) {
    throw InfeasibleError("every building needs at least one station: " +
                          std::to_string(buildings) + " buildings but only " +
                          std::to_string(total) + " stations available (short by " +
                          std::to_string(buildings - total) + ")");
  }

  std::vector<Count> x(registry.size(), 1);
  const auto u = static_cast<WideCount>(pumps);
  auto marginal = [&](std::size_t k) {
    return u * (u * (2 * static_cast<WideCount>(x[k]) + 1) -
                2 * static_cast<WideCount>(snapshot.building_demand(k)));
  };

  for (Count used = buildings; used < total; ++used) {
    std::size_t best = registry.size();
    WideCount best_cost = 0;
    for (std::size_t k = 0; k < registry.size(); ++k) {
      const WideCount cost = marginal(k);
      if (cost < best_cost) {
        best_cost = cost;
        best = k;
      }
    }
    if (best == registry.size()) break;
    ++x[best];
  }

  std::vector<BuildingCount> out;
  out.reserve(registry.size());
  for (std::size_t k = 0; k < registry.size(); ++k) out.push_back({registry.buildings()[k].id, x[k]});
  return BuildingAllocation(ModelTag::kTarget2, std::move(out));
}

WideCount target_objective(const DemandSnapshot& snapshot, const BuildingAllocation& allocation,
                          Count pumps) {
  WideCount sum = 0;
  for (const auto& bc : allocation.per_building()) {
    const WideCount gap = static_cast<WideCount>(snapshot.building_demand(bc.building)) -
                         static_cast<WideCount>(pumps) * bc.stations;
    sum += gap * gap;
  }
  return sum;
}

}  // namespace stationplan
