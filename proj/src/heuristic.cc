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
#include "stationplan/heuristic.h"

#include <limits>
#include <vector>

#include "stationplan/errors.h"

namespace stationplan {

BuildingAllocation heuristic_allocate(const DemandSnapshot& snapshot,
                                      const CampusRegistry& registry, Count total) {
  if (total < 1) throw ArgumentError("total stations must be at least 1");
  snapshot.require_bound_to(registry);
  const Count campus = snapshot.total_demand();
  if (campus <= 0) {
    throw DataError("snapshot '" + snapshot.label() +
                    "' has zero total demand; shares are undefined");
  }

  std::vector<BuildingCount> out;
  out.reserve(registry.size());
  for (std::size_t k = 0; k < registry.size(); ++k) {
    const auto num = static_cast<WideCount>(snapshot.building_demand(k)) * total;
    const WideCount share = (num + campus - 1) / campus;
    if (share > std::numeric_limits<Count>::max()) {
      throw ArgumentError("heuristic share overflows for building '" +
                          registry.buildings()[k].id.str() + "'");
    }
    out.push_back({registry.buildings()[k].id, static_cast<Count>(share)});
  }
  return BuildingAllocation(ModelTag::kHeuristic0, std::move(out));
}

}  // namespace stationplan
