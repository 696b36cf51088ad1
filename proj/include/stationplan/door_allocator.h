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
// Door-level station placement.
//
// Restricted: each building keeps a fixed quota s_b, spread over its doors
// with at most max_per_door stations per door, maximising covered door
// traffic  sum_i x_bi * d_bi.
//
// Unrestricted: exactly N doors campus-wide receive one station each, every
// building gets at least one, maximising covered door traffic.

#ifndef STATIONPLAN_DOOR_ALLOCATOR_H_
#define STATIONPLAN_DOOR_ALLOCATOR_H_

#include <map>

#include "stationplan/core_model.h"

namespace stationplan {

// Per building: doors sorted by (demand desc, index asc), each filled to the
// cap until the quota is spent. Buildings missing from quotas receive their
// registry baseline.
//
// Throws InfeasibleError naming the building when s_b > cap * door_count,
// ArgumentError when cap < 1 or a quota is negative, LookupError when a
// quota names a building outside the registry.
BuildingAllocation doors_restricted(const DemandSnapshot& snapshot,
                                    const CampusRegistry& registry,
                                    const std::map<BuildingId, Count>& quotas,
                                    Count max_per_door = kDefaultMaxPerDoor);

// Quotas taken from the registry baseline column.
BuildingAllocation doors_restricted(const DemandSnapshot& snapshot,
                                    const CampusRegistry& registry,
                                    Count max_per_door = kDefaultMaxPerDoor);

// Two phases: every building's busiest door (lowest index on ties), then the
// remaining N - |B| slots go to the busiest unselected doors campus-wide,
// ties by registry order and then door index.
//
// Throws InfeasibleError when total < |B| or total exceeds the door count.
BuildingAllocation doors_unrestricted(const DemandSnapshot& snapshot,
                                      const CampusRegistry& registry, Count total);

// sum over doors of stations * door demand. Requires per-door counts.
Count door_coverage(const DemandSnapshot& snapshot, const BuildingAllocation& allocation);

}  // namespace stationplan

#endif  // STATIONPLAN_DOOR_ALLOCATOR_H_
