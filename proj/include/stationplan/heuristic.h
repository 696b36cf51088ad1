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
#ifndef STATIONPLAN_HEURISTIC_H_
#define STATIONPLAN_HEURISTIC_H_

#include "stationplan/core_model.h"

namespace stationplan {

// Demand-proportional ceiling heuristic:
//
//   x_b = ceil(d_b * N / sum_b' d_b')
//
// evaluated in exact integer arithmetic. The total may exceed N by fewer
// than |B| stations; no clipping is applied.
//
// Throws ArgumentError when total < 1, DataError when the snapshot is not
// bound to the registry or campus demand is zero.
BuildingAllocation heuristic_allocate(const DemandSnapshot& snapshot,
                                      const CampusRegistry& registry, Count total);

}  // namespace stationplan

#endif  // STATIONPLAN_HEURISTIC_H_
