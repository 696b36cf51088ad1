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
#ifndef STATIONPLAN_TARGET_ALLOCATOR_H_
#define STATIONPLAN_TARGET_ALLOCATOR_H_

#include "stationplan/core_model.h"

namespace stationplan {

// Campus-wide target coverage:
//
//   min  sum_b (d_b - u * x_b)^2   s.t.  sum_b x_b <= N,  x_b >= 1 integer.
//
// Solved exactly by greedy marginal allocation from x_b = 1: each step adds a
// station to the building with the most negative marginal cost
// u * (u * (2x + 1) - 2 d_b), ties going to the earlier building in registry
// order. Stops when the budget is spent or no marginal cost is negative, so
// budget may be left unused.
//
// Throws InfeasibleError when total < |B|, ArgumentError when pumps < 1.
BuildingAllocation target_allocate(const DemandSnapshot& snapshot, const CampusRegistry& registry,
                                   Count total, Count pumps = kDefaultPumpsPerStation);

// Objective value of an allocation against a snapshot. Exact.
WideCount target_objective(const DemandSnapshot& snapshot, const BuildingAllocation& allocation,
                          Count pumps = kDefaultPumpsPerStation);

}  // namespace stationplan

#endif  // STATIONPLAN_TARGET_ALLOCATOR_H_
