# Copyright 2026 The stationplan Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sanitizer station placement models.

Loaders take CSV text rather than paths.
"""

from ._stationplan import (
    AllocationDiff,
    ArgumentError,
    BuildingAllocation,
    CampusRegistry,
    CoverageInstance,
    CoverageSolution,
    DataError,
    DemandSnapshot,
    InfeasibleError,
    LookupError,
    ThresholdSolution,
    diff,
    door_coverage,
    doors_restricted,
    doors_unrestricted,
    heuristic_allocate,
    load_allocation,
    load_coverage_instance,
    load_demand,
    load_demand_weeks,
    load_registry,
    min_max_threshold,
    run_cli,
    solve_max_coverage,
    target_allocate,
    target_objective,
)

__all__ = [name for name in dir() if not name.startswith("_")]
