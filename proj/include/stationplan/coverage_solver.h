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
// Single-building maximal coverage of classrooms by p stations, and the
// min-max walking time (p-center value) over the same instance.

#ifndef STATIONPLAN_COVERAGE_SOLVER_H_
#define STATIONPLAN_COVERAGE_SOLVER_H_

#include <cstddef>
#include <vector>

#include "stationplan/core_model.h"

namespace stationplan {

struct CoverageSolution {
  std::vector<std::size_t> chosen_sites;        // ascending, exactly p entries
  std::vector<std::size_t> covered_classrooms;  // ascending
  Count objective = 0;  // covered classroom weight; a count with default weights

  friend bool operator==(const CoverageSolution&, const CoverageSolution&) = default;
};

// Optimal p-site selection maximising covered classrooms, where classroom c
// is covered when some chosen site j has t_cj < threshold. Exact: depth-first
// enumeration of p-subsets in lexicographic order, pruned when the
// uncovered-but-reachable classrooms cannot beat the incumbent. Among optima
// the lexicographically smallest site set is returned.
//
// Throws ArgumentError unless 1 <= p <= |sites| and threshold >= 0.
CoverageSolution solve_max_coverage(const CoverageInstance& instance, std::size_t p,
                                    double threshold);

struct ThresholdSolution {
  // min over p-subsets S of max over classrooms c of min over j in S of t_cj.
  // This is the attained travel time: every classroom has a chosen site
  // within threshold seconds (<=). Under strict coverage any threshold just
  // above this value covers everything. Zero when there are no classrooms.
  double threshold = 0;
  std::vector<std::size_t> chosen_sites;  // lexicographically smallest witness

  friend bool operator==(const ThresholdSolution&, const ThresholdSolution&) = default;
};

// Binary search over the sorted distinct travel times with an exact
// full-coverage feasibility check at each probe.
ThresholdSolution min_max_threshold(const CoverageInstance& instance, std::size_t p);

}  // namespace stationplan

#endif  // STATIONPLAN_COVERAGE_SOLVER_H_
