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
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.h"
#include "stationplan/door_allocator.h"
#include "stationplan/errors.h"
#include "stationplan/ingest.h"
#include "test_support.h"

namespace stationplan {
namespace {

using testing::make_campus;

std::vector<Count> door_stations(const BuildingAllocation& a, const BuildingId& id) {
  std::vector<Count> out;
  for (const auto& da : *a.per_door()) {
    if (da.door.building == id) out.push_back(da.stations);
  }
  return out;
}

const BuildingId kB0("B0");
const BuildingId kB1("B1");

TEST_CASE("restricted example") {
  auto campus = make_campus({{10, 4, 1}});
  const auto alloc = doors_restricted(campus.snapshot, campus.registry, {{kB0, 3}}, 2);
  CHECK(door_stations(alloc, kB0) == std::vector<Count>{2, 1, 0});
  CHECK(door_coverage(campus.snapshot, alloc) == 24);
  CHECK(alloc.stations(kB0) == 3);
  CHECK(alloc.model_tag() == ModelTag::kDoorRestricted3);
}

TEST_CASE("restricted saturates every door at the cap") {
  auto campus = make_campus({{3, 2}});
  const auto alloc = doors_restricted(campus.snapshot, campus.registry, {{kB0, 4}}, 2);
  CHECK(door_stations(alloc, kB0) == std::vector<Count>{2, 2});
  CHECK_THROWS_AS(doors_restricted(campus.snapshot, campus.registry, {{kB0, 5}}, 2),
                  InfeasibleError);
}

TEST_CASE("restricted quota handling") {
  auto campus = make_campus({{5, 1}, {2}}, {1, 1});
  // B1 is missing from the quota map and keeps its baseline of 1.
  const auto alloc = doors_restricted(campus.snapshot, campus.registry, {{kB0, 2}});
  CHECK(alloc.stations(kB0) == 2);
  CHECK(alloc.stations(kB1) == 1);
  CHECK(doors_restricted(campus.snapshot, campus.registry).total() == 2);
  CHECK_THROWS_AS(doors_restricted(campus.snapshot, campus.registry, {{BuildingId("nope"), 1}}),
                  LookupError);
  CHECK_THROWS_AS(doors_restricted(campus.snapshot, campus.registry, {{kB0, -1}}), ArgumentError);
}

TEST_CASE("restricted on the fixture concentrates Freeman stations at the main door") {
  auto reg_in = testing::open_data("campus_registry.csv");
  const auto reg = load_registry(reg_in).value;
  auto dem_in = testing::open_data("demand_2021-W06.csv");
  const auto snap = load_demand(dem_in, reg).value;
  const BuildingId freeman("freeman_hall");
  const auto alloc = doors_restricted(snap, reg, {{freeman, 3}});
  const auto x = door_stations(alloc, freeman);
  REQUIRE(x.size() == 10);
  CHECK(x[0] == 2);
  CHECK(x[7] == 1);
  CHECK(std::accumulate(x.begin(), x.end(), Count{0}) == 3);
}

TEST_CASE("unrestricted examples") {
  auto campus = make_campus({{10, 8}, {5}});
  CHECK(door_coverage(campus.snapshot, doors_unrestricted(campus.snapshot, campus.registry, 2)) ==
        15);
  const auto three = doors_unrestricted(campus.snapshot, campus.registry, 3);
  CHECK(door_coverage(campus.snapshot, three) == 23);
  CHECK(door_stations(three, kB0) == std::vector<Count>{1, 1});
  CHECK(three.model_tag() == ModelTag::kDoorUnrestricted4);
  CHECK_THROWS_AS(doors_unrestricted(campus.snapshot, campus.registry, 1), InfeasibleError);
  CHECK_THROWS_AS(doors_unrestricted(campus.snapshot, campus.registry, 4), InfeasibleError);
}

TEST_CASE("unrestricted on the fixture covers every building") {
  auto reg_in = testing::open_data("campus_registry.csv");
  const auto reg = load_registry(reg_in).value;
  auto dem_in = testing::open_data("demand_2021-W06.csv");
  const auto snap = load_demand(dem_in, reg).value;
  const auto alloc = doors_unrestricted(snap, reg, 102);
  CHECK(alloc.total() == 102);
  for (const auto& bc : alloc.per_building()) CHECK(bc.stations >= 1);
  for (const auto& da : *alloc.per_door()) CHECK(da.stations <= 1);
}

TEST_CASE("door allocators match exhaustive search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Count> d(static_cast<std::size_t>(testing::uniform(rng, 1, 6)));
    for (auto& v : d) v = testing::uniform(rng, 0, 50);
    auto campus = make_campus({d});
    for (Count s = 0; s <= 2 * static_cast<Count>(d.size()); ++s) {
      const auto alloc = doors_restricted(campus.snapshot, campus.registry, {{kB0, s}}, 2);
      CHECK(door_coverage(campus.snapshot, alloc) == oracle::restricted_optimum(d, s, 2));
      // Exchange certificate: no busier door holds fewer stations than a quieter one.
      const auto x = door_stations(alloc, kB0);
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (d[i] > d[j]) CHECK_FALSE((x[i] < 2 && x[j] > 0));
        }
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<Count>> doors(static_cast<std::size_t>(testing::uniform(rng, 1, 4)));
    Count total = 0;
    for (auto& b : doors) {
      b.resize(static_cast<std::size_t>(testing::uniform(rng, 1, 4)));
      for (auto& v : b) v = testing::uniform(rng, 0, 40);
      total += static_cast<Count>(b.size());
    }
    auto campus = make_campus(doors);
    for (Count n = static_cast<Count>(doors.size()); n <= total; ++n) {
      const auto alloc = doors_unrestricted(campus.snapshot, campus.registry, n);
      CHECK(alloc.total() == n);
      CHECK(door_coverage(campus.snapshot, alloc) == oracle::unrestricted_optimum(doors, n));
    }
  }
}

}  // namespace
}  // namespace stationplan
