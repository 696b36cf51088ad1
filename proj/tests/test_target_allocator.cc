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
#include "doctest.h"
#include "oracles.h"
#include "stationplan/errors.h"
#include "stationplan/ingest.h"
#include "stationplan/target_allocator.h"
#include "test_support.h"

namespace stationplan {
namespace {

using testing::make_building_campus;

std::vector<Count> counts(const BuildingAllocation& a) {
  std::vector<Count> out;
  for (const auto& bc : a.per_building()) out.push_back(bc.stations);
  return out;
}

TEST_CASE("target examples") {
  auto one = make_building_campus({500});
  CHECK(counts(target_allocate(one.snapshot, one.registry, 3)) == std::vector<Count>{1});

  auto two = make_building_campus({1000, 400});
  const auto alloc = target_allocate(two.snapshot, two.registry, 3);
  CHECK(counts(alloc) == std::vector<Count>{2, 1});
  CHECK(target_objective(two.snapshot, alloc) == 10000);
  CHECK(alloc.model_tag() == ModelTag::kTarget2);
}

TEST_CASE("target infeasible when stations run short of buildings") {
  auto campus = make_building_campus({1, 2, 3});
  try {
    target_allocate(campus.snapshot, campus.registry, 2);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(std::string(e.what()).find("short by 1") != std::string::npos);
  }
  CHECK_THROWS_AS(target_allocate(campus.snapshot, campus.registry, 3, 0), ArgumentError);
}

TEST_CASE("target leaves stations unused once every building is saturated") {
  auto campus = make_building_campus({1000, 10});
  const auto alloc = target_allocate(campus.snapshot, campus.registry, 50);
  CHECK(counts(alloc) == std::vector<Count>{2, 1});
  CHECK(alloc.total() < 50);
}

TEST_CASE("target on the campus fixture") {
  auto reg_in = testing::open_data("campus_registry.csv");
  const auto reg = load_registry(reg_in).value;
  auto dem_in = testing::open_data("demand_2021-W06.csv");
  const auto snap = load_demand(dem_in, reg).value;
  const auto alloc = target_allocate(snap, reg, reg.total_baseline());
  CHECK(alloc.size() == 36);
  CHECK(alloc.total() <= 102);
  for (const auto& bc : alloc.per_building()) CHECK(bc.stations >= 1);
}

TEST_CASE("target matches exhaustive search") {
  std::mt19937_64 rng(17);
  const Count pumps[] = {1, 10, 500};
  for (int trial = 0; trial < 200; ++trial) {
    const Count u = pumps[trial % 3];
    std::vector<Count> d(static_cast<std::size_t>(testing::uniform(rng, 1, 5)));
    for (auto& v : d) v = testing::uniform(rng, 0, 10 * u);
    const Count n = testing::uniform(rng, static_cast<Count>(d.size()), 10);
    auto campus = make_building_campus(d);
    const auto alloc = target_allocate(campus.snapshot, campus.registry, n, u);
    CHECK(alloc.total() <= n);
    for (const auto& bc : alloc.per_building()) CHECK(bc.stations >= 1);
    const oracle::Big got(static_cast<long long>(target_objective(campus.snapshot, alloc, u)));
    CHECK(got == oracle::target_optimum(d, n, u));
  }
}

TEST_CASE("target responds monotonically to one building's demand") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Count> d(4);
    for (auto& v : d) v = testing::uniform(rng, 0, 3000);
    const Count n = testing::uniform(rng, 4, 14);
    auto base = make_building_campus(d);
    const auto before = counts(target_allocate(base.snapshot, base.registry, n));
    d[1] += testing::uniform(rng, 1, 2000);
    auto bumped = make_building_campus(d);
    const auto after = counts(target_allocate(bumped.snapshot, bumped.registry, n));
    CHECK(after[1] >= before[1]);
  }
}

}  // namespace
}  // namespace stationplan
