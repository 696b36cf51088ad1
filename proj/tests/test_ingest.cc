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
#include <map>
#include <sstream>

#include "doctest.h"
#include "stationplan/errors.h"
#include "stationplan/ingest.h"
#include "test_support.h"

namespace stationplan {
namespace {

constexpr const char* kRegistryHeader = "building_id,display_name,door_count,baseline_stations\n";
constexpr const char* kDemandHeader = "building_id,door_label,week,event_count\n";

CampusRegistry registry_of(const std::string& body) {
  std::istringstream in(std::string(kRegistryHeader) + body);
  return load_registry(in, {true}).value;
}

TEST_CASE("appendix registry fixture") {
  auto in = testing::open_data("campus_registry.csv");
  auto loaded = load_registry(in, {true});
  CHECK(loaded.value.size() == 36);
  CHECK(loaded.value.total_baseline() == 102);
  CHECK(loaded.report.rows_read == 36);
  CHECK(loaded.report.rows_rejected == 0);
  CHECK(loaded.value.buildings()[0].id.str() == "academic_success_center");
  CHECK(loaded.value.at(BuildingId("freeman_hall")).door_count == 10);
}

TEST_CASE("registry loader edge cases") {
  SUBCASE("header only") {
    std::istringstream in(kRegistryHeader);
    auto loaded = load_registry(in);
    CHECK(loaded.value.empty());
    CHECK(loaded.report.rows_read == 0);
  }
  SUBCASE("duplicate id names both lines") {
    std::istringstream in(std::string(kRegistryHeader) + "a,A,1,1\nb,B,1,1\na,A2,2,0\n");
    try {
      load_registry(in, {true});
      FAIL("expected DataError");
    } catch (const DataError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("'a'") != std::string::npos);
      CHECK(msg.find("lines 2 and 4") != std::string::npos);
    }
  }
  SUBCASE("zero doors is a hard error even when lenient") {
    std::istringstream in(std::string(kRegistryHeader) + "a,A,0,1\n");
    CHECK_THROWS_AS(load_registry(in, {false}), DataError);
  }
  SUBCASE("malformed rows are rejected unless strict") {
    const std::string body = std::string(kRegistryHeader) + "a,A,1,1\nb,B,x,1\nc,C,1\n";
    std::istringstream lenient(body);
    auto loaded = load_registry(lenient, {false});
    CHECK(loaded.value.size() == 1);
    CHECK(loaded.report.rows_read == 3);
    CHECK(loaded.report.rows_rejected == 2);
    REQUIRE(loaded.report.warnings.size() == 2);
    CHECK(loaded.report.warnings[0].row == 3);
    std::istringstream strict(body);
    CHECK_THROWS_AS(load_registry(strict, {true}), DataError);
  }
  SUBCASE("wrong header") {
    std::istringstream in("id,name\n");
    CHECK_THROWS_AS(load_registry(in), DataError);
  }
  SUBCASE("quoted names and CRLF") {
    std::istringstream in(
        "building_id,display_name,door_count,baseline_stations\r\n"
        "lee,\"Lee Hall, \"\"3\"\" wings\",3,6\r\n");
    auto loaded = load_registry(in, {true});
    CHECK(loaded.value.buildings()[0].display_name == "Lee Hall, \"3\" wings");
    CHECK(loaded.value.buildings()[0].baseline_stations == 6);
  }
}

TEST_CASE("registry row order is preserved") {
  const auto ab = registry_of("a,A,1,1\nb,B,1,1\n");
  const auto ba = registry_of("b,B,1,1\na,A,1,1\n");
  CHECK(ab.buildings()[0].id.str() == "a");
  CHECK(ba.buildings()[0].id.str() == "b");
  CHECK_FALSE(ab == ba);
}

TEST_CASE("demand loader") {
  const auto reg = registry_of("B1,One,2,1\nB2,Two,3,1\n");
  SUBCASE("direct mapping") {
    std::istringstream in(std::string(kDemandHeader) + "B1,main,W1,50\nB1,side,W1,30\n");
    auto snap = load_demand(in, reg, {}).value;
    CHECK(snap.label() == "W1");
    CHECK(building_demand(snap, BuildingId("B1")) == 80);
    CHECK(snap.count({BuildingId("B1"), 0}) == 50);
    CHECK(snap.count({BuildingId("B1"), 1}) == 30);
    CHECK(snap.door_label({BuildingId("B1"), 1}) == "side");
    CHECK(building_demand(snap, BuildingId("B2")) == 0);
  }
  SUBCASE("duplicate rows sum") {
    std::istringstream in(std::string(kDemandHeader) + "B1,main,W1,20\nB1,main,W1,22\n");
    CHECK(load_demand(in, reg, {}).value.count({BuildingId("B1"), 0}) == 42);
  }
  SUBCASE("unknown building") {
    const std::string body = std::string(kDemandHeader) + "B1,main,W1,20\nZZ,main,W1,5\n";
    std::istringstream lenient(body);
    auto loaded = load_demand(lenient, reg, {});
    CHECK(loaded.report.rows_rejected == 1);
    CHECK(loaded.report.warnings[0].message.find("'ZZ'") != std::string::npos);
    std::istringstream strict(body);
    DemandOptions opt;
    opt.strict = true;
    CHECK_THROWS_AS(load_demand(strict, reg, opt), DataError);
  }
  SUBCASE("negative count is always hard") {
    std::istringstream in(std::string(kDemandHeader) + "B1,main,W1,-3\n");
    CHECK_THROWS_AS(load_demand(in, reg, {}), DataError);
  }
  SUBCASE("too many door labels") {
    std::istringstream in(std::string(kDemandHeader) + "B1,a,W1,1\nB1,b,W1,1\nB1,c,W1,1\n");
    try {
      load_demand(in, reg, {});
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("'c'") != std::string::npos);
    }
  }
  SUBCASE("mixed weeks need a selector") {
    const std::string body =
        std::string(kDemandHeader) + "B1,main,W1,1\nB1,main,W2,4\nB2,x,W2,5\n";
    std::istringstream mixed(body);
    CHECK_THROWS_AS(load_demand(mixed, reg, {}), DataError);

    std::istringstream pick(body);
    DemandOptions opt;
    opt.week = "W2";
    auto snap = load_demand(pick, reg, opt).value;
    CHECK(snap.label() == "W2");
    CHECK(snap.total_demand() == 9);

    std::istringstream agg(body);
    DemandOptions all;
    all.aggregate_weeks = true;
    auto total = load_demand(agg, reg, all).value;
    CHECK(total.label() == "W1+W2");
    CHECK(total.total_demand() == 10);

    std::istringstream missing(body);
    DemandOptions none;
    none.week = "W9";
    CHECK_THROWS_AS(load_demand(missing, reg, none), DataError);
  }
}

TEST_CASE("demand rows commute") {
  const auto reg = registry_of("B1,One,3,1\nB2,Two,2,1\n");
  std::vector<std::string> rows = {"B1,a,W,5", "B2,x,W,7", "B1,b,W,2", "B1,a,W,9", "B2,y,W,1"};
  // Indices follow first-seen order, so compare totals keyed by label.
  auto by_label = [&](const DemandSnapshot& snap) {
    std::map<std::pair<std::string, std::string>, Count> out;
    for (std::size_t k = 0; k < snap.building_count(); ++k) {
      for (std::size_t i = 0; i < snap.door_counts(k).size(); ++i) {
        out[{snap.building_ids()[k].str(), snap.door_labels(k)[i]}] = snap.door_counts(k)[i];
      }
    }
    return out;
  };
  std::optional<std::map<std::pair<std::string, std::string>, Count>> first;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::shuffle(rows.begin(), rows.end(), rng);
    std::string body = kDemandHeader;
    for (const auto& r : rows) body += r + "\n";
    std::istringstream in(body);
    const auto totals = by_label(load_demand(in, reg, {}).value);
    CHECK(totals.at({"B1", "a"}) == 14);
    if (!first) first = totals;
    CHECK(totals == *first);
  }
}

TEST_CASE("multi-week fixture") {
  auto rin = testing::open_data("campus_registry.csv");
  const auto reg = load_registry(rin, {true}).value;
  auto din = testing::open_data("demand_weeks.csv");
  auto weeks = load_demand_weeks(din, reg, {true}).value;
  REQUIRE(weeks.size() == 4);
  CHECK(weeks[0].label() == "2021-W06");
  CHECK(weeks[3].label() == "2021-W16");
  for (const auto& w : weeks) CHECK(w.bound_to(reg));
}

TEST_CASE("coverage instance loader") {
  SUBCASE("fixture shape") {
    auto in = testing::open_data("freeman_coverage.csv");
    const auto inst = load_coverage_instance(in);
    CHECK(inst.classroom_count() == 3);
    CHECK(inst.site_count() == 10);
    CHECK(inst.seconds(0, 0) == 8);
    CHECK(inst.seconds(2, 9) == 8);
  }
  std::string full = "classroom_id,site_id,seconds\n";
  for (int c = 0; c < 3; ++c) {
    for (int j = 0; j < 10; ++j) {
      full += "c" + std::to_string(c) + ",s" + std::to_string(j) + "," + std::to_string(c + j) + "\n";
    }
  }
  SUBCASE("missing pair is named") {
    const std::string body = full.substr(0, full.rfind("c2,s9"));
    std::istringstream in(body);
    try {
      load_coverage_instance(in);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("(c2, s9)") != std::string::npos);
    }
  }
  SUBCASE("negative seconds") {
    std::string body = full;
    body.replace(body.find("c1,s4,5"), 7, "c1,s4,-1");
    std::istringstream in(body);
    CHECK_THROWS_AS(load_coverage_instance(in), DataError);
  }
  SUBCASE("duplicate pair") {
    std::istringstream in(full + "c0,s0,1\n");
    CHECK_THROWS_AS(load_coverage_instance(in), DataError);
  }
  SUBCASE("fractional seconds") {
    std::istringstream in("classroom_id,site_id,seconds\nr,s,2.5\n");
    CHECK(load_coverage_instance(in).seconds(0, 0) == 2.5);
  }
}

TEST_CASE("allocation loader") {
  SUBCASE("building level") {
    std::istringstream in("building_id,stations\na,2\nb,0\n");
    auto alloc = load_allocation(in).value;
    CHECK(alloc.stations(BuildingId("a")) == 2);
    CHECK_FALSE(alloc.has_per_door());
  }
  SUBCASE("door level aggregates") {
    std::istringstream in("building_id,door_label,stations\na,main,2\na,side,1\nb,x,0\n");
    auto alloc = load_allocation(in, ModelTag::kDoorRestricted3).value;
    CHECK(alloc.stations(BuildingId("a")) == 3);
    CHECK(alloc.stations(BuildingId("b")) == 0);
    REQUIRE(alloc.has_per_door());
    CHECK((*alloc.per_door())[1].door.door_index == 1);
  }
  SUBCASE("duplicate building row") {
    std::istringstream in("building_id,stations\na,2\na,1\n");
    CHECK_THROWS_AS(load_allocation(in), DataError);
  }
  SUBCASE("bad header") {
    std::istringstream in("building,count\n");
    CHECK_THROWS_AS(load_allocation(in), DataError);
  }
}

TEST_CASE("quota loader") {
  std::istringstream in("building_id,quota\na,3\nb,0\n");
  auto q = load_quotas(in).value;
  CHECK(q.at(BuildingId("a")) == 3);
  CHECK(q.at(BuildingId("b")) == 0);
}

TEST_CASE("appendix table fixture") {
  auto in = testing::open_data("appendix_table1.csv");
  const auto table = load_appendix_table(in);
  CHECK(table.display_names.size() == 36);
  CHECK(table.initial.size() == 36);
  CHECK(table.initial.stations(BuildingId("college_of_business_building")) == 20);
  CHECK(table.initial.stations(BuildingId("cooper_library")) == 4);
  CHECK(table.heuristic.stations(BuildingId("fluor_daniel")) == 2);
  CHECK(table.building_allocation.stations(BuildingId("brackett_hall")) == 4);
  CHECK(table.door_unrestricted.stations(BuildingId("administrative_services_building")) == 7);

  // The per-column allocation files carry the same numbers.
  const std::pair<const char*, const BuildingAllocation*> columns[] = {
      {"appendix_initial.csv", &table.initial},
      {"appendix_heuristic.csv", &table.heuristic},
      {"appendix_building_allocation.csv", &table.building_allocation},
      {"appendix_door_unrestricted.csv", &table.door_unrestricted}};
  for (const auto& [file, column] : columns) {
    auto cin = testing::open_data(file);
    const auto alloc = load_allocation(cin, column->model_tag(), {true}).value;
    CHECK(alloc == *column);
  }
}

TEST_CASE("round trips are identity") {
  auto rin = testing::open_data("campus_registry.csv");
  const auto reg = load_registry(rin, {true}).value;
  std::ostringstream rout;
  write_registry(rout, reg);
  std::istringstream rback(rout.str());
  CHECK(load_registry(rback, {true}).value == reg);

  auto din = testing::open_data("demand_weeks.csv");
  const auto weeks = load_demand_weeks(din, reg, {true}).value;
  std::ostringstream dout;
  write_demand(dout, weeks);
  std::istringstream dback(dout.str());
  CHECK(load_demand_weeks(dback, reg, {true}).value == weeks);

  std::ostringstream single;
  write_demand(single, weeks[1]);
  std::istringstream sback(single.str());
  CHECK(load_demand(sback, reg, {true}).value == weeks[1]);

  auto cin = testing::open_data("freeman_coverage.csv");
  const auto inst = load_coverage_instance(cin);
  std::ostringstream cout;
  write_coverage_instance(cout, inst);
  std::istringstream cback(cout.str());
  CHECK(load_coverage_instance(cback) == inst);
}

TEST_CASE("snapshot with unseen doors round-trips through default labels") {
  SUBCASE("default label avoids a taken name") {
    const auto two = registry_of("B1,One,2,1\n");
    std::istringstream in(std::string(kDemandHeader) + "B1,#1,W1,4\n");
    const auto snap = load_demand(in, two, {}).value;
    CHECK(snap.door_label({BuildingId("B1"), 0}) == "#1");
    CHECK(snap.door_label({BuildingId("B1"), 1}) == "#1_");
  }
  const auto reg = registry_of("B1,One,3,1\n");
  std::istringstream in(std::string(kDemandHeader) + "B1,main,W1,4\n");
  const auto snap = load_demand(in, reg, {}).value;
  CHECK(snap.door_label({BuildingId("B1"), 2}) == "#2");
  std::ostringstream out;
  write_demand(out, snap);
  std::istringstream back(out.str());
  auto loaded = load_demand(back, reg, {true});
  CHECK(loaded.value == snap);
}

}  // namespace
}  // namespace stationplan
