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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stationplan/cli.h"
#include "stationplan/coverage_solver.h"
#include "stationplan/door_allocator.h"
#include "stationplan/errors.h"
#include "stationplan/heuristic.h"
#include "stationplan/ingest.h"
#include "stationplan/report.h"
#include "stationplan/target_allocator.h"

namespace py = pybind11;
using namespace stationplan;

namespace {

std::vector<std::pair<std::string, Count>> building_rows(const BuildingAllocation& a) {
  std::vector<std::pair<std::string, Count>> out;
  for (const auto& bc : a.per_building()) out.emplace_back(bc.building.str(), bc.stations);
  return out;
}

std::optional<std::vector<std::tuple<std::string, std::size_t, std::string, Count>>> door_rows(
    const BuildingAllocation& a) {
  if (!a.has_per_door()) return std::nullopt;
  std::vector<std::tuple<std::string, std::size_t, std::string, Count>> out;
  for (const auto& d : *a.per_door()) {
    out.emplace_back(d.door.building.str(), d.door.door_index, d.label, d.stations);
  }
  return out;
}

std::map<BuildingId, Count> to_quotas(const std::map<std::string, Count>& q) {
  std::map<BuildingId, Count> out;
  for (const auto& [id, n] : q) out.emplace(BuildingId(id), n);
  return out;
}

Format format_of(const std::string& name) { return parse_format(name); }

}  // namespace

PYBIND11_MODULE(_stationplan, m) {
  m.doc() = "Sanitizer station placement models";

  auto data_error = py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<LookupError>(m, "LookupError", data_error.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

  py::class_<CampusRegistry>(m, "CampusRegistry")
      .def("__len__", &CampusRegistry::size)
      .def_property_readonly("total_baseline", &CampusRegistry::total_baseline)
      .def_property_readonly("total_doors", &CampusRegistry::total_doors)
      .def_property_readonly("building_ids", [](const CampusRegistry& r) {
        std::vector<std::string> ids;
        for (const auto& b : r.buildings()) ids.push_back(b.id.str());
        return ids;
      });

  py::class_<DemandSnapshot>(m, "DemandSnapshot")
      .def_property_readonly("label", &DemandSnapshot::label)
      .def_property_readonly("total_demand", &DemandSnapshot::total_demand)
      .def("building_demand",
           [](const DemandSnapshot& s, const std::string& id) {
             return s.building_demand(BuildingId(id));
           })
      .def("door_counts", [](const DemandSnapshot& s, const std::string& id) {
        const auto span = s.door_counts(BuildingId(id));
        return std::vector<Count>(span.begin(), span.end());
      });

  py::class_<CoverageInstance>(m, "CoverageInstance")
      .def_property_readonly("classroom_count", &CoverageInstance::classroom_count)
      .def_property_readonly("site_count", &CoverageInstance::site_count);

  py::class_<BuildingAllocation>(m, "BuildingAllocation")
      .def_property_readonly("model", [](const BuildingAllocation& a) {
        return std::string(to_string(a.model_tag()));
      })
      .def_property_readonly("total", &BuildingAllocation::total)
      .def_property_readonly("buildings", &building_rows)
      .def_property_readonly("doors", &door_rows)
      .def("stations",
           [](const BuildingAllocation& a, const std::string& id) {
             return a.stations(BuildingId(id));
           })
      .def("render", [](const BuildingAllocation& a, const std::string& format) {
        return render(a, format_of(format));
      }, py::arg("format") = "csv")
      .def("__eq__", [](const BuildingAllocation& a, const BuildingAllocation& b) { return a == b; });

  py::class_<CoverageSolution>(m, "CoverageSolution")
      .def_readonly("chosen_sites", &CoverageSolution::chosen_sites)
      .def_readonly("covered_classrooms", &CoverageSolution::covered_classrooms)
      .def_readonly("objective", &CoverageSolution::objective);

  py::class_<ThresholdSolution>(m, "ThresholdSolution")
      .def_readonly("threshold", &ThresholdSolution::threshold)
      .def_readonly("chosen_sites", &ThresholdSolution::chosen_sites);

  py::class_<AllocationDiff>(m, "AllocationDiff")
      .def_property_readonly("same", [](const AllocationDiff& d) { return d.summary.same; })
      .def_property_readonly("more", [](const AllocationDiff& d) { return d.summary.more; })
      .def_property_readonly("fewer", [](const AllocationDiff& d) { return d.summary.fewer; })
      .def_readonly("histogram", &AllocationDiff::histogram)
      .def("delta", [](const AllocationDiff& d, const std::string& id) {
        return d.delta(BuildingId(id));
      })
      .def("render", [](const AllocationDiff& d, const std::string& format, const std::string& view) {
        if (view != "histogram" && view != "table") {
          throw ArgumentError("unknown view '" + view + "'; use histogram or table");
        }
        return render(d, format_of(format), view == "table" ? DiffView::kTable : DiffView::kHistogram);
      }, py::arg("format") = "text", py::arg("view") = "histogram");

  m.def("load_registry", [](const std::string& text, bool strict) {
    std::istringstream in(text);
    return load_registry(in, {strict}).value;
  }, py::arg("text"), py::arg("strict") = false);

  m.def("load_demand", [](const std::string& text, const CampusRegistry& reg,
                          std::optional<std::string> week, bool strict) {
    std::istringstream in(text);
    DemandOptions opt;
    opt.strict = strict;
    opt.week = std::move(week);
    return load_demand(in, reg, opt).value;
  }, py::arg("text"), py::arg("registry"), py::arg("week") = py::none(), py::arg("strict") = false);

  m.def("load_demand_weeks", [](const std::string& text, const CampusRegistry& reg, bool strict) {
    std::istringstream in(text);
    return load_demand_weeks(in, reg, {strict}).value;
  }, py::arg("text"), py::arg("registry"), py::arg("strict") = false);

  m.def("load_coverage_instance", [](const std::string& text) {
    std::istringstream in(text);
    return load_coverage_instance(in);
  }, py::arg("text"));

  m.def("load_allocation", [](const std::string& text, bool strict) {
    std::istringstream in(text);
    return load_allocation(in, ModelTag::kBaseline, {strict}).value;
  }, py::arg("text"), py::arg("strict") = false);

  m.def("heuristic_allocate", &heuristic_allocate, py::arg("snapshot"), py::arg("registry"),
        py::arg("total"));
  m.def("target_allocate", &target_allocate, py::arg("snapshot"), py::arg("registry"),
        py::arg("total"), py::arg("pumps") = kDefaultPumpsPerStation);
  m.def("doors_restricted", [](const DemandSnapshot& s, const CampusRegistry& reg,
                               std::optional<std::map<std::string, Count>> quotas, Count cap) {
    if (!quotas) return doors_restricted(s, reg, cap);
    return doors_restricted(s, reg, to_quotas(*quotas), cap);
  }, py::arg("snapshot"), py::arg("registry"), py::arg("quotas") = py::none(),
        py::arg("max_per_door") = kDefaultMaxPerDoor);
  m.def("doors_unrestricted", &doors_unrestricted, py::arg("snapshot"), py::arg("registry"),
        py::arg("total"));
  m.def("door_coverage", &door_coverage, py::arg("snapshot"), py::arg("allocation"));
  m.def("target_objective", [](const DemandSnapshot& s, const BuildingAllocation& a, Count u) {
    // Python ints are unbounded; go through the decimal string.
    WideCount v = target_objective(s, a, u);
    const bool neg = v < 0;
    if (neg) v = -v;
    std::string digits;
    do {
      digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    } while (v > 0);
    return py::int_(py::str((neg ? "-" : "") + digits));
  }, py::arg("snapshot"), py::arg("allocation"), py::arg("pumps") = kDefaultPumpsPerStation);

  m.def("solve_max_coverage", &solve_max_coverage, py::arg("instance"), py::arg("p"),
        py::arg("threshold"));
  m.def("min_max_threshold", &min_max_threshold, py::arg("instance"), py::arg("p"));
  m.def("diff", &diff, py::arg("candidate"), py::arg("baseline"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
