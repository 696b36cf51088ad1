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
#include "stationplan/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "stationplan/coverage_solver.h"
#include "stationplan/door_allocator.h"
#include "stationplan/errors.h"
#include "stationplan/heuristic.h"
#include "stationplan/ingest.h"
#include "stationplan/report.h"
#include "stationplan/target_allocator.h"

namespace stationplan::cli {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

void print_warnings(std::ostream& err, const std::string& path, const IngestReport& report) {
  for (const auto& w : report.warnings) {
    err << path << ": line " << w.row << ": " << w.message << '\n';
  }
  if (report.rows_rejected > 0) {
    err << path << ": rejected " << report.rows_rejected << " of " << report.rows_read
        << " rows\n";
  }
}

struct Options {
  std::string registry;
  std::string demand;
  std::optional<std::string> week;
  std::vector<std::string> weeks;
  std::optional<Count> total;
  Count pumps = kDefaultPumpsPerStation;
  std::optional<std::string> quotas;
  bool use_baseline = false;
  Count cap = kDefaultMaxPerDoor;
  std::string instance;
  std::size_t stations = 0;
  double threshold = 0;
  std::string baseline;
  std::string candidate;
  std::string model;
  std::string view = "histogram";
  std::string format;
  std::optional<std::string> out;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& err)
      : opt_(opt), err_(err), strict_(strict_from_env()) {}

  CampusRegistry registry() {
    auto in = open_input(opt_.registry);
    auto loaded = load_registry(in, {strict_});
    print_warnings(err_, opt_.registry, loaded.report);
    return std::move(loaded.value);
  }

  DemandSnapshot snapshot(const CampusRegistry& reg) {
    auto in = open_input(opt_.demand);
    DemandOptions options;
    options.strict = strict_;
    options.week = opt_.week;
    auto loaded = load_demand(in, reg, options);
    print_warnings(err_, opt_.demand, loaded.report);
    return std::move(loaded.value);
  }

  std::vector<DemandSnapshot> snapshots(const CampusRegistry& reg) {
    auto in = open_input(opt_.demand);
    auto loaded = load_demand_weeks(in, reg, {strict_});
    print_warnings(err_, opt_.demand, loaded.report);
    if (opt_.weeks.empty()) return std::move(loaded.value);
    std::vector<DemandSnapshot> picked;
    for (const auto& w : opt_.weeks) {
      auto it = std::find_if(loaded.value.begin(), loaded.value.end(),
                             [&](const DemandSnapshot& s) { return s.label() == w; });
      if (it == loaded.value.end()) {
        throw DataError("week '" + w + "' does not appear in '" + opt_.demand + "'");
      }
      picked.push_back(*it);
    }
    return picked;
  }

  std::map<BuildingId, Count> quotas(const CampusRegistry& reg) {
    if (!opt_.quotas) {
      std::map<BuildingId, Count> q;
      for (const auto& rec : reg.buildings()) q.emplace(rec.id, rec.baseline_stations);
      return q;
    }
    auto in = open_input(*opt_.quotas);
    auto loaded = load_quotas(in, {strict_});
    print_warnings(err_, *opt_.quotas, loaded.report);
    return std::move(loaded.value);
  }

  BuildingAllocation allocation(const std::string& path, ModelTag tag) {
    auto in = open_input(path);
    auto loaded = load_allocation(in, tag, {strict_});
    print_warnings(err_, path, loaded.report);
    return std::move(loaded.value);
  }

  Count required_total(const char* model) const {
    if (!opt_.total) throw ArgumentError(std::string(model) + " requires --total");
    return *opt_.total;
  }

  // Allocator for a named campus model over this session's registry.
  Allocator allocator(const std::string& model, const CampusRegistry& reg) {
    switch (parse_model_tag(model)) {
      case ModelTag::kHeuristic0: {
        const Count n = required_total("heuristic");
        return [&reg, n](const DemandSnapshot& s) { return heuristic_allocate(s, reg, n); };
      }
      case ModelTag::kTarget2: {
        const Count n = required_total("target");
        const Count u = opt_.pumps;
        return [&reg, n, u](const DemandSnapshot& s) { return target_allocate(s, reg, n, u); };
      }
      case ModelTag::kDoorRestricted3: {
        auto q = quotas(reg);
        const Count cap = opt_.cap;
        return [&reg, q, cap](const DemandSnapshot& s) { return doors_restricted(s, reg, q, cap); };
      }
      case ModelTag::kDoorUnrestricted4: {
        const Count n = required_total("doors-unrestricted");
        return [&reg, n](const DemandSnapshot& s) { return doors_unrestricted(s, reg, n); };
      }
      case ModelTag::kBaseline:
        break;
    }
    throw ArgumentError("model '" + model + "' cannot be run");
  }

 private:
  const Options& opt_;
  std::ostream& err_;
  bool strict_;
};

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (!opt.out) {
    out << text;
    return;
  }
  std::ofstream file(*opt.out, std::ios::binary);
  if (!file) throw DataError("cannot write '" + *opt.out + "'");
  file << text;
}

Format format_or(const Options& opt, Format fallback) {
  return opt.format.empty() ? fallback : parse_format(opt.format);
}

void add_campus_inputs(CLI::App* cmd, Options& opt) {
  cmd->add_option("--registry", opt.registry, "Campus registry CSV")->required();
  cmd->add_option("--demand", opt.demand, "Door-access demand CSV")->required();
}

void add_output(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out, "Write results to this file instead of stdout");
  cmd->add_option("--format", opt.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_model_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--total", opt.total, "Total stations N");
  cmd->add_option("--pumps", opt.pumps, "Pumps per station u")->check(CLI::PositiveNumber);
  auto* quotas = cmd->add_option("--quotas", opt.quotas, "Per-building quota CSV");
  cmd->add_flag("--use-baseline", opt.use_baseline, "Quotas from registry baseline")
      ->excludes(quotas);
  cmd->add_option("--cap", opt.cap, "Maximum stations per door")->check(CLI::PositiveNumber);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Hand-sanitizer station placement models", "stationplan"};
  app.require_subcommand(1);

  auto* heuristic = app.add_subcommand("heuristic", "Demand-proportional ceiling heuristic");
  add_campus_inputs(heuristic, opt);
  heuristic->add_option("--week", opt.week, "Week label to select");
  heuristic->add_option("--total", opt.total, "Total stations N")->required();
  add_output(heuristic, opt);

  auto* cover = app.add_subcommand("cover", "Maximal classroom coverage with p stations");
  cover->add_option("--instance", opt.instance, "Travel-time CSV")->required();
  cover->add_option("--stations", opt.stations, "Stations p")->required();
  cover->add_option("--threshold", opt.threshold, "Coverage threshold T in seconds")->required();
  add_output(cover, opt);

  auto* threshold = app.add_subcommand("cover-threshold", "Min-max travel time for p stations");
  threshold->add_option("--instance", opt.instance, "Travel-time CSV")->required();
  threshold->add_option("--stations", opt.stations, "Stations p")->required();
  add_output(threshold, opt);

  auto* target = app.add_subcommand("target", "Quadratic target-coverage building allocation");
  add_campus_inputs(target, opt);
  target->add_option("--week", opt.week, "Week label to select");
  target->add_option("--total", opt.total, "Total stations N")->required();
  target->add_option("--pumps", opt.pumps, "Pumps per station u")->check(CLI::PositiveNumber);
  add_output(target, opt);

  auto* restricted = app.add_subcommand("doors-restricted", "Door placement with fixed quotas");
  add_campus_inputs(restricted, opt);
  restricted->add_option("--week", opt.week, "Week label to select");
  auto* quotas = restricted->add_option("--quotas", opt.quotas, "Per-building quota CSV");
  restricted->add_flag("--use-baseline", opt.use_baseline, "Quotas from registry baseline")
      ->excludes(quotas);
  restricted->add_option("--cap", opt.cap, "Maximum stations per door")
      ->check(CLI::PositiveNumber);
  add_output(restricted, opt);

  auto* unrestricted = app.add_subcommand("doors-unrestricted", "Campus-wide door placement");
  add_campus_inputs(unrestricted, opt);
  unrestricted->add_option("--week", opt.week, "Week label to select");
  unrestricted->add_option("--total", opt.total, "Total stations N")->required();
  add_output(unrestricted, opt);

  auto* diff_cmd = app.add_subcommand("diff", "Compare two allocation CSVs");
  diff_cmd->add_option("--baseline", opt.baseline, "Baseline allocation CSV")->required();
  diff_cmd->add_option("--candidate", opt.candidate, "Candidate allocation CSV")->required();
  diff_cmd->add_option("--view", opt.view, "histogram or table")
      ->check(CLI::IsMember({"histogram", "table"}));
  add_output(diff_cmd, opt);

  auto* sens = app.add_subcommand("sensitivity", "Re-run a model across weeks");
  add_campus_inputs(sens, opt);
  sens->add_option("--model", opt.model, "heuristic, target, doors-restricted, doors-unrestricted")
      ->required();
  sens->add_option("--week", opt.weeks, "Restrict to these weeks (repeatable)");
  add_model_flags(sens, opt);
  add_output(sens, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }

  try {
    Session session(opt, err);
    if (*heuristic) {
      const auto reg = session.registry();
      const auto alloc = heuristic_allocate(session.snapshot(reg), reg, *opt.total);
      emit(opt, out, render(alloc, format_or(opt, Format::kCsv)));
    } else if (*cover) {
      auto in = open_input(opt.instance);
      const auto instance = load_coverage_instance(in);
      const auto sol = solve_max_coverage(instance, opt.stations, opt.threshold);
      emit(opt, out, render(instance, sol, format_or(opt, Format::kText)));
    } else if (*threshold) {
      auto in = open_input(opt.instance);
      const auto instance = load_coverage_instance(in);
      const auto sol = min_max_threshold(instance, opt.stations);
      emit(opt, out, render(instance, sol, format_or(opt, Format::kText)));
    } else if (*target) {
      const auto reg = session.registry();
      const auto alloc = target_allocate(session.snapshot(reg), reg, *opt.total, opt.pumps);
      emit(opt, out, render(alloc, format_or(opt, Format::kCsv)));
    } else if (*restricted) {
      const auto reg = session.registry();
      const auto alloc = doors_restricted(session.snapshot(reg), reg, session.quotas(reg), opt.cap);
      emit(opt, out, render(alloc, format_or(opt, Format::kCsv)));
    } else if (*unrestricted) {
      const auto reg = session.registry();
      const auto alloc = doors_unrestricted(session.snapshot(reg), reg, *opt.total);
      emit(opt, out, render(alloc, format_or(opt, Format::kCsv)));
    } else if (*diff_cmd) {
      const auto base = session.allocation(opt.baseline, ModelTag::kBaseline);
      const auto cand = session.allocation(opt.candidate, ModelTag::kBaseline);
      const DiffView view = opt.view == "table" ? DiffView::kTable : DiffView::kHistogram;
      emit(opt, out, render(diff(cand, base), format_or(opt, Format::kText), view));
    } else if (*sens) {
      const auto reg = session.registry();
      const auto weeks = session.snapshots(reg);
      const auto report = sensitivity(session.allocator(opt.model, reg), weeks, reg);
      emit(opt, out, render(report, format_or(opt, Format::kText)));
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace stationplan::cli
