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
#include "stationplan/coverage_solver.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>

#include "stationplan/errors.h"

namespace stationplan {
namespace {

// Fixed-width bitset over classrooms.
class ClassroomSet {
 public:
  explicit ClassroomSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void insert(std::size_t c) { words_[c / 64] |= std::uint64_t{1} << (c % 64); }
  bool contains(std::size_t c) const { return (words_[c / 64] >> (c % 64)) & 1U; }

  ClassroomSet& operator|=(const ClassroomSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  friend ClassroomSet operator|(ClassroomSet a, const ClassroomSet& b) { return a |= b; }

 private:
  std::vector<std::uint64_t> words_;
};

class SubsetSearch {
 public:
  SubsetSearch(std::vector<ClassroomSet> site_masks, std::vector<Count> weights, std::size_t p)
      : masks_(std::move(site_masks)), weights_(std::move(weights)), p_(p) {
    const std::size_t n = masks_.size();
    suffix_.assign(n + 1, ClassroomSet(weights_.size()));
    for (std::size_t j = n; j-- > 0;) suffix_[j] = suffix_[j + 1] | masks_[j];
  }

  CoverageSolution run() {
    ceiling_ = weight_of(suffix_[0]);
    current_.clear();
    best_value_ = -1;
    descend(0, ClassroomSet(weights_.size()));

    CoverageSolution sol;
    sol.chosen_sites = best_sites_;
    sol.objective = best_value_;
    ClassroomSet covered(weights_.size());
    for (std::size_t j : best_sites_) covered |= masks_[j];
    for (std::size_t c = 0; c < weights_.size(); ++c) {
      if (covered.contains(c)) sol.covered_classrooms.push_back(c);
    }
    return sol;
  }

 private:
  Count weight_of(const ClassroomSet& s) const {
    Count w = 0;
    for (std::size_t c = 0; c < weights_.size(); ++c) {
      if (s.contains(c)) w += weights_[c];
    }
    return w;
  }

  // Returns true once the incumbent reaches the global ceiling.
  bool descend(std::size_t start, const ClassroomSet& covered) {
    if (current_.size() == p_) {
      const Count value = weight_of(covered);
      if (value > best_value_) {
        best_value_ = value;
        best_sites_ = current_;
      }
      return best_value_ == ceiling_;
    }
    if (best_value_ >= 0 && weight_of(covered | suffix_[start]) <= best_value_) return false;
    const std::size_t last = masks_.size() - (p_ - current_.size());
    for (std::size_t j = start; j <= last; ++j) {
      current_.push_back(j);
      const bool done = descend(j + 1, covered | masks_[j]);
      current_.pop_back();
      if (done) return true;
    }
    return false;
  }

  std::vector<ClassroomSet> masks_;
  std::vector<Count> weights_;
  std::size_t p_;
  std::vector<ClassroomSet> suffix_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_sites_;
  Count best_value_ = -1;
  Count ceiling_ = 0;
};

void check_station_count(const CoverageInstance& instance, std::size_t p) {
  if (p < 1 || p > instance.site_count()) {
    throw ArgumentError("station count p = " + std::to_string(p) + " must be between 1 and " +
                        std::to_string(instance.site_count()) + " (number of candidate sites)");
  }
}

std::vector<ClassroomSet> site_masks(const CoverageInstance& instance,
                                     const std::function<bool(double)>& covers) {
  std::vector<ClassroomSet> masks(instance.site_count(), ClassroomSet(instance.classroom_count()));
  for (std::size_t j = 0; j < instance.site_count(); ++j) {
    for (std::size_t c = 0; c < instance.classroom_count(); ++c) {
      if (covers(instance.seconds(c, j))) masks[j].insert(c);
    }
  }
  return masks;
}

}  // namespace

CoverageSolution solve_max_coverage(const CoverageInstance& instance, std::size_t p,
                                    double threshold) {
  check_station_count(instance, p);
  const BinaryMatrix w = coverage_matrix(instance, threshold);
  std::vector<ClassroomSet> masks(instance.site_count(), ClassroomSet(instance.classroom_count()));
  for (std::size_t c = 0; c < w.rows(); ++c) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (w.at(c, j)) masks[j].insert(c);
    }
  }
  const auto weights = instance.classroom_weights();
  return SubsetSearch(std::move(masks), {weights.begin(), weights.end()}, p).run();
}

ThresholdSolution min_max_threshold(const CoverageInstance& instance, std::size_t p) {
  check_station_count(instance, p);
  const std::size_t rooms = instance.classroom_count();
  const std::vector<Count> unit(rooms, 1);

  auto full_cover = [&](double limit) {
    auto masks = site_masks(instance, [limit](double t) { return t <= limit; });
    return SubsetSearch(std::move(masks), unit, p).run();
  };

  if (rooms == 0) return {0.0, full_cover(0.0).chosen_sites};

  const auto times = instance.travel_seconds();
  std::vector<double> values(times.begin(), times.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // The largest entry is always feasible: every site then reaches every room.
  std::size_t lo = 0;
  std::size_t hi = values.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (full_cover(values[mid]).objective == static_cast<Count>(rooms)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {values[lo], full_cover(values[lo]).chosen_sites};
}

}  // namespace stationplan
