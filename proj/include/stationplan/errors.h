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

#ifndef STATIONPLAN_ERRORS_H_
#define STATIONPLAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace stationplan {

// Error taxonomy. The CLI maps each class to a distinct exit status, so
// every throw site picks the class by what the caller can do about it.

// Bad argument to an operation (p out of range, total <= 0, ...).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// The model has no feasible solution for the given parameters.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Input data is malformed or inconsistent (bad CSV, unknown building, ...).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A lookup by identifier failed. Treated as a data error.
class LookupError : public DataError {
 public:
  explicit LookupError(const std::string& what) : DataError(what) {}
};

}  // namespace stationplan

#endif  // STATIONPLAN_ERRORS_H_
