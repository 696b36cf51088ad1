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

// Minimal RFC 4180 reader/writer: comma delimiter, double-quote escaping,
// \n or \r\n line endings, optional UTF-8 BOM.

#ifndef STATIONPLAN_SRC_CSV_H_
#define STATIONPLAN_SRC_CSV_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stationplan::csv {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// Blank lines are skipped. Throws DataError on an unterminated quote.
std::vector<Record> read_all(std::istream& in);

// Throws DataError unless the first record equals `expected` exactly.
// Returns the remaining records.
std::vector<Record> read_with_header(std::istream& in, std::span<const std::string_view> expected);

void write_row(std::ostream& out, std::span<const std::string> fields);

std::optional<std::int64_t> parse_int(std::string_view text);
std::optional<double> parse_double(std::string_view text);

}  // namespace stationplan::csv

#endif  // STATIONPLAN_SRC_CSV_H_
