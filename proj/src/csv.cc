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

#include "csv.h"

#include <charconv>
#include <cmath>
#include <iterator>

#include "stationplan/errors.h"

namespace stationplan::csv {

std::vector<Record> read_all(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::string_view s = text;
  if (s.starts_with("\xEF\xBB\xBF")) s.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  std::size_t line = 1;
  bool in_quotes = false;
  bool field_started = false;
  current.line = line;

  auto end_record = [&] {
    if (field_started || !current.fields.empty() || !field.empty()) {
      current.fields.push_back(std::move(field));
      records.push_back(std::move(current));
    }
    current = Record{};
    field.clear();
    field_started = false;
  };

  for (std::size_t k = 0; k < s.size(); ++k) {
    const char ch = s[k];
    if (in_quotes) {
      if (ch == '"') {
        if (k + 1 < s.size() && s[k + 1] == '"') {
          field.push_back('"');
          ++k;
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        if (k + 1 < s.size() && s[k + 1] == '\n') break;
        field.push_back(ch);
        break;
      case '\n':
        end_record();
        current.line = ++line;
        break;
      default:
        field.push_back(ch);
        field_started = true;
    }
  }
  if (in_quotes) {
    throw DataError("line " + std::to_string(current.line) + ": unterminated quoted field");
  }
  end_record();
  return records;
}

std::vector<Record> read_with_header(std::istream& in, std::span<const std::string_view> expected) {
  auto records = read_all(in);
  auto describe = [&] {
    std::string h;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k) h += ',';
      h += expected[k];
    }
    return h;
  };
  if (records.empty()) throw DataError("missing header row; expected '" + describe() + "'");
  const auto& header = records.front().fields;
  bool ok = header.size() == expected.size();
  for (std::size_t k = 0; ok && k < header.size(); ++k) ok = header[k] == expected[k];
  if (!ok) throw DataError("line 1: unexpected header; expected '" + describe() + "'");
  records.erase(records.begin());
  return records;
}

void write_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out << ',';
    const std::string& f = fields[k];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (char ch : f) {
      if (ch == '"') out << '"';
      out << ch;
    }
    out << '"';
  }
  out << '\n';
}

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view text) {
  double value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace stationplan::csv
