/* Copyright 2026 The Meadow Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MEADOW_REPORT_HPP_
#define MEADOW_REPORT_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meadow {

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

// Result of a CLI command: ordered key/value fields plus named tables.
struct Report {
  std::string command;
  int status = 0;  // process exit code: 0 ok, 1 domain failure
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<ReportTable> tables;

  void set(std::string key, std::string value);
  // First value stored under key, or nullptr.
  const std::string* get(std::string_view key) const;
  const ReportTable* table(std::string_view name) const;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { kHuman, kMachine };

// Machine form is line oriented, one "key: value" per line:
//
//   command: invtable
//   status: 0
//   order: 10
//   table: inverses
//   columns: element<TAB>inverse
//   row: 0<TAB>0
//   end: inverses
//
// Field keys may not be command/status/table/columns/row/end, may not
// contain ':' or whitespace, and no value may contain a newline; cells may
// not contain tabs. render() throws ArgumentError on violations.
// Human form prints the fields as "key: value" and tables as aligned
// columns.
std::string render(const Report& report, Format format);

// Inverse of render(report, Format::kMachine). Throws ParseError.
Report parse_machine(std::string_view text);

}  // namespace meadow

#endif  // MEADOW_REPORT_HPP_
