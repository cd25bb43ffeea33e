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

#include "meadow/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "meadow/errors.hpp"

namespace meadow {

void Report::set(std::string key, std::string value) {
  for (auto& [k, v] : fields) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  fields.emplace_back(std::move(key), std::move(value));
}

const std::string* Report::get(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

const ReportTable* Report::table(std::string_view name) const {
  for (const ReportTable& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

namespace {

constexpr std::string_view kReserved[] = {"command", "status", "table", "columns", "row", "end"};

void validate_key(const std::string& key) {
  if (key.empty() || key.find_first_of(": \t\n") != std::string::npos) {
    throw ArgumentError("invalid report key '" + key + "'");
  }
  if (std::find(std::begin(kReserved), std::end(kReserved), key) != std::end(kReserved)) {
    throw ArgumentError("report key '" + key + "' is reserved");
  }
}

void validate_value(const std::string& value) {
  if (value.find('\n') != std::string::npos) {
    throw ArgumentError("report values may not contain newlines");
  }
}

void validate_cell(const std::string& cell) {
  validate_value(cell);
  if (cell.find('\t') != std::string::npos) {
    throw ArgumentError("report cells may not contain tabs");
  }
}

std::string join_cells(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    validate_cell(cells[i]);
    if (i) out += '\t';
    out += cells[i];
  }
  return out;
}

std::vector<std::string> split_cells(std::string_view text) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = text.find('\t', start);
    cells.emplace_back(text.substr(start, tab == std::string_view::npos ? text.npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cells;
}

// Display width in code points, so that "≅" counts once.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string render_machine(const Report& r) {
  std::ostringstream out;
  validate_value(r.command);
  out << "command: " << r.command << "\n";
  out << "status: " << r.status << "\n";
  for (const auto& [key, value] : r.fields) {
    validate_key(key);
    validate_value(value);
    out << key << ": " << value << "\n";
  }
  for (const ReportTable& t : r.tables) {
    validate_value(t.name);
    out << "table: " << t.name << "\n";
    out << "columns: " << join_cells(t.columns) << "\n";
    for (const auto& row : t.rows) out << "row: " << join_cells(row) << "\n";
    out << "end: " << t.name << "\n";
  }
  return out.str();
}

std::string render_human(const Report& r) {
  std::ostringstream out;
  for (const auto& [key, value] : r.fields) out << key << ": " << value << "\n";
  for (const ReportTable& t : r.tables) {
    std::vector<std::size_t> widths(t.columns.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], width(row[i]));
      }
    };
    measure(t.columns);
    for (const auto& row : t.rows) measure(row);
    auto line = [&](const std::vector<std::string>& row) {
      std::string text = "  ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        text += row[i];
        if (i + 1 < row.size()) text += std::string(widths[i] - width(row[i]) + 2, ' ');
      }
      out << text << "\n";
    };
    out << "\n" << t.name << "\n";
    line(t.columns);
    std::vector<std::string> rule;
    for (std::size_t w : widths) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : t.rows) line(row);
  }
  return out.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  return format == Format::kMachine ? render_machine(report) : render_human(report);
}

Report parse_machine(std::string_view text) {
  Report report;
  ReportTable* open = nullptr;
  bool have_command = false;
  bool have_status = false;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    std::size_t colon = line.find(": ");
    if (colon == std::string_view::npos) {
      throw ParseError("report line " + std::to_string(number) + ": expected 'key: value'");
    }
    std::string key(line.substr(0, colon));
    std::string value(line.substr(colon + 2));
    auto bad = [&](const std::string& what) {
      return ParseError("report line " + std::to_string(number) + ": " + what);
    };

    if (key == "row" || key == "columns" || key == "end") {
      if (!open) throw bad("'" + key + "' outside a table");
      if (key == "columns") {
        open->columns = split_cells(value);
      } else if (key == "row") {
        open->rows.push_back(split_cells(value));
      } else {
        if (value != open->name) throw bad("mismatched table end");
        open = nullptr;
      }
      continue;
    }
    if (open) throw bad("unterminated table '" + open->name + "'");
    if (key == "command") {
      report.command = value;
      have_command = true;
    } else if (key == "status") {
      int status = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), status);
      if (ec != std::errc{} || ptr != value.data() + value.size()) throw bad("bad status");
      report.status = status;
      have_status = true;
    } else if (key == "table") {
      report.tables.push_back(ReportTable{value, {}, {}});
      open = &report.tables.back();
    } else {
      report.fields.emplace_back(std::move(key), std::move(value));
    }
  }
  if (open) throw ParseError("report: unterminated table '" + open->name + "'");
  if (!have_command || !have_status) throw ParseError("report: missing command or status");
  return report;
}

}  // namespace meadow
