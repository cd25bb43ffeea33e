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

// meadow: command-line front end over the C API.
//
//   meadow [--format=human|machine] [--max-order=K] <command> ...
//
// Exit codes: 0 success, 1 domain failure (witness printed), 2 usage or
// parse error, 3 internal error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "meadow/meadow_c.h"

namespace {

struct Settings {
  std::string format = "human";
  std::optional<std::uint64_t> max_order;
};

meadow_options options_for(const Settings& settings) {
  meadow_options options;
  meadow_options_init(&options);
  if (settings.max_order) {
    options.max_structured_order = *settings.max_order;
    options.max_table_order = *settings.max_order;
  }
  return options;
}

int emit(meadow_status status, meadow_report* report, const Settings& settings) {
  if (!report) {
    std::cerr << "meadow: " << meadow_last_error() << "\n";
    return static_cast<int>(status);
  }
  char* text = nullptr;
  const meadow_format format =
      settings.format == "machine" ? MEADOW_FORMAT_MACHINE : MEADOW_FORMAT_HUMAN;
  const meadow_status rendered = meadow_report_render(report, format, &text);
  meadow_report_free(report);
  if (rendered != MEADOW_OK) {
    std::cerr << "meadow: " << meadow_last_error() << "\n";
    return static_cast<int>(rendered);
  }
  std::fputs(text, stdout);
  meadow_string_free(text);
  return static_cast<int>(status);
}

int dump(const std::string& desc, const Settings& settings) {
  const meadow_options options = options_for(settings);
  meadow_ring* ring = nullptr;
  meadow_status status = meadow_ring_create(desc.c_str(), &options, &ring);
  if (status != MEADOW_OK) {
    std::cerr << "meadow: " << meadow_last_error() << "\n";
    return static_cast<int>(status);
  }
  char* text = nullptr;
  status = meadow_ring_dump_spec(ring, &text);
  meadow_ring_free(ring);
  if (status != MEADOW_OK) {
    std::cerr << "meadow: " << meadow_last_error() << "\n";
    return static_cast<int>(status);
  }
  std::fputs(text, stdout);
  meadow_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative rings, meadows and their decomposition into Galois fields"};
  app.require_subcommand(1);
  Settings settings;
  app.option_defaults()->always_capture_default();
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--max-order", settings.max_order,
                 "Carrier bound for every ring (defaults: 512 for tables, 4096 for structured rings)")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  const char* desc_help =
      "Ring descriptor: zmod:N | gf:P^K | prod:(D,D,...) | file:PATH";
  std::string desc;
  std::string other;
  std::string order;

  auto* check = app.add_subcommand("check", "Check ring axioms and meadow-hood");
  check->add_option("desc", desc, desc_help)->required();
  auto* invtable = app.add_subcommand("invtable", "Print the generalized-inverse table");
  invtable->add_option("desc", desc, desc_help)->required();
  auto* decompose = app.add_subcommand("decompose", "Decompose a meadow into Galois fields");
  decompose->add_option("desc", desc, desc_help)->required();
  auto* count = app.add_subcommand("count", "Count self-inverse and invertible elements");
  count->add_option("desc", desc, desc_help)->required();
  auto* classify = app.add_subcommand("classify", "List all meadows of order N up to isomorphism");
  classify->add_option("N", order, "Order")->required();
  auto* isomorphic = app.add_subcommand("isomorphic", "Decide whether two meadows are isomorphic");
  isomorphic->add_option("left", desc, desc_help)->required();
  isomorphic->add_option("right", other, desc_help)->required();
  auto* dump_cmd = app.add_subcommand("dump", "Print the operation tables in RingSpec format");
  dump_cmd->add_option("desc", desc, desc_help)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const meadow_options options = options_for(settings);
  meadow_report* report = nullptr;
  meadow_status status = MEADOW_OK;
  if (*check) {
    status = meadow_cmd_check(desc.c_str(), &options, &report);
  } else if (*invtable) {
    status = meadow_cmd_invtable(desc.c_str(), &options, &report);
  } else if (*decompose) {
    status = meadow_cmd_decompose(desc.c_str(), &options, &report);
  } else if (*count) {
    status = meadow_cmd_count(desc.c_str(), &options, &report);
  } else if (*classify) {
    status = meadow_cmd_classify(order.c_str(), &report);
  } else if (*isomorphic) {
    status = meadow_cmd_isomorphic(desc.c_str(), other.c_str(), &options, &report);
  } else if (*dump_cmd) {
    return dump(desc, settings);
  }
  return emit(status, report, settings);
}
