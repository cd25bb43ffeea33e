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

#ifndef MEADOW_COMMANDS_HPP_
#define MEADOW_COMMANDS_HPP_

#include <string_view>

#include "meadow/descriptor.hpp"
#include "meadow/report.hpp"

namespace meadow {

// The CLI subcommands. Each returns a Report whose status is 0 on success
// and 1 on a domain failure (not a meadow, file ring violating an axiom);
// the report then names the witness. Malformed input and exceeded bounds
// raise ParseError / BoundError instead.

Report cmd_check(std::string_view desc, const BuildLimits& limits = {});
Report cmd_invtable(std::string_view desc, const BuildLimits& limits = {});
Report cmd_decompose(std::string_view desc, const BuildLimits& limits = {});
Report cmd_count(std::string_view desc, const BuildLimits& limits = {});
Report cmd_classify(std::string_view order);
Report cmd_isomorphic(std::string_view left, std::string_view right,
                      const BuildLimits& limits = {});

}  // namespace meadow

#endif  // MEADOW_COMMANDS_HPP_
