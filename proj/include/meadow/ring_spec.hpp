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

#ifndef MEADOW_RING_SPEC_HPP_
#define MEADOW_RING_SPEC_HPP_

#include <string>
#include <string_view>

#include "meadow/ring.hpp"

namespace meadow {

// RingSpec text format:
//
//   meadowspec 1
//   order N
//   zero I
//   one J
//   add
//   <N lines of N space-separated indices>
//   mul
//   <N lines of N space-separated indices>
//
// '#' starts a comment running to the end of the line; blank lines are
// ignored. Malformed text raises ParseError. Entries outside [0, N) parse
// fine and are rejected later by load_ring.
RingSpec parse_ring_spec(std::string_view text);
RingSpec read_ring_spec_file(const std::string& path);

// Canonical rendering; parse_ring_spec(format_ring_spec(s)) == s.
std::string format_ring_spec(const RingSpec& spec);

}  // namespace meadow

#endif  // MEADOW_RING_SPEC_HPP_
