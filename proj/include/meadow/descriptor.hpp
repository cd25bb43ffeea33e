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

#ifndef MEADOW_DESCRIPTOR_HPP_
#define MEADOW_DESCRIPTOR_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "meadow/ring.hpp"

namespace meadow {

// Parsed ring descriptor:
//
//   desc := "zmod:" INT | "gf:" INT "^" INT
//         | "prod:(" desc ("," desc)+ ")" | "file:" PATH
//
// Inside prod:( ... ) a file path ends at the next ',' or ')'.
struct Descriptor {
  enum class Kind { kZmod, kGalois, kProduct, kFile };

  Kind kind = Kind::kZmod;
  std::uint64_t n = 0;        // kZmod
  std::uint32_t p = 0;        // kGalois
  std::uint32_t k = 0;        // kGalois
  std::vector<Descriptor> factors;  // kProduct
  std::string path;           // kFile

  // Canonical text form.
  std::string to_string() const;
};

// Throws ParseError; gf:p^k with non-prime p is rejected here.
Descriptor parse_descriptor(std::string_view text);

struct BuildLimits {
  std::uint64_t structured = kStructuredOrderBound;
  std::uint64_t table = kTableOrderBound;
};

// Throws BoundError, ParseError (unreadable or malformed RingSpec file) or
// RingSpecError (file tables that are not a commutative ring).
FiniteCommRing build_ring(const Descriptor& desc, const BuildLimits& limits = {});

}  // namespace meadow

#endif  // MEADOW_DESCRIPTOR_HPP_
