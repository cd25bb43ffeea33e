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

#ifndef MEADOW_MEADOW_HPP_
#define MEADOW_MEADOW_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "meadow/ring.hpp"

namespace meadow {

// The unique y with x*x*y = x and y*y*x = y, or nullopt when there is none.
// Found by scanning the carrier; a second solution means the tables are not
// a commutative ring and raises InternalError.
std::optional<Element> generalized_inverse(const FiniteCommRing& ring, Element x);

// All y with x*x*y = x but y*y*x != y.
std::vector<Element> pseudo_witnesses(const FiniteCommRing& ring, Element x);

// Lowest-index element without a generalized inverse.
struct NotAMeadow {
  Element witness;
};

class Meadow;
using MeadowResult = std::variant<Meadow, NotAMeadow>;

// A finite commutative ring together with its total generalized inverse.
class Meadow {
 public:
  const FiniteCommRing& ring() const noexcept { return ring_; }
  std::uint32_t order() const noexcept { return ring_.order(); }
  Element inverse(Element x) const { return inverse_[x.index]; }
  const std::vector<Element>& inverse_map() const noexcept { return inverse_; }

 private:
  Meadow(FiniteCommRing ring, std::vector<Element> inverse)
      : ring_(std::move(ring)), inverse_(std::move(inverse)) {}
  friend Meadow make_meadow(FiniteCommRing, std::vector<Element>);
  friend MeadowResult to_meadow(const FiniteCommRing&);

  FiniteCommRing ring_;
  std::vector<Element> inverse_;
};

MeadowResult to_meadow(const FiniteCommRing& ring);

// to_meadow, throwing NotAMeadowError when the ring is not a meadow.
Meadow require_meadow(const FiniteCommRing& ring);

// Pairs a ring with a known inverse map (a closed form, or one inherited
// from a parent meadow). Both defining equations are verified at every
// element; a mismatch raises InternalError.
Meadow make_meadow(FiniteCommRing ring, std::vector<Element> inverse);

// (x, x^-1) for every element, in carrier-index order.
std::vector<std::pair<Element, Element>> inverse_table(const Meadow& m);

// A total binary operation on [0, order), row-major.
class MulTable {
 public:
  // Throws ArgumentError unless cells has order*order entries below order.
  MulTable(std::uint32_t order, std::vector<std::uint32_t> cells);
  static MulTable of(const FiniteCommRing& ring);
  static MulTable of(const RingSpec& spec);

  std::uint32_t order() const noexcept { return order_; }
  Element at(Element a, Element b) const {
    return Element{cells_[static_cast<std::size_t>(a.index) * order_ + b.index]};
  }
  // The two-sided identity, if any.
  std::optional<Element> identity() const;
  bool is_commutative() const;

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> cells_;
};

// The y solving all four of x*x*y = x, y*y*x = y, x*y*y = y, y*x*x = x
// (products associated to the left), or nullopt. Requires an identity;
// throws ArgumentError otherwise. Two solutions can only occur for
// non-associative tables and raise InternalError.
std::optional<Element> skew_inverse(const MulTable& table, Element x);

// Tables satisfying every ring axiom except (possibly) commutativity, in
// which every element has a skew inverse.
bool is_skew_meadow(const RingSpec& spec);

}  // namespace meadow

#endif  // MEADOW_MEADOW_HPP_
