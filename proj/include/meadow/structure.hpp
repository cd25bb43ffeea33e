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

#ifndef MEADOW_STRUCTURE_HPP_
#define MEADOW_STRUCTURE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "meadow/meadow.hpp"

namespace meadow {

// GF(p^k).
struct FieldId {
  std::uint32_t p = 0;
  std::uint32_t k = 0;

  std::uint64_t order() const;
  friend bool operator==(const FieldId&, const FieldId&) = default;
};

// Multiset of prime powers, kept sorted ascending by p^k and then p. This is
// a complete isomorphism invariant of finite meadows. The empty signature
// belongs to the zero ring.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<FieldId> fields);

  const std::vector<FieldId>& fields() const noexcept { return fields_; }
  std::size_t size() const noexcept { return fields_.size(); }
  bool empty() const noexcept { return fields_.empty(); }
  // Product of the field orders.
  std::uint64_t product() const;
  // All exponents 1 and all primes distinct.
  bool is_minimal() const;

  // "GF(2) x GF(5)"; "{}" for the empty signature.
  std::string to_string() const;
  // "{(2,1),(5,1)}"
  std::string to_pairs() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<FieldId> fields_;
};

// Nonzero e with e*e = e, ascending carrier index.
std::vector<Element> idempotents(const Meadow& m);

// e <= f iff e*f = e. Throws ArgumentError unless both are idempotents.
bool idem_leq(const Meadow& m, Element e, Element f);

// Idempotents with no other idempotent below them, ascending carrier index.
// Empty for the zero ring.
std::vector<Element> minimal_idempotents(const Meadow& m);

// e*M as a meadow with identity e. Its ring has kind kSubring; embedding()
// maps its carrier back into M (ascending). For e = 1 the carrier indices
// coincide with those of M.
struct Component {
  Element idempotent;
  Meadow meadow;
};
Component component(const Meadow& m, Element e);

// Characteristic and degree of a finite field, found by iterated addition
// of 1. Throws ArgumentError if the meadow is not a field or its order is
// not a power of the characteristic.
FieldId identify_field(const Meadow& field);

// M = e_1*M x ... x e_n*M over the minimal idempotents, with the map
// h(m) = (e_1*m, ..., e_n*m).
struct Decomposition {
  std::vector<Element> minimals;
  std::vector<Component> components;
  std::vector<FieldId> fields;     // fields[i] identifies components[i]
  FiniteCommRing product;          // product of the component rings
  std::vector<Element> forward;    // h, indexed by element of M
  std::vector<Element> backward;   // h^-1, indexed by element of product
  bool verified_exhaustively = false;  // + and * checked on all pairs

  Signature signature() const { return Signature(fields); }
  // Components in idempotent order: "GF(2) x GF(5)".
  std::string component_string() const;
};

// Throws InternalError if any structural identity fails (minimals not
// orthogonal or not summing to 1, a component not a field, h not a
// bijective homomorphism). Homomorphism checks on all pairs run for
// order <= 512; bijectivity, 0, 1, negation and inverse are always checked.
Decomposition decompose(const Meadow& m);

Signature signature(const Meadow& m);
bool is_isomorphic(const Meadow& a, const Meadow& b);
// True iff M has no proper submeadow containing its 0 and 1.
bool is_minimal_meadow(const Meadow& m);

}  // namespace meadow

#endif  // MEADOW_STRUCTURE_HPP_
