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

#ifndef MEADOW_RING_HPP_
#define MEADOW_RING_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "meadow/errors.hpp"
#include "meadow/polyfield.hpp"

namespace meadow {

// A carrier element, identified by its index in [0, order) of the owning
// ring. Elements carry no reference to their ring; mixing elements of
// different rings is a contract violation.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class RingKind { kZmod, kGalois, kProduct, kTable, kSubring };

class FiniteCommRing;

namespace detail {
class RingImpl;
FiniteCommRing wrap_ring(std::shared_ptr<const RingImpl> impl);
}  // namespace detail

// Finite commutative ring with identity. Immutable value type; copies share
// the underlying implementation.
class FiniteCommRing {
 public:
  std::uint32_t order() const noexcept;
  Element zero() const noexcept;
  Element one() const noexcept;
  // The zero ring (order 1, 0 = 1).
  bool is_degenerate() const noexcept { return order() == 1; }

  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element pow(Element a, std::uint64_t e) const;

  // Bounds-checked element construction.
  Element element(std::uint64_t index) const;
  bool contains(Element e) const noexcept { return e.index < order(); }

  RingKind kind() const noexcept;
  // Human-readable constructor summary: "Z/10Z", "GF(4)", "GF(2) x GF(5)".
  std::string description() const;

  // kZmod only: the modulus n.
  std::uint32_t zmod_modulus() const;
  // kGalois only.
  const GaloisField& galois_field() const;
  // kProduct only: factors in order, first factor is the least significant
  // digit of the mixed-radix index.
  const std::vector<FiniteCommRing>& factors() const;
  // kProduct only: split an element into factor components and back.
  std::vector<Element> split(Element x) const;
  Element join(std::span<const Element> parts) const;
  // kSubring only: parent-ring element for each carrier index.
  const std::vector<Element>& embedding() const;

 private:
  explicit FiniteCommRing(std::shared_ptr<const detail::RingImpl> impl)
      : impl_(std::move(impl)) {}

  friend FiniteCommRing detail::wrap_ring(
      std::shared_ptr<const detail::RingImpl> impl);

  std::shared_ptr<const detail::RingImpl> impl_;
};

// Z/nZ with carrier {0..n-1}. n == 1 is the zero ring.
FiniteCommRing make_zmod(std::uint64_t n,
                         std::uint64_t max_order = kStructuredOrderBound);

// GF(p^n) as a ring, backed by make_galois_field.
FiniteCommRing make_galois(std::uint32_t p, std::uint32_t n,
                           std::uint64_t max_order = kStructuredOrderBound);
FiniteCommRing make_galois(const GaloisField& field);

// Componentwise product over the mixed-radix carrier.
FiniteCommRing make_product(std::vector<FiniteCommRing> factors,
                            std::uint64_t max_order = kStructuredOrderBound);

// The subset `carrier` of `parent` (which must contain 0 and be closed
// under +, - and *) with identity `one`. Carrier index i denotes parent
// element carrier[i]; the carrier is sorted ascending.
FiniteCommRing make_subring(const FiniteCommRing& parent,
                            std::vector<Element> carrier, Element one);

// Explicit operation tables, row-major order x order. This is also the
// in-memory form of the RingSpec file format.
struct RingSpec {
  std::uint32_t order = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> mul;

  std::uint32_t add_at(std::uint32_t a, std::uint32_t b) const {
    return add[static_cast<std::size_t>(a) * order + b];
  }
  std::uint32_t mul_at(std::uint32_t a, std::uint32_t b) const {
    return mul[static_cast<std::size_t>(a) * order + b];
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// One line of an axiom report.
struct AxiomResult {
  std::string id;   // "(1)".."(8)" for ring axioms, "P1".."P7" for consequences
  std::string law;  // e.g. "x + 0 = x"
  bool holds = true;
  std::vector<Element> witness;  // lexicographically first counterexample
  // Informational results (commutativity when it is not required) never
  // make a report fail.
  bool required = true;
};

struct AxiomReport {
  std::uint32_t order = 0;
  bool degenerate = false;
  std::vector<AxiomResult> results;

  bool all_hold() const;
  const AxiomResult* first_failure() const;
};

// Exhaustive check of the eight commutative-ring axioms followed by the
// seven elementary consequences (unique identity, 0x = 0, (-x)y = -(xy),
// (-1)x = -x, -0 = 0, (-x)+(-y) = -(x+y), -(-x) = x). Cost is cubic in the
// order; throws BoundError above max_order.
AxiomReport check_axioms(const FiniteCommRing& ring,
                         std::uint64_t max_order = kTableOrderBound);

// Same checks straight on tables. With require_commutative == false axiom (6)
// is reported but not counted by all_hold(), and the left-handed forms of
// (7) and (8) are checked as well. Negation is derived from the add table.
AxiomReport check_spec_axioms(const RingSpec& spec, bool require_commutative);

// Tables of a constructed ring.
RingSpec dump_ring(const FiniteCommRing& ring);

// Thrown by load_ring. `report()` is empty for structural defects (bad
// table sizes, entries outside the carrier).
class RingSpecError : public Error {
 public:
  RingSpecError(const std::string& what, AxiomReport report)
      : Error(what), report_(std::move(report)) {}
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

// Table-backed ring. Fails unless the tables are closed and all axioms hold.
FiniteCommRing load_ring(const RingSpec& spec,
                         std::uint64_t max_order = kTableOrderBound);

}  // namespace meadow

#endif  // MEADOW_RING_HPP_
