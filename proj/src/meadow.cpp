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

#include "meadow/meadow.hpp"

#include <string>

namespace meadow {

namespace {

bool solves_first(const FiniteCommRing& r, Element x, Element y) {
  return r.mul(r.mul(x, x), y) == x;
}

bool solves_second(const FiniteCommRing& r, Element x, Element y) {
  return r.mul(r.mul(y, y), x) == y;
}

}  // namespace

std::optional<Element> generalized_inverse(const FiniteCommRing& ring, Element x) {
  if (!ring.contains(x)) {
    throw ArgumentError("element " + std::to_string(x.index) + " outside carrier");
  }
  std::optional<Element> found;
  for (std::uint32_t i = 0; i < ring.order(); ++i) {
    const Element y{i};
    if (!solves_first(ring, x, y) || !solves_second(ring, x, y)) continue;
    if (found) {
      throw InternalError("element " + std::to_string(x.index) +
                          " has two generalized inverses (" +
                          std::to_string(found->index) + " and " +
                          std::to_string(i) + "); tables are not a commutative ring");
    }
    found = y;
  }
  return found;
}

std::vector<Element> pseudo_witnesses(const FiniteCommRing& ring, Element x) {
  if (!ring.contains(x)) {
    throw ArgumentError("element " + std::to_string(x.index) + " outside carrier");
  }
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < ring.order(); ++i) {
    const Element y{i};
    if (solves_first(ring, x, y) && !solves_second(ring, x, y)) out.push_back(y);
  }
  return out;
}

MeadowResult to_meadow(const FiniteCommRing& ring) {
  std::vector<Element> inverse(ring.order());
  for (std::uint32_t i = 0; i < ring.order(); ++i) {
    std::optional<Element> y = generalized_inverse(ring, Element{i});
    if (!y) return NotAMeadow{Element{i}};
    inverse[i] = *y;
  }
  return Meadow(ring, std::move(inverse));
}

Meadow require_meadow(const FiniteCommRing& ring) {
  MeadowResult result = to_meadow(ring);
  if (auto* bad = std::get_if<NotAMeadow>(&result)) {
    throw NotAMeadowError(ring.description() + " is not a meadow: " +
                              std::to_string(bad->witness.index) +
                              " has no generalized inverse",
                          bad->witness.index);
  }
  return std::get<Meadow>(std::move(result));
}

Meadow make_meadow(FiniteCommRing ring, std::vector<Element> inverse) {
  if (inverse.size() != ring.order()) {
    throw ArgumentError("inverse map has " + std::to_string(inverse.size()) +
                        " entries, ring has order " + std::to_string(ring.order()));
  }
  for (std::uint32_t i = 0; i < ring.order(); ++i) {
    const Element x{i};
    const Element y = inverse[i];
    if (!ring.contains(y) || !solves_first(ring, x, y) || !solves_second(ring, x, y)) {
      throw InternalError("supplied inverse of " + std::to_string(i) +
                          " violates x*x*y = x or y*y*x = y");
    }
  }
  return Meadow(std::move(ring), std::move(inverse));
}

std::vector<std::pair<Element, Element>> inverse_table(const Meadow& m) {
  std::vector<std::pair<Element, Element>> table;
  table.reserve(m.order());
  for (std::uint32_t i = 0; i < m.order(); ++i) {
    table.emplace_back(Element{i}, m.inverse(Element{i}));
  }
  return table;
}

MulTable::MulTable(std::uint32_t order, std::vector<std::uint32_t> cells)
    : order_(order), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(order_) * order_) {
    throw ArgumentError("multiplication table must have order x order entries");
  }
  for (std::uint32_t c : cells_) {
    if (c >= order_) throw ArgumentError("multiplication table is not closed");
  }
}

MulTable MulTable::of(const FiniteCommRing& ring) {
  return of(dump_ring(ring));
}

MulTable MulTable::of(const RingSpec& spec) { return MulTable(spec.order, spec.mul); }

std::optional<Element> MulTable::identity() const {
  for (std::uint32_t u = 0; u < order_; ++u) {
    bool ok = true;
    for (std::uint32_t x = 0; x < order_ && ok; ++x) {
      ok = at(Element{u}, Element{x}) == Element{x} && at(Element{x}, Element{u}) == Element{x};
    }
    if (ok) return Element{u};
  }
  return std::nullopt;
}

bool MulTable::is_commutative() const {
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = a + 1; b < order_; ++b) {
      if (at(Element{a}, Element{b}) != at(Element{b}, Element{a})) return false;
    }
  }
  return true;
}

std::optional<Element> skew_inverse(const MulTable& t, Element x) {
  if (x.index >= t.order()) throw ArgumentError("element outside carrier");
  if (!t.identity()) throw ArgumentError("multiplication table has no identity");
  std::optional<Element> found;
  for (std::uint32_t i = 0; i < t.order(); ++i) {
    const Element y{i};
    const bool ok = t.at(t.at(x, x), y) == x && t.at(t.at(y, y), x) == y &&
                    t.at(t.at(x, y), y) == y && t.at(t.at(y, x), x) == x;
    if (!ok) continue;
    if (found) {
      throw InternalError("element " + std::to_string(x.index) +
                          " has two skew inverses; table is not associative");
    }
    found = y;
  }
  return found;
}

bool is_skew_meadow(const RingSpec& spec) {
  if (!check_spec_axioms(spec, false).all_hold()) return false;
  const MulTable t = MulTable::of(spec);
  for (std::uint32_t i = 0; i < t.order(); ++i) {
    if (!skew_inverse(t, Element{i})) return false;
  }
  return true;
}

}  // namespace meadow
