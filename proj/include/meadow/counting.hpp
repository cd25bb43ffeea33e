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

#ifndef MEADOW_COUNTING_HPP_
#define MEADOW_COUNTING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "meadow/structure.hpp"

namespace meadow {

// Trial division. Throws ArgumentError for n < 1.
bool is_squarefree(std::int64_t n);

// A count obtained by scanning the carrier next to the closed form derived
// from the signature.
struct CountPair {
  std::uint64_t brute = 0;
  std::uint64_t formula = 0;
};

// 2^l * 3^(n-l), l = number of factors of characteristic 2 (GF(2^k) for any
// k), n = number of factors.
std::uint64_t self_inverse_formula(const Signature& sig);
// Product of (p^k - 1) over the factors.
std::uint64_t invertible_formula(const Signature& sig);

// m = m^-1. Throws InternalError if scan and formula disagree.
CountPair count_self_inverse(const Meadow& m);
// m * m^-1 = 1. Throws InternalError if scan and formula disagree.
CountPair count_invertible(const Meadow& m);

struct CountReport {
  std::uint32_t order = 0;
  CountPair self_inverse;
  CountPair invertible;
  std::uint32_t char2_components = 0;  // l
  std::uint32_t components = 0;      // n
  Signature signature;
  std::vector<Element> self_inverse_elements;
  std::vector<Element> invertible_elements;
};
CountReport count_report(const Meadow& m);

inline constexpr std::uint64_t kClassifyBound = 1'000'000;

struct Classification {
  std::uint64_t order = 0;
  // Sorted by number of factors, then lexicographically.
  std::vector<Signature> signatures;
  // Index of the all-distinct-primes signature; present iff order is
  // squarefree.
  std::optional<std::size_t> minimal;
};

// Every multiset of prime powers with product N, i.e. every meadow of order
// N up to isomorphism. 1 <= N <= kClassifyBound; N = 1 yields the single
// empty signature.
Classification classify_order(std::uint64_t n);

// GF(q1) x ... x GF(qm) for the signature (a bare field for one factor, the
// zero ring for none).
FiniteCommRing instantiate(const Signature& sig,
                           std::uint64_t max_order = kStructuredOrderBound);

struct ZmodLawEntry {
  std::uint32_t n = 0;
  bool squarefree = false;
  bool meadow = false;
  std::optional<Element> witness;  // first element without inverse
};

struct ZmodLawReport {
  std::uint32_t bound = 0;
  std::vector<ZmodLawEntry> entries;
  std::vector<std::uint32_t> counterexamples;  // n where the two disagree

  bool holds() const { return counterexamples.empty(); }
};

// For 1 <= n <= bound (bound <= 512): Z/nZ is a meadow exactly when n is
// squarefree. Meadow-hood is decided by inverse search.
ZmodLawReport zmod_meadow_law(std::uint32_t bound);

struct CrtCheck {
  std::uint64_t n = 0;
  std::vector<std::uint32_t> primes;
  bool signatures_match = false;  // signature(Z/nZ) = {(p,1) ...}
  bool residue_map_is_iso = false;  // x -> (x mod p_1, ..., x mod p_k)
};

// Squarefree n only (ArgumentError otherwise). Compares Z/nZ with the
// product of its prime fields by signature and by the explicit residue map.
CrtCheck crt_cross_check(std::uint64_t n);

}  // namespace meadow

#endif  // MEADOW_COUNTING_HPP_
