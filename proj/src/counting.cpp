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

#include "meadow/counting.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace meadow {

bool is_squarefree(std::int64_t n) {
  if (n < 1) throw ArgumentError("squarefree test requires n >= 1");
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t self_inverse_formula(const Signature& sig) {
  std::uint64_t out = 1;
  // A field has the self-inverses 0, 1 and -1, and 1 = -1 in characteristic 2.
  for (const FieldId& f : sig.fields()) out *= f.p == 2 ? 2 : 3;
  return out;
}

std::uint64_t invertible_formula(const Signature& sig) {
  std::uint64_t out = 1;
  for (const FieldId& f : sig.fields()) out *= f.order() - 1;
  return out;
}

namespace {

std::vector<Element> self_inverse_elements(const Meadow& m) {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < m.order(); ++i) {
    if (m.inverse(Element{i}) == Element{i}) out.push_back(Element{i});
  }
  return out;
}

std::vector<Element> invertible_elements(const Meadow& m) {
  const FiniteCommRing& r = m.ring();
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < m.order(); ++i) {
    if (r.mul(Element{i}, m.inverse(Element{i})) == r.one()) out.push_back(Element{i});
  }
  return out;
}

CountPair checked(std::uint64_t brute, std::uint64_t formula, const char* what) {
  if (brute != formula) {
    throw InternalError(std::string(what) + " count mismatch: scan found " +
                        std::to_string(brute) + ", formula gives " +
                        std::to_string(formula));
  }
  return CountPair{brute, formula};
}

}  // namespace

CountPair count_self_inverse(const Meadow& m) {
  return checked(self_inverse_elements(m).size(), self_inverse_formula(signature(m)),
                 "self-inverse");
}

CountPair count_invertible(const Meadow& m) {
  return checked(invertible_elements(m).size(), invertible_formula(signature(m)),
                 "invertible");
}

CountReport count_report(const Meadow& m) {
  CountReport report;
  report.order = m.order();
  report.signature = signature(m);
  report.self_inverse_elements = self_inverse_elements(m);
  report.invertible_elements = invertible_elements(m);
  report.self_inverse = checked(report.self_inverse_elements.size(),
                                self_inverse_formula(report.signature), "self-inverse");
  report.invertible = checked(report.invertible_elements.size(),
                              invertible_formula(report.signature), "invertible");
  report.components = static_cast<std::uint32_t>(report.signature.size());
  for (const FieldId& f : report.signature.fields()) {
    if (f.p == 2) ++report.char2_components;
  }
  return report;
}

namespace {

using Partition = std::vector<std::uint32_t>;

// Partitions of n into parts no larger than max_part, parts descending.
const std::vector<Partition>& partitions(
    std::uint32_t n, std::uint32_t max_part,
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Partition>>& memo) {
  auto key = std::make_pair(n, max_part);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back({});
  } else {
    for (std::uint32_t first = std::min(n, max_part); first >= 1; --first) {
      for (const Partition& rest : partitions(n - first, first, memo)) {
        Partition p{first};
        p.insert(p.end(), rest.begin(), rest.end());
        out.push_back(std::move(p));
      }
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

bool signature_less(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(
      a.fields().begin(), a.fields().end(), b.fields().begin(), b.fields().end(),
      [](const FieldId& x, const FieldId& y) {
        return std::make_tuple(x.order(), x.p) < std::make_tuple(y.order(), y.p);
      });
}

}  // namespace

Classification classify_order(std::uint64_t n) {
  if (n < 1 || n > kClassifyBound) {
    throw BoundError("classification requires 1 <= N <= " + std::to_string(kClassifyBound));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factorization;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    std::uint32_t e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e) factorization.emplace_back(static_cast<std::uint32_t>(d), e);
  }
  if (rest > 1) factorization.emplace_back(static_cast<std::uint32_t>(rest), 1);

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Partition>> memo;
  std::vector<std::vector<FieldId>> partial{{}};
  for (auto [p, e] : factorization) {
    std::vector<std::vector<FieldId>> next;
    for (const Partition& part : partitions(e, e, memo)) {
      for (const auto& prefix : partial) {
        auto fields = prefix;
        for (std::uint32_t k : part) fields.push_back(FieldId{p, k});
        next.push_back(std::move(fields));
      }
    }
    partial = std::move(next);
  }

  Classification out;
  out.order = n;
  for (auto& fields : partial) out.signatures.emplace_back(std::move(fields));
  std::sort(out.signatures.begin(), out.signatures.end(), signature_less);
  for (std::size_t i = 0; i < out.signatures.size(); ++i) {
    if (out.signatures[i].is_minimal()) out.minimal = i;
  }
  return out;
}

FiniteCommRing instantiate(const Signature& sig, std::uint64_t max_order) {
  if (sig.empty()) return make_zmod(1);
  std::vector<FiniteCommRing> factors;
  for (const FieldId& f : sig.fields()) factors.push_back(make_galois(f.p, f.k, max_order));
  if (factors.size() == 1) return factors.front();
  return make_product(std::move(factors), max_order);
}

ZmodLawReport zmod_meadow_law(std::uint32_t bound) {
  if (bound > 512) throw BoundError("zmod_meadow_law is limited to bound <= 512");
  ZmodLawReport report;
  report.bound = bound;
  for (std::uint32_t n = 1; n <= bound; ++n) {
    ZmodLawEntry entry;
    entry.n = n;
    entry.squarefree = is_squarefree(n);
    MeadowResult result = to_meadow(make_zmod(n));
    entry.meadow = std::holds_alternative<Meadow>(result);
    if (auto* bad = std::get_if<NotAMeadow>(&result)) entry.witness = bad->witness;
    if (entry.meadow != entry.squarefree) report.counterexamples.push_back(n);
    report.entries.push_back(entry);
  }
  return report;
}

CrtCheck crt_cross_check(std::uint64_t n) {
  if (n < 2 || !is_squarefree(static_cast<std::int64_t>(n))) {
    throw ArgumentError("CRT cross-check needs a squarefree n >= 2");
  }
  CrtCheck check;
  check.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest; ++d) {
    if (rest % d == 0) {
      check.primes.push_back(static_cast<std::uint32_t>(d));
      rest /= d;
    }
  }

  const FiniteCommRing zn = make_zmod(n);
  std::vector<FiniteCommRing> fields;
  std::vector<FieldId> expected;
  for (std::uint32_t p : check.primes) {
    fields.push_back(make_galois(p, 1));
    expected.push_back(FieldId{p, 1});
  }
  const FiniteCommRing product = make_product(fields, n);
  check.signatures_match = signature(require_meadow(zn)) == Signature(expected);

  std::vector<Element> image(zn.order());
  std::vector<bool> hit(product.order(), false);
  bool ok = true;
  for (std::uint32_t x = 0; x < zn.order(); ++x) {
    std::vector<Element> parts;
    for (std::uint32_t p : check.primes) parts.push_back(Element{x % p});
    image[x] = product.join(parts);
    if (hit[image[x].index]) ok = false;
    hit[image[x].index] = true;
  }
  ok = ok && image[zn.zero().index] == product.zero() && image[zn.one().index] == product.one();
  for (std::uint32_t x = 0; x < zn.order() && ok; ++x) {
    for (std::uint32_t y = 0; y < zn.order() && ok; ++y) {
      ok = image[zn.add(Element{x}, Element{y}).index] == product.add(image[x], image[y]) &&
           image[zn.mul(Element{x}, Element{y}).index] == product.mul(image[x], image[y]);
    }
  }
  check.residue_map_is_iso = ok;
  return check;
}

}  // namespace meadow
