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

#include "support/suites.hpp"

#include <algorithm>
#include <variant>

#include "meadow/counting.hpp"
#include "meadow/errors.hpp"
#include "meadow/structure.hpp"
#include "support/oracles.hpp"

namespace meadow::testing {
namespace {

std::string at(const char* law, std::uint32_t x) {
  return std::string(law) + " fails at x = " + std::to_string(x);
}

std::string at(const char* law, std::uint32_t x, std::uint32_t y) {
  return std::string(law) + " fails at x = " + std::to_string(x) + ", y = " + std::to_string(y);
}

}  // namespace

std::vector<std::string> inverse_law_failures(const Meadow& m) {
  const FiniteCommRing& r = m.ring();
  const std::uint32_t n = r.order();
  std::vector<std::string> out;
  auto inv = [&](Element x) { return m.inverse(x); };
  if (inv(r.zero()) != r.zero()) out.push_back("0^-1 != 0");
  if (inv(r.one()) != r.one()) out.push_back("1^-1 != 1");
  if (inv(r.neg(r.one())) != r.neg(r.one())) out.push_back("(-1)^-1 != -1");
  for (std::uint32_t i = 0; i < n; ++i) {
    const Element x{i};
    if (inv(inv(x)) != x) out.push_back(at("(x^-1)^-1 = x", i));
    if (inv(r.neg(x)) != r.neg(inv(x))) out.push_back(at("(-x)^-1 = -(x^-1)", i));
    if ((r.mul(x, inv(x)) == r.zero()) != (x == r.zero())) {
      out.push_back(at("x x^-1 = 0 iff x = 0", i));
    }
    Element power = r.mul(x, x);
    if (power == x && inv(x) != x) out.push_back(at("x^2 = x implies x^-1 = x", i));
    for (std::uint32_t e = 3; e <= n + 1; ++e) {
      power = r.mul(power, x);  // x^e
      if (power == x && inv(x) != r.pow(x, e - 2)) {
        out.push_back(at("x^n = x implies x^-1 = x^(n-2)", i));
        break;
      }
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      const Element y{j};
      const Element xy = r.mul(x, y);
      if (inv(xy) != r.mul(inv(x), inv(y))) out.push_back(at("(xy)^-1 = x^-1 y^-1", i, j));
      if (xy == r.one() && inv(x) != y) out.push_back(at("xy = 1 implies x^-1 = y", i, j));
    }
  }
  return out;
}

std::vector<std::string> idempotent_law_failures(const Meadow& m) {
  const FiniteCommRing& r = m.ring();
  std::vector<std::string> out;
  const std::vector<Element> idem = scan_idempotents(r);
  if (idempotents(m) != idem) out.push_back("idempotents() disagrees with a direct scan");
  auto leq = [&](Element e, Element f) { return r.mul(e, f) == e; };
  // Order relation as a matrix over positions in idem, for the cubic
  // transitivity check.
  const std::size_t k = idem.size();
  std::vector<char> below(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) below[i * k + j] = leq(idem[i], idem[j]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!below[i * k + j]) continue;
      for (std::size_t l = 0; l < k; ++l) {
        if (below[j * k + l] && !below[i * k + l]) {
          out.push_back(at("<= transitive", idem[i].index, idem[l].index));
        }
      }
    }
  }
  for (Element e : idem) {
    if (m.inverse(e) != e) out.push_back(at("e^-1 = e", e.index));
    if (!leq(e, e)) out.push_back(at("e <= e", e.index));
    if (idem_leq(m, e, e) != leq(e, e)) out.push_back(at("idem_leq", e.index));
    for (Element f : idem) {
      if (idem_leq(m, e, f) != leq(e, f)) out.push_back(at("idem_leq", e.index, f.index));
      if (e != f && leq(e, f) && leq(f, e)) out.push_back(at("<= antisymmetric", e.index, f.index));
      if (e != f && leq(e, f)) {
        const Element d = r.sub(f, e);
        if (r.mul(d, d) != d || d == r.zero()) {
          out.push_back(at("e < f implies f - e idempotent", e.index, f.index));
        }
      }
      if (e != f && r.mul(e, f) == r.zero()) {
        const Element s = r.add(e, f);
        if (r.mul(s, s) != s) out.push_back(at("orthogonal sum is idempotent", e.index, f.index));
      }
      const Element ef = r.mul(e, f);
      if (ef != r.zero() && r.mul(ef, ef) != ef) {
        out.push_back(at("nonzero product of idempotents is idempotent", e.index, f.index));
      }
    }
  }
  // Minimal elements of the scan, computed here from the order relation.
  std::vector<Element> minimal;
  for (Element e : idem) {
    const bool has_below = std::any_of(idem.begin(), idem.end(),
                                       [&](Element f) { return f != e && leq(f, e); });
    if (!has_below) minimal.push_back(e);
  }
  if (minimal_idempotents(m) != minimal) out.push_back("minimal_idempotents() disagrees with scan");
  Element sum = r.zero();
  for (Element e : minimal) {
    sum = r.add(sum, e);
    for (Element f : minimal) {
      if (e != f && r.mul(e, f) != r.zero()) out.push_back(at("minimals orthogonal", e.index, f.index));
    }
  }
  if (sum != r.one()) out.push_back("minimal idempotents do not sum to 1");
  return out;
}

std::vector<std::string> meadow_suite_failures(const FiniteCommRing& r) {
  std::vector<std::string> out;
  const std::string name = r.description();
  try {
    const AxiomReport axioms = check_axioms(r);
    if (!axioms.all_hold()) {
      out.push_back(name + ": axiom " + axioms.first_failure()->id + " fails");
      return out;
    }
    const MeadowResult res = to_meadow(r);
    if (const auto* bad = std::get_if<NotAMeadow>(&res)) {
      out.push_back(name + ": no inverse for " + std::to_string(bad->witness.index));
      return out;
    }
    const Meadow& m = std::get<Meadow>(res);
    for (const std::string& f : inverse_law_failures(m)) out.push_back(name + ": " + f);
    for (const std::string& f : idempotent_law_failures(m)) out.push_back(name + ": " + f);
    const Decomposition d = decompose(m);
    if (!d.verified_exhaustively) out.push_back(name + ": h not verified on all pairs");
    if (d.signature().product() != (r.order() == 1 ? 1u : r.order()) && !d.signature().empty()) {
      out.push_back(name + ": signature product differs from order");
    }
    const CountReport c = count_report(m);
    if (c.signature != d.signature()) out.push_back(name + ": count signature differs");
    if (c.self_inverse.brute != c.self_inverse.formula) {
      out.push_back(name + ": self-inverse count mismatch");
    }
    if (c.invertible.brute != c.invertible.formula) {
      out.push_back(name + ": invertible count mismatch");
    }
  } catch (const Error& e) {
    out.push_back(name + ": " + e.what());
  }
  return out;
}

}  // namespace meadow::testing
