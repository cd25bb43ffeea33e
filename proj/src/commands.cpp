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

#include "meadow/commands.hpp"

#include <charconv>
#include <optional>
#include <string>

#include "meadow/counting.hpp"
#include "meadow/ring_spec.hpp"
#include "meadow/structure.hpp"

namespace meadow {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class Range, class Fn>
std::string list(const Range& items, Fn fn) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += fn(item);
  }
  return out + "]";
}

std::string elements(const std::vector<Element>& items) {
  return list(items, [](Element e) { return std::to_string(e.index); });
}

std::string witness_text(const std::vector<Element>& witness) {
  if (witness.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(witness[i].index);
  }
  return out;
}

ReportTable axiom_table(const AxiomReport& report) {
  ReportTable t{"axioms", {"id", "law", "result", "witness"}, {}};
  for (const AxiomResult& r : report.results) {
    t.rows.push_back({r.id, r.law, r.holds ? "pass" : "fail", witness_text(r.witness)});
  }
  return t;
}

// Display form of an element beyond its index, where the ring has one.
std::optional<std::string> element_value(const FiniteCommRing& r, Element x) {
  switch (r.kind()) {
    case RingKind::kGalois:
      return r.galois_field().to_polynomial(x.index).to_string();
    case RingKind::kProduct: {
      std::string out = "(";
      std::vector<Element> parts = r.split(x);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i].index);
      }
      return out + ")";
    }
    default:
      return std::nullopt;
  }
}

bool has_values(const FiniteCommRing& r) {
  return r.kind() == RingKind::kGalois || r.kind() == RingKind::kProduct;
}

// Parses and builds the ring. A file ring that is not a commutative ring
// turns `report` into a domain failure and yields nullopt.
std::optional<FiniteCommRing> load(std::string_view text, const BuildLimits& limits,
                                   Report& report, const std::string& key = "ring") {
  const Descriptor desc = parse_descriptor(text);
  report.set(key, desc.to_string());
  try {
    return build_ring(desc, limits);
  } catch (const RingSpecError& err) {
    report.status = 1;
    report.set("error", err.what());
    if (!err.report().results.empty()) {
      report.set("axioms", "fail");
      report.tables.push_back(axiom_table(err.report()));
    }
    return std::nullopt;
  }
}

void describe(const FiniteCommRing& r, Report& report) {
  report.set("description", r.description());
  report.set("order", std::to_string(r.order()));
  report.set("degenerate", yes_no(r.is_degenerate()));
}

// to_meadow, recording a failure (status 1 plus witness) in the report.
std::optional<Meadow> meadow_or_fail(const FiniteCommRing& r, Report& report,
                                     const std::string& prefix = "") {
  MeadowResult result = to_meadow(r);
  if (auto* bad = std::get_if<NotAMeadow>(&result)) {
    report.status = 1;
    report.set(prefix + "meadow", "no");
    report.set(prefix + "witness", std::to_string(bad->witness.index));
    return std::nullopt;
  }
  report.set(prefix + "meadow", "yes");
  return std::get<Meadow>(std::move(result));
}

}  // namespace

Report cmd_check(std::string_view text, const BuildLimits& limits) {
  Report report;
  report.command = "check";
  std::optional<FiniteCommRing> ring = load(text, limits, report);
  if (!ring) return report;
  describe(*ring, report);
  if (ring->order() <= limits.table) {
    AxiomReport axioms = check_axioms(*ring, limits.table);
    report.set("axioms", axioms.all_hold() ? "pass" : "fail");
    if (!axioms.all_hold()) report.status = 1;
    report.tables.push_back(axiom_table(axioms));
  } else {
    report.set("axioms", "skipped (order exceeds " + std::to_string(limits.table) + ")");
  }
  meadow_or_fail(*ring, report);
  return report;
}

Report cmd_invtable(std::string_view text, const BuildLimits& limits) {
  Report report;
  report.command = "invtable";
  std::optional<FiniteCommRing> ring = load(text, limits, report);
  if (!ring) return report;
  describe(*ring, report);
  std::optional<Meadow> m = meadow_or_fail(*ring, report);
  if (!m) return report;

  const CountReport counts = count_report(*m);
  report.set("signature", counts.signature.to_pairs());
  report.set("self_inverse_count", std::to_string(counts.self_inverse.brute));
  report.set("invertible_count", std::to_string(counts.invertible.brute));

  ReportTable t{"inverses", {"element", "inverse", "self_inverse", "invertible"}, {}};
  if (has_values(*ring)) t.columns.insert(t.columns.begin() + 1, "value");
  const FiniteCommRing& r = m->ring();
  for (const auto& [x, inv] : inverse_table(*m)) {
    std::vector<std::string> row{std::to_string(x.index), std::to_string(inv.index),
                                 yes_no(inv == x), yes_no(r.mul(x, inv) == r.one())};
    if (auto value = element_value(r, x)) row.insert(row.begin() + 1, *value);
    t.rows.push_back(std::move(row));
  }
  report.tables.push_back(std::move(t));
  return report;
}

Report cmd_decompose(std::string_view text, const BuildLimits& limits) {
  Report report;
  report.command = "decompose";
  std::optional<FiniteCommRing> ring = load(text, limits, report);
  if (!ring) return report;
  describe(*ring, report);
  std::optional<Meadow> m = meadow_or_fail(*ring, report);
  if (!m) return report;

  const Decomposition d = decompose(*m);
  report.set("minimals", elements(d.minimals));
  report.set("component_orders", list(d.components, [](const Component& c) {
               return std::to_string(c.meadow.order());
             }));
  report.set("decomposition", "M ≅ " + d.component_string());
  report.set("signature", d.signature().to_pairs());
  report.set("h_verified", d.verified_exhaustively ? "yes (exhaustive)"
                                                   : "yes (bijection and unary operations)");

  ReportTable comps{"components", {"idempotent", "order", "p", "k", "field"}, {}};
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    comps.rows.push_back({std::to_string(d.minimals[i].index),
                          std::to_string(d.components[i].meadow.order()),
                          std::to_string(d.fields[i].p), std::to_string(d.fields[i].k),
                          "GF(" + std::to_string(d.fields[i].order()) + ")"});
  }
  report.tables.push_back(std::move(comps));

  // h(m) = (e_1*m, ..., e_n*m), shown as elements of M.
  ReportTable h{"h", {"m"}, {}};
  for (Element e : d.minimals) h.columns.push_back("e" + std::to_string(e.index) + "*m");
  const FiniteCommRing& r = m->ring();
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    std::vector<std::string> row{std::to_string(x)};
    for (Element e : d.minimals) row.push_back(std::to_string(r.mul(e, Element{x}).index));
    h.rows.push_back(std::move(row));
  }
  report.tables.push_back(std::move(h));
  return report;
}

Report cmd_count(std::string_view text, const BuildLimits& limits) {
  Report report;
  report.command = "count";
  std::optional<FiniteCommRing> ring = load(text, limits, report);
  if (!ring) return report;
  describe(*ring, report);
  std::optional<Meadow> m = meadow_or_fail(*ring, report);
  if (!m) return report;

  const CountReport c = count_report(*m);
  report.set("signature", c.signature.to_pairs());
  report.set("components", std::to_string(c.components));
  report.set("char2_components", std::to_string(c.char2_components));
  report.set("self_inverse_count", std::to_string(c.self_inverse.brute));
  report.set("self_inverse_formula", std::to_string(c.self_inverse.formula));
  report.set("self_inverse_elements", elements(c.self_inverse_elements));
  report.set("invertible_count", std::to_string(c.invertible.brute));
  report.set("invertible_formula", std::to_string(c.invertible.formula));
  report.set("invertible_elements", elements(c.invertible_elements));
  return report;
}

Report cmd_classify(std::string_view text) {
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("classify: expected a positive integer, got '" + std::string(text) + "'");
  }
  const Classification c = classify_order(n);

  Report report;
  report.command = "classify";
  report.set("order", std::to_string(n));
  report.set("squarefree", yes_no(is_squarefree(static_cast<std::int64_t>(n))));
  report.set("count", std::to_string(c.signatures.size()));
  report.set("minimal", c.minimal ? c.signatures[*c.minimal].to_string() : "none");
  if (c.signatures.size() > 1) report.set("isomorphism", "pairwise not isomorphic");

  ReportTable t{"meadows", {"#", "meadow", "signature", "minimal"}, {}};
  for (std::size_t i = 0; i < c.signatures.size(); ++i) {
    t.rows.push_back({std::to_string(i + 1), c.signatures[i].to_string(),
                      c.signatures[i].to_pairs(), yes_no(c.minimal == i)});
  }
  report.tables.push_back(std::move(t));
  return report;
}

Report cmd_isomorphic(std::string_view left, std::string_view right,
                      const BuildLimits& limits) {
  Report report;
  report.command = "isomorphic";
  std::optional<FiniteCommRing> a = load(left, limits, report, "left");
  if (!a) return report;
  std::optional<FiniteCommRing> b = load(right, limits, report, "right");
  if (!b) return report;
  std::optional<Meadow> ma = meadow_or_fail(*a, report, "left_");
  if (!ma) return report;
  std::optional<Meadow> mb = meadow_or_fail(*b, report, "right_");
  if (!mb) return report;

  const Signature sa = signature(*ma);
  const Signature sb = signature(*mb);
  report.set("left_signature", sa.to_pairs());
  report.set("right_signature", sb.to_pairs());
  report.set("isomorphic", yes_no(sa == sb));
  return report;
}

}  // namespace meadow
