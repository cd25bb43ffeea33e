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

#include "meadow/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace meadow {

namespace {

constexpr std::uint64_t kExhaustiveHomomorphismBound = 512;

bool is_idempotent(const FiniteCommRing& r, Element e) {
  return e != r.zero() && r.mul(e, e) == e;
}

}  // namespace

std::uint64_t FieldId::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  return q;
}

Signature::Signature(std::vector<FieldId> fields) : fields_(std::move(fields)) {
  std::sort(fields_.begin(), fields_.end(), [](const FieldId& a, const FieldId& b) {
    return std::make_tuple(a.order(), a.p) < std::make_tuple(b.order(), b.p);
  });
}

std::uint64_t Signature::product() const {
  std::uint64_t n = 1;
  for (const FieldId& f : fields_) n *= f.order();
  return n;
}

bool Signature::is_minimal() const {
  std::set<std::uint32_t> primes;
  for (const FieldId& f : fields_) {
    if (f.k != 1 || !primes.insert(f.p).second) return false;
  }
  return true;
}

std::string Signature::to_string() const {
  if (fields_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += " x ";
    out += "GF(" + std::to_string(fields_[i].order()) + ")";
  }
  return out;
}

std::string Signature::to_pairs() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(fields_[i].p) + "," + std::to_string(fields_[i].k) + ")";
  }
  return out + "}";
}

std::vector<Element> idempotents(const Meadow& m) {
  const FiniteCommRing& r = m.ring();
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < r.order(); ++i) {
    if (is_idempotent(r, Element{i})) out.push_back(Element{i});
  }
  return out;
}

bool idem_leq(const Meadow& m, Element e, Element f) {
  const FiniteCommRing& r = m.ring();
  for (Element x : {e, f}) {
    if (!r.contains(x) || !is_idempotent(r, x)) {
      throw ArgumentError(std::to_string(x.index) + " is not an idempotent");
    }
  }
  return r.mul(e, f) == e;
}

std::vector<Element> minimal_idempotents(const Meadow& m) {
  const std::vector<Element> all = idempotents(m);
  std::vector<Element> out;
  for (Element e : all) {
    const bool minimal = std::none_of(all.begin(), all.end(), [&](Element f) {
      return f != e && idem_leq(m, f, e);
    });
    if (minimal) out.push_back(e);
  }
  return out;
}

Component component(const Meadow& m, Element e) {
  const FiniteCommRing& r = m.ring();
  if (!r.contains(e) || !is_idempotent(r, e)) {
    throw ArgumentError(std::to_string(e.index) + " is not an idempotent");
  }
  std::vector<bool> member(r.order(), false);
  for (std::uint32_t i = 0; i < r.order(); ++i) member[r.mul(e, Element{i}).index] = true;
  std::vector<Element> carrier;
  for (std::uint32_t i = 0; i < r.order(); ++i) {
    if (member[i]) carrier.push_back(Element{i});
  }
  FiniteCommRing sub = make_subring(r, carrier, e);

  std::vector<std::uint32_t> position(r.order(), 0);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    position[carrier[i].index] = static_cast<std::uint32_t>(i);
  }
  std::vector<Element> inverse(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    const Element inv = m.inverse(carrier[i]);
    if (!member[inv.index]) {
      throw InternalError("inverse of " + std::to_string(carrier[i].index) +
                          " leaves the component e*M");
    }
    inverse[i] = Element{position[inv.index]};
  }
  return Component{e, make_meadow(std::move(sub), std::move(inverse))};
}

FieldId identify_field(const Meadow& field) {
  const FiniteCommRing& r = field.ring();
  if (r.order() < 2) throw ArgumentError("the zero ring is not a field");
  for (std::uint32_t i = 0; i < r.order(); ++i) {
    const Element x{i};
    if (x != r.zero() && r.mul(x, field.inverse(x)) != r.one()) {
      throw ArgumentError("not a field: " + std::to_string(i) + " * " +
                          std::to_string(field.inverse(x).index) + " != 1");
    }
  }
  std::uint32_t characteristic = 1;
  for (Element s = r.one(); s != r.zero(); s = r.add(s, r.one())) ++characteristic;
  if (!is_prime(characteristic)) {
    throw ArgumentError("characteristic " + std::to_string(characteristic) +
                        " is not prime");
  }
  std::uint32_t k = 0;
  std::uint64_t q = 1;
  while (q < r.order()) {
    q *= characteristic;
    ++k;
  }
  if (q != r.order()) {
    throw ArgumentError("field order " + std::to_string(r.order()) +
                        " is not a power of its characteristic " +
                        std::to_string(characteristic));
  }
  return FieldId{characteristic, k};
}

std::string Decomposition::component_string() const {
  if (fields.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += " x ";
    out += "GF(" + std::to_string(fields[i].order()) + ")";
  }
  return out;
}

namespace {

Element product_inverse(const Decomposition& d, Element x) {
  std::vector<Element> parts = d.product.split(x);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] = d.components[i].meadow.inverse(parts[i]);
  }
  return d.product.join(parts);
}

[[noreturn]] void fail(const std::string& what) {
  throw InternalError("decomposition check failed: " + what);
}

}  // namespace

Decomposition decompose(const Meadow& m) {
  const FiniteCommRing& r = m.ring();
  if (r.is_degenerate()) {
    // Empty product: the empty sum of idempotents is 0, which equals 1 here.
    return Decomposition{{}, {}, {}, make_zmod(1), {Element{0}}, {Element{0}}, true};
  }

  std::vector<Element> minimals = minimal_idempotents(m);
  Element sum = r.zero();
  for (std::size_t i = 0; i < minimals.size(); ++i) {
    sum = r.add(sum, minimals[i]);
    for (std::size_t j = i + 1; j < minimals.size(); ++j) {
      if (r.mul(minimals[i], minimals[j]) != r.zero()) {
        fail("minimal idempotents " + std::to_string(minimals[i].index) + " and " +
             std::to_string(minimals[j].index) + " are not orthogonal");
      }
    }
  }
  if (sum != r.one()) fail("minimal idempotents do not sum to 1");

  std::vector<Component> components;
  std::vector<FieldId> fields;
  std::vector<FiniteCommRing> rings;
  for (Element e : minimals) {
    components.push_back(component(m, e));
    try {
      fields.push_back(identify_field(components.back().meadow));
    } catch (const ArgumentError& err) {
      throw InternalError("component " + std::to_string(e.index) + "*M: " + err.what());
    }
    rings.push_back(components.back().meadow.ring());
  }
  FiniteCommRing product = make_product(std::move(rings), r.order());
  if (product.order() != r.order()) fail("product order differs from |M|");

  // position[i][x] = index of e_i*x inside component i
  std::vector<std::vector<std::uint32_t>> position(components.size(),
                                                   std::vector<std::uint32_t>(r.order(), 0));
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& emb = components[i].meadow.ring().embedding();
    for (std::size_t j = 0; j < emb.size(); ++j) {
      position[i][emb[j].index] = static_cast<std::uint32_t>(j);
    }
  }

  std::vector<Element> forward(r.order());
  std::vector<Element> backward(r.order(), Element{~std::uint32_t{0}});
  std::vector<Element> parts(components.size());
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    for (std::size_t i = 0; i < components.size(); ++i) {
      parts[i] = Element{position[i][r.mul(minimals[i], Element{x}).index]};
    }
    forward[x] = product.join(parts);
    if (backward[forward[x].index].index != ~std::uint32_t{0}) fail("h is not injective");
    backward[forward[x].index] = Element{x};
  }

  Decomposition d{std::move(minimals), std::move(components), std::move(fields),
                  std::move(product), std::move(forward), std::move(backward), false};

  const auto& h = d.forward;
  const FiniteCommRing& p = d.product;
  if (h[r.zero().index] != p.zero()) fail("h(0) != 0");
  if (h[r.one().index] != p.one()) fail("h(1) != 1");
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    const Element ex{x};
    if (h[r.neg(ex).index] != p.neg(h[x])) fail("h(-x) != -h(x) at " + std::to_string(x));
    if (h[m.inverse(ex).index] != product_inverse(d, h[x])) {
      fail("h(x^-1) != h(x)^-1 at " + std::to_string(x));
    }
  }
  if (r.order() <= kExhaustiveHomomorphismBound) {
    // The product's operations are componentwise, so h(x) op h(y) is
    // checked one component at a time against tabulated component tables.
    const std::size_t k = d.components.size();
    std::vector<std::vector<std::uint32_t>> add_t(k), mul_t(k);
    for (std::size_t i = 0; i < k; ++i) {
      const FiniteCommRing& c = d.components[i].meadow.ring();
      for (std::uint32_t a = 0; a < c.order(); ++a) {
        for (std::uint32_t b = 0; b < c.order(); ++b) {
          add_t[i].push_back(c.add(Element{a}, Element{b}).index);
          mul_t[i].push_back(c.mul(Element{a}, Element{b}).index);
        }
      }
    }
    std::vector<std::uint32_t> parts_of(static_cast<std::size_t>(r.order()) * k);
    for (std::uint32_t x = 0; x < r.order(); ++x) {
      const std::vector<Element> px = p.split(h[x]);
      for (std::size_t i = 0; i < k; ++i) parts_of[x * k + i] = px[i].index;
    }
    for (std::uint32_t x = 0; x < r.order(); ++x) {
      for (std::uint32_t y = 0; y < r.order(); ++y) {
        const std::uint32_t sum = r.add(Element{x}, Element{y}).index;
        const std::uint32_t prod = r.mul(Element{x}, Element{y}).index;
        for (std::size_t i = 0; i < k; ++i) {
          const std::uint32_t c = d.components[i].meadow.order();
          const std::uint32_t a = parts_of[x * k + i];
          const std::uint32_t b = parts_of[y * k + i];
          if (parts_of[sum * k + i] != add_t[i][a * c + b]) fail("h(x+y) != h(x)+h(y)");
          if (parts_of[prod * k + i] != mul_t[i][a * c + b]) fail("h(x*y) != h(x)*h(y)");
        }
      }
    }
    d.verified_exhaustively = true;
  }
  if (d.signature().product() != r.order()) fail("signature product differs from |M|");
  return d;
}

Signature signature(const Meadow& m) { return decompose(m).signature(); }

bool is_isomorphic(const Meadow& a, const Meadow& b) {
  if (a.order() != b.order()) return false;
  return signature(a) == signature(b);
}

bool is_minimal_meadow(const Meadow& m) { return signature(m).is_minimal(); }

}  // namespace meadow
