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

#include "meadow/ring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace meadow {
namespace detail {

class RingImpl {
 public:
  RingImpl(RingKind kind, std::uint32_t order, std::uint32_t zero,
           std::uint32_t one)
      : kind_(kind), order_(order), zero_(zero), one_(one) {}
  virtual ~RingImpl() = default;

  virtual std::uint32_t add(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t neg(std::uint32_t a) const = 0;
  virtual std::string description() const = 0;

  RingKind kind() const noexcept { return kind_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t zero() const noexcept { return zero_; }
  std::uint32_t one() const noexcept { return one_; }

 private:
  RingKind kind_;
  std::uint32_t order_;
  std::uint32_t zero_;
  std::uint32_t one_;
};

FiniteCommRing wrap_ring(std::shared_ptr<const RingImpl> impl) {
  return FiniteCommRing(std::move(impl));
}

namespace {

class ZmodImpl final : public RingImpl {
 public:
  explicit ZmodImpl(std::uint32_t n) : RingImpl(RingKind::kZmod, n, 0, n == 1 ? 0 : 1) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    std::uint32_t s = a + b;
    return s >= order() ? s - order() : s;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % order());
  }
  std::uint32_t neg(std::uint32_t a) const override {
    return a == 0 ? 0 : order() - a;
  }
  std::string description() const override {
    return "Z/" + std::to_string(order()) + "Z";
  }
};

class GaloisImpl final : public RingImpl {
 public:
  explicit GaloisImpl(GaloisField field)
      : RingImpl(RingKind::kGalois, field.order(), 0, 1), field_(std::move(field)) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    return field_.add(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return field_.mul(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const override { return field_.neg(a); }
  std::string description() const override {
    return "GF(" + std::to_string(order()) + ")";
  }

  const GaloisField& field() const noexcept { return field_; }

 private:
  GaloisField field_;
};

}  // namespace

class ProductImpl final : public RingImpl {
 public:
  ProductImpl(std::vector<FiniteCommRing> factors, std::uint32_t order,
              std::uint32_t zero, std::uint32_t one)
      : RingImpl(RingKind::kProduct, order, zero, one),
        factors_(std::move(factors)) {}

  template <class Op>
  std::uint32_t combine(std::uint32_t a, std::uint32_t b, Op op) const {
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (const FiniteCommRing& f : factors_) {
      const std::uint32_t radix = f.order();
      out += op(f, Element{a % radix}, Element{b % radix}).index * place;
      a /= radix;
      b /= radix;
      place *= radix;
    }
    return out;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    return combine(a, b, [](const FiniteCommRing& f, Element x, Element y) {
      return f.add(x, y);
    });
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return combine(a, b, [](const FiniteCommRing& f, Element x, Element y) {
      return f.mul(x, y);
    });
  }
  std::uint32_t neg(std::uint32_t a) const override {
    return combine(a, 0, [](const FiniteCommRing& f, Element x, Element) {
      return f.neg(x);
    });
  }
  std::string description() const override {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += " x ";
      const FiniteCommRing& f = factors_[i];
      if (f.kind() == RingKind::kProduct) {
        out += "(" + f.description() + ")";
      } else {
        out += f.description();
      }
    }
    return out;
  }

  const std::vector<FiniteCommRing>& factors() const noexcept { return factors_; }

 private:
  std::vector<FiniteCommRing> factors_;
};

class TableImpl final : public RingImpl {
 public:
  TableImpl(RingSpec spec, std::vector<std::uint32_t> neg)
      : RingImpl(RingKind::kTable, spec.order, spec.zero, spec.one),
        spec_(std::move(spec)),
        neg_(std::move(neg)) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    return spec_.add_at(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return spec_.mul_at(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const override { return neg_[a]; }
  std::string description() const override {
    return "table ring of order " + std::to_string(order());
  }

 private:
  RingSpec spec_;
  std::vector<std::uint32_t> neg_;
};

class SubringImpl final : public RingImpl {
 public:
  SubringImpl(FiniteCommRing parent, std::vector<Element> embedding,
              std::vector<std::uint32_t> position, std::uint32_t zero,
              std::uint32_t one)
      : RingImpl(RingKind::kSubring, static_cast<std::uint32_t>(embedding.size()),
                 zero, one),
        parent_(std::move(parent)),
        embedding_(std::move(embedding)),
        position_(std::move(position)) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    return position_[parent_.add(embedding_[a], embedding_[b]).index];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return position_[parent_.mul(embedding_[a], embedding_[b]).index];
  }
  std::uint32_t neg(std::uint32_t a) const override {
    return position_[parent_.neg(embedding_[a]).index];
  }
  std::string description() const override {
    return "subring of order " + std::to_string(order()) + " of " +
           parent_.description();
  }

  const std::vector<Element>& embedding() const noexcept { return embedding_; }

 private:
  FiniteCommRing parent_;
  std::vector<Element> embedding_;
  std::vector<std::uint32_t> position_;  // parent index -> carrier index
};

}  // namespace detail

namespace {

constexpr std::uint32_t kNotInCarrier = ~std::uint32_t{0};

template <class Impl>
const Impl& impl_as(const std::shared_ptr<const detail::RingImpl>& impl,
                    RingKind kind, const char* what) {
  if (impl->kind() != kind) {
    throw ArgumentError(std::string(what) + " is not available for " +
                        impl->description());
  }
  return static_cast<const Impl&>(*impl);
}

}  // namespace

std::uint32_t FiniteCommRing::order() const noexcept { return impl_->order(); }
Element FiniteCommRing::zero() const noexcept { return Element{impl_->zero()}; }
Element FiniteCommRing::one() const noexcept { return Element{impl_->one()}; }
RingKind FiniteCommRing::kind() const noexcept { return impl_->kind(); }
std::string FiniteCommRing::description() const { return impl_->description(); }

Element FiniteCommRing::add(Element a, Element b) const {
  assert(contains(a) && contains(b));
  return Element{impl_->add(a.index, b.index)};
}

Element FiniteCommRing::mul(Element a, Element b) const {
  assert(contains(a) && contains(b));
  return Element{impl_->mul(a.index, b.index)};
}

Element FiniteCommRing::neg(Element a) const {
  assert(contains(a));
  return Element{impl_->neg(a.index)};
}

Element FiniteCommRing::pow(Element a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Element FiniteCommRing::element(std::uint64_t index) const {
  if (index >= order()) {
    throw ArgumentError("element index " + std::to_string(index) +
                        " outside carrier of order " + std::to_string(order()));
  }
  return Element{static_cast<std::uint32_t>(index)};
}

std::uint32_t FiniteCommRing::zmod_modulus() const {
  impl_as<detail::RingImpl>(impl_, RingKind::kZmod, "zmod_modulus");
  return order();
}

const GaloisField& FiniteCommRing::galois_field() const {
  return impl_as<detail::GaloisImpl>(impl_, RingKind::kGalois, "galois_field").field();
}

const std::vector<FiniteCommRing>& FiniteCommRing::factors() const {
  return impl_as<detail::ProductImpl>(impl_, RingKind::kProduct, "factors").factors();
}

std::vector<Element> FiniteCommRing::split(Element x) const {
  std::vector<Element> parts;
  std::uint32_t rest = x.index;
  for (const FiniteCommRing& f : factors()) {
    parts.push_back(Element{rest % f.order()});
    rest /= f.order();
  }
  return parts;
}

Element FiniteCommRing::join(std::span<const Element> parts) const {
  const auto& fs = factors();
  if (parts.size() != fs.size()) {
    throw ArgumentError("join: expected " + std::to_string(fs.size()) +
                        " components, got " + std::to_string(parts.size()));
  }
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out += fs[i].element(parts[i].index).index * place;
    place *= fs[i].order();
  }
  return Element{out};
}

const std::vector<Element>& FiniteCommRing::embedding() const {
  return impl_as<detail::SubringImpl>(impl_, RingKind::kSubring, "embedding").embedding();
}

FiniteCommRing make_zmod(std::uint64_t n, std::uint64_t max_order) {
  if (n < 1) throw ArgumentError("Z/nZ requires n >= 1");
  if (n > max_order) {
    throw BoundError("Z/" + std::to_string(n) + "Z exceeds the carrier bound " +
                     std::to_string(max_order));
  }
  return detail::wrap_ring(
      std::make_shared<detail::ZmodImpl>(static_cast<std::uint32_t>(n)));
}

FiniteCommRing make_galois(std::uint32_t p, std::uint32_t n,
                           std::uint64_t max_order) {
  return make_galois(make_galois_field(p, n, max_order));
}

FiniteCommRing make_galois(const GaloisField& field) {
  return detail::wrap_ring(std::make_shared<detail::GaloisImpl>(field));
}

FiniteCommRing make_product(std::vector<FiniteCommRing> factors,
                            std::uint64_t max_order) {
  if (factors.empty()) throw ArgumentError("product of an empty list of rings");
  std::uint64_t order = 1;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::uint64_t place = 1;
  for (const FiniteCommRing& f : factors) {
    order *= f.order();
    if (order > max_order) {
      throw BoundError("product order exceeds the carrier bound " +
                       std::to_string(max_order));
    }
    zero += static_cast<std::uint32_t>(f.zero().index * place);
    one += static_cast<std::uint32_t>(f.one().index * place);
    place *= f.order();
  }
  return detail::wrap_ring(std::make_shared<detail::ProductImpl>(
      std::move(factors), static_cast<std::uint32_t>(order), zero, one));
}

FiniteCommRing make_subring(const FiniteCommRing& parent,
                            std::vector<Element> carrier, Element one) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::vector<std::uint32_t> position(parent.order(), kNotInCarrier);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    position[parent.element(carrier[i].index).index] = static_cast<std::uint32_t>(i);
  }
  auto locate = [&](Element e, const char* what) {
    if (position[e.index] == kNotInCarrier) {
      throw ArgumentError(std::string("subring carrier is not closed under ") + what);
    }
    return position[e.index];
  };
  const std::uint32_t zero = locate(parent.zero(), "the zero constant");
  const std::uint32_t unit = locate(one, "the identity");
  for (Element a : carrier) {
    locate(parent.neg(a), "negation");
    if (parent.mul(a, one) != a) {
      throw ArgumentError("subring identity does not act as identity");
    }
    for (Element b : carrier) {
      locate(parent.add(a, b), "addition");
      locate(parent.mul(a, b), "multiplication");
    }
  }
  return detail::wrap_ring(std::make_shared<detail::SubringImpl>(
      parent, std::move(carrier), std::move(position), zero, unit));
}

bool AxiomReport::all_hold() const { return first_failure() == nullptr; }

const AxiomResult* AxiomReport::first_failure() const {
  for (const AxiomResult& r : results) {
    if (!r.holds && r.required) return &r;
  }
  return nullptr;
}

namespace {

// Table view used by every exhaustive check.
struct Tables {
  std::uint32_t n;
  std::uint32_t zero;
  std::uint32_t one;
  const std::vector<std::uint32_t>& add_t;
  const std::vector<std::uint32_t>& mul_t;
  const std::vector<std::uint32_t>& neg_t;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_t[static_cast<std::size_t>(a) * n + b];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_t[static_cast<std::size_t>(a) * n + b];
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_t[a]; }
};

template <class Pred>
AxiomResult check_unary(std::string id, std::string law, std::uint32_t n,
                        Pred pred) {
  AxiomResult r{std::move(id), std::move(law), true, {}, true};
  for (std::uint32_t x = 0; x < n; ++x) {
    if (!pred(x)) {
      r.holds = false;
      r.witness = {Element{x}};
      return r;
    }
  }
  return r;
}

template <class Pred>
AxiomResult check_binary(std::string id, std::string law, std::uint32_t n,
                         Pred pred) {
  AxiomResult r{std::move(id), std::move(law), true, {}, true};
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!pred(x, y)) {
        r.holds = false;
        r.witness = {Element{x}, Element{y}};
        return r;
      }
    }
  }
  return r;
}

template <class Pred>
AxiomResult check_ternary(std::string id, std::string law, std::uint32_t n,
                          Pred pred) {
  AxiomResult r{std::move(id), std::move(law), true, {}, true};
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      for (std::uint32_t z = 0; z < n; ++z) {
        if (!pred(x, y, z)) {
          r.holds = false;
          r.witness = {Element{x}, Element{y}, Element{z}};
          return r;
        }
      }
    }
  }
  return r;
}

AxiomReport run_checks(const Tables& t, bool require_commutative) {
  const std::uint32_t n = t.n;
  AxiomReport report;
  report.order = n;
  report.degenerate = n == 1;
  auto& out = report.results;

  out.push_back(check_ternary("(1)", "(x + y) + z = x + (y + z)", n,
      [&](auto x, auto y, auto z) { return t.add(t.add(x, y), z) == t.add(x, t.add(y, z)); }));
  out.push_back(check_binary("(2)", "x + y = y + x", n,
      [&](auto x, auto y) { return t.add(x, y) == t.add(y, x); }));
  out.push_back(check_unary("(3)", "x + 0 = x", n,
      [&](auto x) { return t.add(x, t.zero) == x; }));
  out.push_back(check_unary("(4)", "x + (-x) = 0", n,
      [&](auto x) { return t.add(x, t.neg(x)) == t.zero; }));
  out.push_back(check_ternary("(5)", "(x * y) * z = x * (y * z)", n,
      [&](auto x, auto y, auto z) { return t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z)); }));
  AxiomResult comm = check_binary("(6)", "x * y = y * x", n,
      [&](auto x, auto y) { return t.mul(x, y) == t.mul(y, x); });
  comm.required = require_commutative;
  out.push_back(std::move(comm));
  if (require_commutative) {
    out.push_back(check_unary("(7)", "x * 1 = x", n,
        [&](auto x) { return t.mul(x, t.one) == x; }));
    out.push_back(check_ternary("(8)", "x * (y + z) = x * y + x * z", n,
        [&](auto x, auto y, auto z) { return t.mul(x, t.add(y, z)) == t.add(t.mul(x, y), t.mul(x, z)); }));
  } else {
    out.push_back(check_unary("(7)", "x * 1 = x and 1 * x = x", n,
        [&](auto x) { return t.mul(x, t.one) == x && t.mul(t.one, x) == x; }));
    out.push_back(check_ternary("(8)", "x * (y + z) = x * y + x * z and (y + z) * x = y * x + z * x", n,
        [&](auto x, auto y, auto z) {
          return t.mul(x, t.add(y, z)) == t.add(t.mul(x, y), t.mul(x, z)) &&
                 t.mul(t.add(y, z), x) == t.add(t.mul(y, x), t.mul(z, x));
        }));
  }

  // P1: no element other than 1 is a two-sided multiplicative identity.
  {
    AxiomResult r{"P1", "the identity 1 is unique", true, {}, true};
    for (std::uint32_t u = 0; u < n && r.holds; ++u) {
      if (u == t.one) continue;
      bool identity = true;
      for (std::uint32_t x = 0; x < n && identity; ++x) {
        identity = t.mul(u, x) == x && t.mul(x, u) == x;
      }
      if (identity) {
        r.holds = false;
        r.witness = {Element{u}};
      }
    }
    out.push_back(std::move(r));
  }
  out.push_back(check_unary("P2", "0 * x = 0", n,
      [&](auto x) { return t.mul(t.zero, x) == t.zero; }));
  out.push_back(check_binary("P3", "(-x) * y = -(x * y)", n,
      [&](auto x, auto y) { return t.mul(t.neg(x), y) == t.neg(t.mul(x, y)); }));
  out.push_back(check_unary("P4", "(-1) * x = -x", n,
      [&](auto x) { return t.mul(t.neg(t.one), x) == t.neg(x); }));
  out.push_back(check_unary("P5", "-0 = 0", 1,
      [&](auto) { return t.neg(t.zero) == t.zero; }));
  out.push_back(check_binary("P6", "(-x) + (-y) = -(x + y)", n,
      [&](auto x, auto y) { return t.add(t.neg(x), t.neg(y)) == t.neg(t.add(x, y)); }));
  out.push_back(check_unary("P7", "-(-x) = x", n,
      [&](auto x) { return t.neg(t.neg(x)) == x; }));
  return report;
}

// Smallest y with x + y = 0; x itself when there is none, which axiom (4)
// then reports.
std::vector<std::uint32_t> derive_negation(const RingSpec& spec) {
  std::vector<std::uint32_t> neg(spec.order);
  for (std::uint32_t x = 0; x < spec.order; ++x) {
    neg[x] = x;
    for (std::uint32_t y = 0; y < spec.order; ++y) {
      if (spec.add_at(x, y) == spec.zero) {
        neg[x] = y;
        break;
      }
    }
  }
  return neg;
}

void check_structure(const RingSpec& spec) {
  const std::size_t cells = static_cast<std::size_t>(spec.order) * spec.order;
  if (spec.order == 0) throw RingSpecError("ring order must be at least 1", {});
  if (spec.add.size() != cells || spec.mul.size() != cells) {
    throw RingSpecError("operation tables must have order x order = " +
                            std::to_string(cells) + " entries",
                        {});
  }
  if (spec.zero >= spec.order || spec.one >= spec.order) {
    throw RingSpecError("zero and one must be carrier indices below " +
                            std::to_string(spec.order),
                        {});
  }
  auto closed = [&](const std::vector<std::uint32_t>& table, const char* name) {
    for (std::size_t i = 0; i < cells; ++i) {
      if (table[i] >= spec.order) {
        throw RingSpecError(std::string(name) + "(" + std::to_string(i / spec.order) +
                                "," + std::to_string(i % spec.order) + ") = " +
                                std::to_string(table[i]) + " is outside the carrier [0, " +
                                std::to_string(spec.order) + ")",
                            {});
      }
    }
  };
  closed(spec.add, "add");
  closed(spec.mul, "mul");
}

std::string describe_failure(const AxiomResult& r) {
  std::ostringstream out;
  out << "axiom " << r.id << " " << r.law << " fails at";
  const char* names[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    out << (i ? ", " : " ") << (i < 3 ? names[i] : "u") << " = " << r.witness[i].index;
  }
  return out.str();
}

}  // namespace

AxiomReport check_axioms(const FiniteCommRing& ring, std::uint64_t max_order) {
  if (ring.order() > max_order) {
    throw BoundError("exhaustive axiom check limited to order " +
                     std::to_string(max_order) + ", ring has order " +
                     std::to_string(ring.order()));
  }
  const RingSpec spec = dump_ring(ring);
  std::vector<std::uint32_t> neg(ring.order());
  for (std::uint32_t x = 0; x < ring.order(); ++x) neg[x] = ring.neg(Element{x}).index;
  return run_checks(Tables{spec.order, spec.zero, spec.one, spec.add, spec.mul, neg}, true);
}

AxiomReport check_spec_axioms(const RingSpec& spec, bool require_commutative) {
  check_structure(spec);
  const std::vector<std::uint32_t> neg = derive_negation(spec);
  return run_checks(Tables{spec.order, spec.zero, spec.one, spec.add, spec.mul, neg},
                    require_commutative);
}

RingSpec dump_ring(const FiniteCommRing& ring) {
  RingSpec spec;
  spec.order = ring.order();
  spec.zero = ring.zero().index;
  spec.one = ring.one().index;
  const std::size_t cells = static_cast<std::size_t>(spec.order) * spec.order;
  spec.add.resize(cells);
  spec.mul.resize(cells);
  for (std::uint32_t a = 0; a < spec.order; ++a) {
    for (std::uint32_t b = 0; b < spec.order; ++b) {
      spec.add[static_cast<std::size_t>(a) * spec.order + b] = ring.add(Element{a}, Element{b}).index;
      spec.mul[static_cast<std::size_t>(a) * spec.order + b] = ring.mul(Element{a}, Element{b}).index;
    }
  }
  return spec;
}

FiniteCommRing load_ring(const RingSpec& spec, std::uint64_t max_order) {
  if (spec.order > max_order) {
    throw BoundError("table ring of order " + std::to_string(spec.order) +
                     " exceeds the carrier bound " + std::to_string(max_order));
  }
  AxiomReport report = check_spec_axioms(spec, true);
  if (!report.all_hold()) {
    // Every failing axiom is named; one bad cell often breaks several.
    std::string what;
    for (const AxiomResult& r : report.results) {
      if (r.required && !r.holds) what += (what.empty() ? "" : "; ") + describe_failure(r);
    }
    throw RingSpecError(what, std::move(report));
  }
  return detail::wrap_ring(
      std::make_shared<detail::TableImpl>(spec, derive_negation(spec)));
}

}  // namespace meadow
