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

#include <gtest/gtest.h>

#include <algorithm>

#include "meadow/errors.hpp"
#include "meadow/ring.hpp"
#include "support/oracles.hpp"

namespace meadow {
namespace {

Element E(std::uint32_t i) { return Element{i}; }

TEST(ZmodTest, Arithmetic) {
  const FiniteCommRing z10 = make_zmod(10);
  EXPECT_EQ(z10.order(), 10u);
  EXPECT_EQ(z10.add(E(7), E(5)), E(2));
  EXPECT_EQ(z10.mul(E(7), E(5)), E(5));
  EXPECT_EQ(z10.neg(E(3)), E(7));
  EXPECT_EQ(z10.pow(E(3), 4), E(1));
  EXPECT_EQ(z10.description(), "Z/10Z");
  EXPECT_EQ(z10.kind(), RingKind::kZmod);
  EXPECT_EQ(z10.zmod_modulus(), 10u);
  EXPECT_THROW(z10.element(10), ArgumentError);
  EXPECT_THROW(z10.galois_field(), ArgumentError);
}

TEST(ZmodTest, Bounds) {
  EXPECT_THROW(make_zmod(0), ArgumentError);
  EXPECT_THROW(make_zmod(4097), BoundError);
  EXPECT_NO_THROW(make_zmod(4096));
  const FiniteCommRing z1 = make_zmod(1);
  EXPECT_TRUE(z1.is_degenerate());
  EXPECT_EQ(z1.zero(), z1.one());
}

TEST(GaloisRingTest, Gf4) {
  const FiniteCommRing f = make_galois(2, 2);
  EXPECT_EQ(f.order(), 4u);
  EXPECT_EQ(f.description(), "GF(4)");
  EXPECT_EQ(f.add(E(2), E(3)), E(1));
  EXPECT_EQ(f.mul(E(2), E(3)), E(1));
  EXPECT_EQ(f.mul(E(2), E(2)), E(3));
  EXPECT_EQ(f.neg(E(3)), E(3));
}

TEST(ProductTest, MixedRadixLayout) {
  const FiniteCommRing r = make_product({make_galois(2, 1), make_galois(5, 1)});
  EXPECT_EQ(r.order(), 10u);
  EXPECT_EQ(r.description(), "GF(2) x GF(5)");
  // First factor is the least significant digit.
  EXPECT_EQ(r.split(E(7)), (std::vector<Element>{E(1), E(3)}));
  const std::vector<Element> parts{E(1), E(3)};
  EXPECT_EQ(r.join(parts), E(7));
  EXPECT_EQ(r.one(), E(1 + 2 * 1));
  for (std::uint32_t a = 0; a < 10; ++a) {
    for (std::uint32_t b = 0; b < 10; ++b) {
      const auto x = r.split(E(a));
      const auto y = r.split(E(b));
      const std::vector<Element> sum{E((x[0].index + y[0].index) % 2),
                                     E((x[1].index + y[1].index) % 5)};
      const std::vector<Element> prod{E(x[0].index * y[0].index % 2),
                                      E(x[1].index * y[1].index % 5)};
      EXPECT_EQ(r.add(E(a), E(b)), r.join(sum));
      EXPECT_EQ(r.mul(E(a), E(b)), r.join(prod));
    }
  }
}

TEST(ProductTest, Errors) {
  EXPECT_THROW(make_product({}), ArgumentError);
  EXPECT_THROW(make_product({make_zmod(64), make_zmod(65)}), BoundError);
}

TEST(SubringTest, IdealWithOwnIdentity) {
  const FiniteCommRing z10 = make_zmod(10);
  const FiniteCommRing s = make_subring(z10, {E(0), E(2), E(4), E(6), E(8)}, E(6));
  EXPECT_EQ(s.order(), 5u);
  EXPECT_EQ(s.kind(), RingKind::kSubring);
  EXPECT_EQ(s.embedding()[s.one().index], E(6));
  EXPECT_TRUE(check_axioms(s).all_hold());
  EXPECT_THROW(make_subring(z10, {E(0), E(2), E(5)}, E(5)), ArgumentError);
}

TEST(AxiomTest, ConstructedRingsPass) {
  for (const FiniteCommRing& r :
       {make_zmod(1), make_zmod(2), make_zmod(10), make_zmod(12), make_galois(3, 2),
        make_product({make_galois(2, 2), make_zmod(3)})}) {
    const AxiomReport rep = check_axioms(r);
    EXPECT_TRUE(rep.all_hold()) << r.description();
    // 8 axioms and 7 consequences
    EXPECT_EQ(rep.results.size(), 15u);
    EXPECT_EQ(rep.degenerate, r.order() == 1);
  }
}

TEST(AxiomTest, BoundEnforced) {
  EXPECT_THROW(check_axioms(make_zmod(600)), BoundError);
  EXPECT_NO_THROW(check_axioms(make_zmod(60), 60));
}

TEST(AxiomTest, DetectsBrokenIdentity) {
  RingSpec s = dump_ring(make_zmod(3));
  s.add[0] = 1;  // 0 + 0 = 1
  const AxiomReport rep = check_spec_axioms(s, true);
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_FALSE(rep.all_hold());
}

TEST(AxiomTest, NonCommutativeIsInformationalWhenNotRequired) {
  const RingSpec t = testing::upper_triangular_gf2(false);
  EXPECT_FALSE(check_spec_axioms(t, true).all_hold());
  const AxiomReport rep = check_spec_axioms(t, false);
  EXPECT_TRUE(rep.all_hold());
  const auto it = std::find_if(rep.results.begin(), rep.results.end(),
                               [](const AxiomResult& r) { return r.id == "(6)"; });
  ASSERT_NE(it, rep.results.end());
  EXPECT_FALSE(it->holds);
  EXPECT_FALSE(it->required);
}

TEST(LoadRingTest, RoundTrip) {
  for (const FiniteCommRing& r :
       {make_zmod(1), make_zmod(6), make_galois(2, 3), make_product({make_zmod(2), make_zmod(3)})}) {
    const RingSpec spec = dump_ring(r);
    const FiniteCommRing t = load_ring(spec);
    EXPECT_EQ(t.kind(), RingKind::kTable);
    EXPECT_EQ(dump_ring(t), spec);
  }
}

TEST(LoadRingTest, RejectsStructuralDefects) {
  RingSpec s = dump_ring(make_zmod(3));
  s.mul[4] = 7;
  try {
    load_ring(s);
    FAIL();
  } catch (const RingSpecError& e) {
    EXPECT_TRUE(e.report().results.empty());
  }
  s = dump_ring(make_zmod(3));
  s.add.pop_back();
  EXPECT_THROW(load_ring(s), RingSpecError);
  s = dump_ring(make_zmod(3));
  s.one = 3;
  EXPECT_THROW(load_ring(s), RingSpecError);
}

TEST(LoadRingTest, RejectsAxiomFailureWithMessage) {
  RingSpec s = dump_ring(make_zmod(3));
  s.add[0] = 1;
  try {
    load_ring(s);
    FAIL();
  } catch (const RingSpecError& e) {
    EXPECT_FALSE(e.report().all_hold());
    EXPECT_NE(std::string(e.what()).find("axiom"), std::string::npos);
  }
}

TEST(LoadRingTest, RejectsNonCommutative) {
  EXPECT_THROW(load_ring(testing::upper_triangular_gf2(false)), RingSpecError);
}

TEST(LoadRingTest, BoundEnforced) {
  RingSpec s;
  s.order = 513;
  s.add.assign(513u * 513u, 0);
  s.mul.assign(513u * 513u, 0);
  EXPECT_THROW(load_ring(s), BoundError);
}

TEST(ProductTest, OrthogonalUnitVectors) {
  const FiniteCommRing v = make_product({make_galois(2, 1), make_galois(2, 1)});
  // (1,0) * (0,1) = (0,0)
  EXPECT_EQ(v.mul(E(1), E(2)), E(0));
  EXPECT_EQ(v.description(), "GF(2) x GF(2)");
  const FiniteCommRing single = make_product({make_galois(2, 1)});
  EXPECT_EQ(single.order(), 2u);
  EXPECT_EQ(single.mul(E(1), E(1)), E(1));
}

TEST(ZmodTest, Zmod4TwoSquaredIsZero) { EXPECT_EQ(make_zmod(4).mul(E(2), E(2)), E(0)); }

// Every constructed ring up to order 64, meadow or not.
std::vector<FiniteCommRing> constructed_rings() {
  std::vector<FiniteCommRing> out;
  for (std::uint32_t n = 1; n <= 64; ++n) out.push_back(make_zmod(n));
  for (const auto& e : testing::field_product_catalog(64, testing::prime_powers_up_to(64))) {
    out.push_back(e.ring);
  }
  out.push_back(make_product({make_zmod(4), make_zmod(6)}));
  out.push_back(make_product({make_zmod(8), make_galois(2, 2), make_zmod(2)}));
  return out;
}

TEST(AxiomTest, BasicPropertiesUpTo64) {
  for (const FiniteCommRing& r : constructed_rings()) {
    const AxiomReport rep = check_axioms(r);
    EXPECT_TRUE(rep.all_hold()) << r.description();
    // 0x = 0, (-1)x = -x, -(-x) = x, checked here directly as well.
    for (std::uint32_t i = 0; i < r.order(); ++i) {
      const Element x{i};
      ASSERT_EQ(r.mul(r.zero(), x), r.zero());
      ASSERT_EQ(r.mul(r.neg(r.one()), x), r.neg(x));
      ASSERT_EQ(r.neg(r.neg(x)), x);
    }
  }
}

TEST(LoadRingTest, RoundTripUpTo64) {
  for (const FiniteCommRing& r : constructed_rings()) {
    const FiniteCommRing t = load_ring(dump_ring(r));
    ASSERT_EQ(t.order(), r.order());
    EXPECT_EQ(t.zero(), r.zero());
    EXPECT_EQ(t.one(), r.one());
    for (std::uint32_t a = 0; a < r.order(); ++a) {
      EXPECT_EQ(t.neg(E(a)), r.neg(E(a)));
      for (std::uint32_t b = 0; b < r.order(); ++b) {
        ASSERT_EQ(t.add(E(a), E(b)), r.add(E(a), E(b)));
        ASSERT_EQ(t.mul(E(a), E(b)), r.mul(E(a), E(b)));
      }
    }
  }
}

TEST(ProductTest, ProjectionsAreHomomorphisms) {
  const std::vector<FiniteCommRing> parts{make_zmod(4), make_galois(3, 1), make_galois(2, 2),
                                          make_zmod(6)};
  for (const FiniteCommRing& a : parts) {
    for (const FiniteCommRing& b : parts) {
      const FiniteCommRing p = make_product({a, b});
      ASSERT_EQ(p.order(), a.order() * b.order());
      const auto pa = p.split(p.one());
      EXPECT_EQ(pa[0], a.one());
      EXPECT_EQ(pa[1], b.one());
      for (std::uint32_t x = 0; x < p.order(); ++x) {
        for (std::uint32_t y = 0; y < p.order(); ++y) {
          const auto sx = p.split(E(x));
          const auto sy = p.split(E(y));
          const auto sum = p.split(p.add(E(x), E(y)));
          const auto prod = p.split(p.mul(E(x), E(y)));
          ASSERT_EQ(sum[0], a.add(sx[0], sy[0]));
          ASSERT_EQ(sum[1], b.add(sx[1], sy[1]));
          ASSERT_EQ(prod[0], a.mul(sx[0], sy[0]));
          ASSERT_EQ(prod[1], b.mul(sx[1], sy[1]));
        }
      }
    }
  }
}

}  // namespace
}  // namespace meadow
