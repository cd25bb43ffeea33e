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

#include <cstdlib>
#include <string>

#include "meadow/meadow_c.h"

namespace {

std::string data(const std::string& name) {
  const char* dir = std::getenv("MEADOW_TEST_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

struct Ring {
  meadow_ring* ptr = nullptr;
  ~Ring() { meadow_ring_free(ptr); }
};

struct ReportHandle {
  meadow_report* ptr = nullptr;
  ~ReportHandle() { meadow_report_free(ptr); }
};

TEST(CApiTest, RingArithmetic) {
  Ring r;
  ASSERT_EQ(meadow_ring_create("zmod:10", nullptr, &r.ptr), MEADOW_OK);
  EXPECT_EQ(meadow_ring_order(r.ptr), 10u);
  EXPECT_EQ(meadow_ring_one(r.ptr), 1u);
  std::uint32_t v = 0;
  ASSERT_EQ(meadow_ring_add(r.ptr, 7, 5, &v), MEADOW_OK);
  EXPECT_EQ(v, 2u);
  ASSERT_EQ(meadow_ring_mul(r.ptr, 7, 5, &v), MEADOW_OK);
  EXPECT_EQ(v, 5u);
  ASSERT_EQ(meadow_ring_neg(r.ptr, 3, &v), MEADOW_OK);
  EXPECT_EQ(v, 7u);
  EXPECT_EQ(meadow_ring_add(r.ptr, 10, 0, &v), MEADOW_USAGE_ERROR);
  EXPECT_NE(std::string(meadow_last_error()), "");
}

TEST(CApiTest, Inverse) {
  Ring r;
  ASSERT_EQ(meadow_ring_create("zmod:10", nullptr, &r.ptr), MEADOW_OK);
  const std::uint32_t expected[] = {0, 1, 8, 7, 4, 5, 6, 3, 2, 9};
  for (std::uint32_t x = 0; x < 10; ++x) {
    std::uint32_t y = 99;
    int exists = 0;
    ASSERT_EQ(meadow_ring_inverse(r.ptr, x, &y, &exists), MEADOW_OK);
    EXPECT_EQ(exists, 1);
    EXPECT_EQ(y, expected[x]);
  }
  int is_meadow = 0;
  ASSERT_EQ(meadow_ring_is_meadow(r.ptr, &is_meadow, nullptr), MEADOW_OK);
  EXPECT_EQ(is_meadow, 1);
}

TEST(CApiTest, NotAMeadow) {
  Ring r;
  ASSERT_EQ(meadow_ring_create("zmod:4", nullptr, &r.ptr), MEADOW_OK);
  int is_meadow = 1;
  std::uint32_t witness = 0;
  ASSERT_EQ(meadow_ring_is_meadow(r.ptr, &is_meadow, &witness), MEADOW_OK);
  EXPECT_EQ(is_meadow, 0);
  EXPECT_EQ(witness, 2u);
  std::uint32_t y = 0;
  int exists = 1;
  ASSERT_EQ(meadow_ring_inverse(r.ptr, 2, &y, &exists), MEADOW_OK);
  EXPECT_EQ(exists, 0);
  std::size_t count = 0;
  EXPECT_EQ(meadow_ring_signature(r.ptr, nullptr, nullptr, 0, &count), MEADOW_DOMAIN_FAILURE);
}

TEST(CApiTest, Signature) {
  Ring r;
  ASSERT_EQ(meadow_ring_create("zmod:30", nullptr, &r.ptr), MEADOW_OK);
  std::uint32_t primes[4], exps[4];
  std::size_t count = 0;
  ASSERT_EQ(meadow_ring_signature(r.ptr, primes, exps, 4, &count), MEADOW_OK);
  ASSERT_EQ(count, 3u);
  EXPECT_EQ(primes[0], 2u);
  EXPECT_EQ(primes[1], 3u);
  EXPECT_EQ(primes[2], 5u);
  EXPECT_EQ(exps[0] + exps[1] + exps[2], 3u);
  ASSERT_EQ(meadow_ring_signature(r.ptr, primes, exps, 1, &count), MEADOW_OK);
  EXPECT_EQ(count, 3u);
}

TEST(CApiTest, CreateErrors) {
  meadow_ring* r = nullptr;
  EXPECT_EQ(meadow_ring_create("gf:4^1", nullptr, &r), MEADOW_USAGE_ERROR);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::string(meadow_last_error()).find("not prime"), std::string::npos);
  meadow_options opt;
  meadow_options_init(&opt);
  EXPECT_EQ(opt.max_structured_order, 4096u);
  EXPECT_EQ(opt.max_table_order, 512u);
  opt.max_structured_order = 8;
  EXPECT_EQ(meadow_ring_create("zmod:9", &opt, &r), MEADOW_USAGE_ERROR);
  EXPECT_EQ(meadow_ring_create(("file:" + data("bad_add.ring")).c_str(), nullptr, &r),
            MEADOW_DOMAIN_FAILURE);
  EXPECT_EQ(meadow_ring_create(nullptr, nullptr, &r), MEADOW_USAGE_ERROR);
}

TEST(CApiTest, SpecRoundTrip) {
  Ring a;
  ASSERT_EQ(meadow_ring_create("gf:3^2", nullptr, &a.ptr), MEADOW_OK);
  char* text = nullptr;
  ASSERT_EQ(meadow_ring_dump_spec(a.ptr, &text), MEADOW_OK);
  Ring b;
  ASSERT_EQ(meadow_ring_from_spec(text, nullptr, &b.ptr), MEADOW_OK);
  char* again = nullptr;
  ASSERT_EQ(meadow_ring_dump_spec(b.ptr, &again), MEADOW_OK);
  EXPECT_STREQ(text, again);
  meadow_string_free(text);
  meadow_string_free(again);
  meadow_ring* bad = nullptr;
  EXPECT_EQ(meadow_ring_from_spec("meadowspec 1\norder 2\n", nullptr, &bad), MEADOW_USAGE_ERROR);
}

TEST(CApiTest, Commands) {
  ReportHandle rep;
  ASSERT_EQ(meadow_cmd_decompose("zmod:10", nullptr, &rep.ptr), MEADOW_OK);
  EXPECT_EQ(meadow_report_status(rep.ptr), MEADOW_OK);
  EXPECT_STREQ(meadow_report_get(rep.ptr, "minimals"), "[5, 6]");
  EXPECT_EQ(meadow_report_get(rep.ptr, "no_such_key"), nullptr);
  char* text = nullptr;
  ASSERT_EQ(meadow_report_render(rep.ptr, MEADOW_FORMAT_MACHINE, &text), MEADOW_OK);
  EXPECT_EQ(std::string(text).rfind("command: decompose\nstatus: 0\n", 0), 0u);
  meadow_string_free(text);

  ReportHandle bad;
  ASSERT_EQ(meadow_cmd_check("zmod:4", nullptr, &bad.ptr), MEADOW_DOMAIN_FAILURE);
  EXPECT_STREQ(meadow_report_get(bad.ptr, "witness"), "2");

  meadow_report* none = nullptr;
  EXPECT_EQ(meadow_cmd_count("zmod:", nullptr, &none), MEADOW_USAGE_ERROR);
  EXPECT_EQ(none, nullptr);

  ReportHandle cls;
  ASSERT_EQ(meadow_cmd_classify("12", &cls.ptr), MEADOW_OK);
  EXPECT_STREQ(meadow_report_get(cls.ptr, "count"), "2");

  ReportHandle iso;
  ASSERT_EQ(meadow_cmd_isomorphic("gf:2^2", "prod:(zmod:2,zmod:2)", nullptr, &iso.ptr), MEADOW_OK);
  EXPECT_STREQ(meadow_report_get(iso.ptr, "isomorphic"), "no");

  ReportHandle inv;
  ASSERT_EQ(meadow_cmd_invtable("gf:5^1", nullptr, &inv.ptr), MEADOW_OK);
  EXPECT_STREQ(meadow_report_get(inv.ptr, "invertible_count"), "4");
}

TEST(CApiTest, Version) { EXPECT_STREQ(meadow_version(), "1.0.0"); }

}  // namespace
