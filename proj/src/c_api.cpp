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

#include "meadow/meadow_c.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>

#include "meadow/commands.hpp"
#include "meadow/descriptor.hpp"
#include "meadow/meadow.hpp"
#include "meadow/ring_spec.hpp"
#include "meadow/structure.hpp"

struct meadow_ring {
  explicit meadow_ring(meadow::FiniteCommRing r) : ring(std::move(r)) {}

  const meadow::MeadowResult& meadow() const {
    std::call_once(once, [this] { result.emplace(meadow::to_meadow(ring)); });
    return *result;
  }

  meadow::FiniteCommRing ring;
  mutable std::once_flag once;
  mutable std::optional<meadow::MeadowResult> result;
};

struct meadow_report {
  meadow::Report report;
};

namespace {

thread_local std::string last_error;

meadow_status fail(meadow_status status, const std::string& what) {
  last_error = what;
  return status;
}

meadow::BuildLimits limits_of(const meadow_options* options) {
  meadow::BuildLimits limits;
  if (options) {
    limits.structured = options->max_structured_order;
    limits.table = options->max_table_order;
  }
  return limits;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, mapping library exceptions onto status codes.
template <class Fn>
meadow_status guarded(Fn fn) {
  try {
    return fn();
  } catch (const meadow::RingSpecError& e) {
    return fail(MEADOW_DOMAIN_FAILURE, e.what());
  } catch (const meadow::NotAMeadowError& e) {
    return fail(MEADOW_DOMAIN_FAILURE, e.what());
  } catch (const meadow::InternalError& e) {
    return fail(MEADOW_INTERNAL_ERROR, std::string("internal error: ") + e.what());
  } catch (const meadow::Error& e) {
    return fail(MEADOW_USAGE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MEADOW_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(MEADOW_INTERNAL_ERROR, e.what());
  }
}

template <class Fn>
meadow_status run_command(meadow_report** out, Fn fn) {
  if (!out) return fail(MEADOW_USAGE_ERROR, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    auto* handle = new meadow_report{fn()};
    *out = handle;
    return static_cast<meadow_status>(handle->report.status);
  });
}

meadow_status check_element(const meadow_ring* ring, uint32_t x) {
  if (x >= ring->ring.order()) {
    return fail(MEADOW_USAGE_ERROR, "element " + std::to_string(x) +
                                        " outside carrier of order " +
                                        std::to_string(ring->ring.order()));
  }
  return MEADOW_OK;
}

}  // namespace

extern "C" {

const char* meadow_version(void) { return "1.0.0"; }

const char* meadow_last_error(void) { return last_error.c_str(); }

void meadow_options_init(meadow_options* options) {
  if (!options) return;
  options->max_structured_order = meadow::kStructuredOrderBound;
  options->max_table_order = meadow::kTableOrderBound;
}

void meadow_string_free(char* s) { std::free(s); }

meadow_status meadow_ring_create(const char* descriptor, const meadow_options* options,
                                 meadow_ring** out) {
  if (!descriptor || !out) return fail(MEADOW_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto ring = meadow::build_ring(meadow::parse_descriptor(descriptor), limits_of(options));
    *out = new meadow_ring(std::move(ring));
    return MEADOW_OK;
  });
}

meadow_status meadow_ring_from_spec(const char* spec_text, const meadow_options* options,
                                    meadow_ring** out) {
  if (!spec_text || !out) return fail(MEADOW_USAGE_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto ring = meadow::load_ring(meadow::parse_ring_spec(spec_text),
                                  limits_of(options).table);
    *out = new meadow_ring(std::move(ring));
    return MEADOW_OK;
  });
}

void meadow_ring_free(meadow_ring* ring) { delete ring; }

uint32_t meadow_ring_order(const meadow_ring* ring) { return ring ? ring->ring.order() : 0; }
uint32_t meadow_ring_zero(const meadow_ring* ring) { return ring ? ring->ring.zero().index : 0; }
uint32_t meadow_ring_one(const meadow_ring* ring) { return ring ? ring->ring.one().index : 0; }

meadow_status meadow_ring_add(const meadow_ring* ring, uint32_t a, uint32_t b, uint32_t* out) {
  if (!ring || !out) return fail(MEADOW_USAGE_ERROR, "null argument");
  if (auto s = check_element(ring, a); s != MEADOW_OK) return s;
  if (auto s = check_element(ring, b); s != MEADOW_OK) return s;
  *out = ring->ring.add(meadow::Element{a}, meadow::Element{b}).index;
  return MEADOW_OK;
}

meadow_status meadow_ring_mul(const meadow_ring* ring, uint32_t a, uint32_t b, uint32_t* out) {
  if (!ring || !out) return fail(MEADOW_USAGE_ERROR, "null argument");
  if (auto s = check_element(ring, a); s != MEADOW_OK) return s;
  if (auto s = check_element(ring, b); s != MEADOW_OK) return s;
  *out = ring->ring.mul(meadow::Element{a}, meadow::Element{b}).index;
  return MEADOW_OK;
}

meadow_status meadow_ring_neg(const meadow_ring* ring, uint32_t a, uint32_t* out) {
  if (!ring || !out) return fail(MEADOW_USAGE_ERROR, "null argument");
  if (auto s = check_element(ring, a); s != MEADOW_OK) return s;
  *out = ring->ring.neg(meadow::Element{a}).index;
  return MEADOW_OK;
}

meadow_status meadow_ring_inverse(const meadow_ring* ring, uint32_t x, uint32_t* out,
                                  int* exists) {
  if (!ring || !out || !exists) return fail(MEADOW_USAGE_ERROR, "null argument");
  if (auto s = check_element(ring, x); s != MEADOW_OK) return s;
  return guarded([&] {
    std::optional<meadow::Element> y = meadow::generalized_inverse(ring->ring, meadow::Element{x});
    *exists = y.has_value() ? 1 : 0;
    *out = y ? y->index : 0;
    return MEADOW_OK;
  });
}

meadow_status meadow_ring_is_meadow(const meadow_ring* ring, int* is_meadow, uint32_t* witness) {
  if (!ring || !is_meadow) return fail(MEADOW_USAGE_ERROR, "null argument");
  return guarded([&] {
    const auto& result = ring->meadow();
    const auto* bad = std::get_if<meadow::NotAMeadow>(&result);
    *is_meadow = bad ? 0 : 1;
    if (bad && witness) *witness = bad->witness.index;
    return MEADOW_OK;
  });
}

meadow_status meadow_ring_signature(const meadow_ring* ring, uint32_t* primes,
                                    uint32_t* exponents, size_t capacity, size_t* count) {
  if (!ring || !count) return fail(MEADOW_USAGE_ERROR, "null argument");
  if (capacity > 0 && (!primes || !exponents)) {
    return fail(MEADOW_USAGE_ERROR, "null output arrays");
  }
  return guarded([&] {
    const auto& result = ring->meadow();
    if (const auto* bad = std::get_if<meadow::NotAMeadow>(&result)) {
      return fail(MEADOW_DOMAIN_FAILURE, "not a meadow: " + std::to_string(bad->witness.index) +
                                             " has no generalized inverse");
    }
    const meadow::Signature sig = meadow::signature(std::get<meadow::Meadow>(result));
    *count = sig.size();
    for (size_t i = 0; i < sig.size() && i < capacity; ++i) {
      primes[i] = sig.fields()[i].p;
      exponents[i] = sig.fields()[i].k;
    }
    return MEADOW_OK;
  });
}

meadow_status meadow_ring_dump_spec(const meadow_ring* ring, char** out_text) {
  if (!ring || !out_text) return fail(MEADOW_USAGE_ERROR, "null argument");
  return guarded([&] {
    *out_text = copy_string(meadow::format_ring_spec(meadow::dump_ring(ring->ring)));
    return *out_text ? MEADOW_OK : fail(MEADOW_INTERNAL_ERROR, "out of memory");
  });
}

meadow_status meadow_cmd_check(const char* descriptor, const meadow_options* options,
                               meadow_report** out) {
  if (!descriptor) return fail(MEADOW_USAGE_ERROR, "null descriptor");
  return run_command(out, [&] { return meadow::cmd_check(descriptor, limits_of(options)); });
}

meadow_status meadow_cmd_invtable(const char* descriptor, const meadow_options* options,
                                  meadow_report** out) {
  if (!descriptor) return fail(MEADOW_USAGE_ERROR, "null descriptor");
  return run_command(out, [&] { return meadow::cmd_invtable(descriptor, limits_of(options)); });
}

meadow_status meadow_cmd_decompose(const char* descriptor, const meadow_options* options,
                                   meadow_report** out) {
  if (!descriptor) return fail(MEADOW_USAGE_ERROR, "null descriptor");
  return run_command(out, [&] { return meadow::cmd_decompose(descriptor, limits_of(options)); });
}

meadow_status meadow_cmd_count(const char* descriptor, const meadow_options* options,
                               meadow_report** out) {
  if (!descriptor) return fail(MEADOW_USAGE_ERROR, "null descriptor");
  return run_command(out, [&] { return meadow::cmd_count(descriptor, limits_of(options)); });
}

meadow_status meadow_cmd_classify(const char* order, meadow_report** out) {
  if (!order) return fail(MEADOW_USAGE_ERROR, "null order");
  return run_command(out, [&] { return meadow::cmd_classify(order); });
}

meadow_status meadow_cmd_isomorphic(const char* left, const char* right,
                                    const meadow_options* options, meadow_report** out) {
  if (!left || !right) return fail(MEADOW_USAGE_ERROR, "null descriptor");
  return run_command(out, [&] {
    return meadow::cmd_isomorphic(left, right, limits_of(options));
  });
}

meadow_status meadow_report_status(const meadow_report* report) {
  return report ? static_cast<meadow_status>(report->report.status) : MEADOW_USAGE_ERROR;
}

const char* meadow_report_get(const meadow_report* report, const char* key) {
  if (!report || !key) return nullptr;
  const std::string* value = report->report.get(key);
  return value ? value->c_str() : nullptr;
}

meadow_status meadow_report_render(const meadow_report* report, meadow_format format,
                                   char** out_text) {
  if (!report || !out_text) return fail(MEADOW_USAGE_ERROR, "null argument");
  return guarded([&] {
    const auto f = format == MEADOW_FORMAT_MACHINE ? meadow::Format::kMachine
                                                   : meadow::Format::kHuman;
    *out_text = copy_string(meadow::render(report->report, f));
    return *out_text ? MEADOW_OK : fail(MEADOW_INTERNAL_ERROR, "out of memory");
  });
}

void meadow_report_free(meadow_report* report) { delete report; }

}  // extern "C"
