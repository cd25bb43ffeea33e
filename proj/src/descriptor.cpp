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

#include "meadow/descriptor.hpp"

#include <charconv>

#include "meadow/ring_spec.hpp"

namespace meadow {

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  Descriptor parse() {
    Descriptor d = descriptor(/*nested=*/false);
    if (pos_ != text_.size()) error("unexpected trailing text");
    return d;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("descriptor '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!consume(token)) error("expected '" + std::string(token) + "'");
  }

  std::uint64_t integer() {
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) error("integer out of range");
    if (ec != std::errc{} || ptr == begin) error("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  Descriptor descriptor(bool nested) {
    Descriptor d;
    if (consume("zmod:")) {
      d.kind = Descriptor::Kind::kZmod;
      d.n = integer();
      if (d.n < 1) error("zmod:n requires n >= 1");
    } else if (consume("gf:")) {
      d.kind = Descriptor::Kind::kGalois;
      const std::uint64_t p = integer();
      expect("^");
      const std::uint64_t k = integer();
      if (p > UINT32_MAX || !is_prime(p)) {
        error("gf:p^k requires a prime p, and " + std::to_string(p) + " is not prime");
      }
      if (k < 1) error("gf:p^k requires k >= 1");
      if (k > 64) error("gf:p^k exponent " + std::to_string(k) + " is too large");
      d.p = static_cast<std::uint32_t>(p);
      d.k = static_cast<std::uint32_t>(k);
    } else if (consume("prod:(")) {
      d.kind = Descriptor::Kind::kProduct;
      d.factors.push_back(descriptor(true));
      while (consume(",")) d.factors.push_back(descriptor(true));
      expect(")");
      if (d.factors.size() < 2) error("prod:( ... ) needs at least two factors");
    } else if (consume("file:")) {
      d.kind = Descriptor::Kind::kFile;
      std::size_t end = nested ? text_.find_first_of(",)", pos_) : text_.size();
      if (end == std::string_view::npos) end = text_.size();
      d.path = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (d.path.empty()) error("file: needs a path");
    } else {
      error("expected zmod:, gf:, prod:( or file:");
    }
    return d;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Descriptor::to_string() const {
  switch (kind) {
    case Kind::kZmod:
      return "zmod:" + std::to_string(n);
    case Kind::kGalois:
      return "gf:" + std::to_string(p) + "^" + std::to_string(k);
    case Kind::kProduct: {
      std::string out = "prod:(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ",";
        out += factors[i].to_string();
      }
      return out + ")";
    }
    case Kind::kFile:
      return "file:" + path;
  }
  return {};
}

Descriptor parse_descriptor(std::string_view text) {
  return DescriptorParser(text).parse();
}

FiniteCommRing build_ring(const Descriptor& desc, const BuildLimits& limits) {
  switch (desc.kind) {
    case Descriptor::Kind::kZmod:
      return make_zmod(desc.n, limits.structured);
    case Descriptor::Kind::kGalois:
      return make_galois(desc.p, desc.k, limits.structured);
    case Descriptor::Kind::kProduct: {
      std::vector<FiniteCommRing> factors;
      for (const Descriptor& f : desc.factors) factors.push_back(build_ring(f, limits));
      return make_product(std::move(factors), limits.structured);
    }
    case Descriptor::Kind::kFile:
      return load_ring(read_ring_spec_file(desc.path), limits.table);
  }
  throw ParseError("unknown descriptor kind");
}

}  // namespace meadow
