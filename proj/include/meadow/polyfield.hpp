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

#ifndef MEADOW_POLYFIELD_HPP_
#define MEADOW_POLYFIELD_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace meadow {

// Carrier bounds. Structured constructors (Z/nZ, Galois fields, products)
// are capped at kStructuredOrderBound elements, table-backed rings at
// kTableOrderBound.
inline constexpr std::uint64_t kStructuredOrderBound = 4096;
inline constexpr std::uint64_t kTableOrderBound = 512;

bool is_prime(std::uint64_t n);

// Polynomial over the prime field Z/pZ, lowest degree first. The zero
// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class Polynomial {
 public:
  // The zero polynomial over Z/pZ. Throws ArgumentError unless p is prime.
  explicit Polynomial(std::uint32_t p);
  // Coefficients are reduced mod p and trailing zeros dropped.
  Polynomial(std::uint32_t p, std::vector<std::uint64_t> coeffs);

  // c * x^degree.
  static Polynomial monomial(std::uint32_t p, std::size_t degree,
                             std::uint32_t c = 1);
  // Inverse of rank(): base-p digits of `rank`, least significant digit is
  // the constant term.
  static Polynomial from_rank(std::uint32_t p, std::uint64_t rank);

  std::uint32_t prime() const noexcept { return p_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint32_t leading() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.back();
  }
  bool is_monic() const noexcept { return leading() == 1; }
  // Coefficient of x^i, zero past the degree.
  std::uint32_t coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  std::uint64_t rank() const;

  // e.g. "x^3 + x + 1", "2x^2 + 1", "0".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
// Quotient and remainder; the divisor must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& m);
// (a * b) mod m for monic m of degree >= 1.
Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b,
                       const Polynomial& m);

// Exhaustive trial division by every monic polynomial of degree
// 1..deg(m)/2. Requires deg(m) >= 1.
bool is_irreducible(const Polynomial& m);

// GF(p^n) in the polynomial basis Z/pZ[x]/(modulus). Elements are the
// integers 0..q-1; element k is the polynomial whose base-p digits are the
// digits of k (constant term least significant), so 0 is zero and 1 is one.
// Multiplication runs through discrete log tables built at construction.
class GaloisField {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }
  const Polynomial& modulus() const noexcept { return modulus_; }
  // Smallest-index generator of the multiplicative group.
  std::uint32_t primitive_element() const noexcept { return exp_[1 % exp_.size()]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  Polynomial to_polynomial(std::uint32_t x) const;
  // Reduces modulo the field modulus first.
  std::uint32_t from_polynomial(const Polynomial& f) const;

 private:
  friend GaloisField make_galois_field(std::uint32_t, std::uint32_t,
                                       std::uint64_t);
  GaloisField(std::uint32_t p, std::uint32_t n, Polynomial modulus);

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  Polynomial modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[g^i] = i; log_[0] unused
};

// GF(p^n) with the monic irreducible modulus of degree n that has the
// smallest rank. For n == 1 the modulus is x and arithmetic is plain mod p.
GaloisField make_galois_field(std::uint32_t p, std::uint32_t n,
                              std::uint64_t max_order = kStructuredOrderBound);

// Zero-totalized inverse: x^(q-2), and 0 for x == 0.
std::uint32_t field_inverse(const GaloisField& field, std::uint32_t x);

}  // namespace meadow

#endif  // MEADOW_POLYFIELD_HPP_
