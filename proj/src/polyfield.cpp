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

#include "meadow/polyfield.hpp"

#include <algorithm>
#include <sstream>

#include "meadow/errors.hpp"

namespace meadow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Polynomial::Polynomial(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw ArgumentError("coefficient modulus " + std::to_string(p) +
                        " is not prime");
  }
}

Polynomial::Polynomial(std::uint32_t p, std::vector<std::uint64_t> coeffs)
    : Polynomial(p) {
  coeffs_.reserve(coeffs.size());
  for (std::uint64_t c : coeffs) coeffs_.push_back(static_cast<std::uint32_t>(c % p));
  normalize();
}

Polynomial Polynomial::monomial(std::uint32_t p, std::size_t degree,
                                std::uint32_t c) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(p, std::move(coeffs));
}

Polynomial Polynomial::from_rank(std::uint32_t p, std::uint64_t rank) {
  Polynomial out(p);
  while (rank != 0) {
    out.coeffs_.push_back(static_cast<std::uint32_t>(rank % p));
    rank /= p;
  }
  out.normalize();
  return out;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t Polynomial::rank() const {
  std::uint64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * p_ + *it;
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (c != 1 || i == 0) out << c;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.prime() != b.prime()) {
    throw ArgumentError("polynomials over different prime fields (p = " +
                        std::to_string(a.prime()) + " and p = " +
                        std::to_string(b.prime()) + ")");
  }
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<std::uint64_t> sum(len);
  for (std::size_t i = 0; i < len; ++i) sum[i] = std::uint64_t{a.coeff(i)} + b.coeff(i);
  return Polynomial(a.prime(), std::move(sum));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const std::uint64_t p = a.prime();
  std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<std::uint64_t> diff(len);
  for (std::size_t i = 0; i < len; ++i) diff[i] = a.coeff(i) + p - b.coeff(i);
  return Polynomial(a.prime(), std::move(diff));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.prime());
  const std::uint64_t p = a.prime();
  std::vector<std::uint64_t> prod(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs()[i]} * b.coeffs()[j]) % p;
    }
  }
  return Polynomial(a.prime(), std::move(prod));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& m) {
  require_same_field(a, m);
  if (m.is_zero()) throw ArgumentError("polynomial division by zero");
  const std::uint64_t p = a.prime();
  const std::uint64_t lead_inv = inverse_mod_prime(m.leading(), p);
  const std::size_t dm = static_cast<std::size_t>(m.degree());

  std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
  if (rem.size() <= dm) return {Polynomial(a.prime()), a};
  std::vector<std::uint64_t> quot(rem.size() - dm, 0);
  for (std::size_t i = rem.size(); i-- > dm;) {
    std::uint64_t c = rem[i] * lead_inv % p;
    quot[i - dm] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      rem[i - dm + j] = (rem[i - dm + j] + (p - c) * m.coeffs()[j]) % p;
    }
  }
  rem.resize(dm);
  return {Polynomial(a.prime(), std::move(quot)),
          Polynomial(a.prime(), std::move(rem))};
}

Polynomial poly_mulmod(const Polynomial& a, const Polynomial& b,
                       const Polynomial& m) {
  require_same_field(a, m);
  require_same_field(b, m);
  if (m.degree() < 1 || !m.is_monic()) {
    throw ArgumentError("modulus " + m.to_string() +
                        " must be monic of degree >= 1");
  }
  return poly_divmod(poly_mul(a, b), m).second;
}

bool is_irreducible(const Polynomial& m) {
  if (m.degree() < 1) {
    throw ArgumentError("irreducibility is only defined for degree >= 1");
  }
  const std::uint32_t p = m.prime();
  const int half = m.degree() / 2;
  for (int d = 1; d <= half; ++d) {
    // Monic divisors of degree d have ranks p^d .. 2*p^d - 1.
    std::uint64_t base = 1;
    for (int i = 0; i < d; ++i) base *= p;
    for (std::uint64_t r = base; r < 2 * base; ++r) {
      if (poly_divmod(m, Polynomial::from_rank(p, r)).second.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t n, Polynomial modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < n; ++i) q_ *= p;

  // Primitive element: smallest index whose powers run through all q-1
  // nonzero elements.
  const std::uint32_t group = q_ - 1;
  std::vector<std::uint32_t> powers;
  powers.reserve(group);
  for (std::uint32_t g = 1; g < q_; ++g) {
    const Polynomial gp = to_polynomial(g);
    powers.assign(1, 1);
    Polynomial cur = Polynomial::from_rank(p_, 1);
    while (true) {
      cur = poly_mulmod(cur, gp, modulus_);
      auto idx = static_cast<std::uint32_t>(cur.rank());
      if (idx == 1) break;
      powers.push_back(idx);
    }
    if (powers.size() == group) break;
  }
  if (powers.size() != group) {
    throw InternalError("no primitive element found in GF(" +
                        std::to_string(q_) + ")");
  }
  exp_ = std::move(powers);
  log_.assign(q_, 0);
  for (std::uint32_t i = 0; i < group; ++i) log_[exp_[i]] = i;
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return (a + b) % p_;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (n_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t group = q_ - 1;
  return exp_[(log_[a] + log_[b]) % group];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = q_ - 1;
  return exp_[static_cast<std::size_t>((log_[a] * (e % group)) % group)];
}

Polynomial GaloisField::to_polynomial(std::uint32_t x) const {
  return Polynomial::from_rank(p_, x);
}

std::uint32_t GaloisField::from_polynomial(const Polynomial& f) const {
  return static_cast<std::uint32_t>(poly_divmod(f, modulus_).second.rank());
}

GaloisField make_galois_field(std::uint32_t p, std::uint32_t n,
                              std::uint64_t max_order) {
  if (!is_prime(p)) {
    throw ArgumentError("GF(p^n) requires a prime p, got " + std::to_string(p));
  }
  if (n < 1) throw ArgumentError("GF(p^n) requires n >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > max_order) {
      throw BoundError("GF(" + std::to_string(p) + "^" + std::to_string(n) +
                       ") exceeds the carrier bound " +
                       std::to_string(max_order));
    }
  }
  if (n == 1) return GaloisField(p, 1, Polynomial::monomial(p, 1));

  // Monic polynomials of degree n have ranks q .. 2q-1, scanned upward.
  for (std::uint64_t r = q; r < 2 * q; ++r) {
    Polynomial candidate = Polynomial::from_rank(p, r);
    if (is_irreducible(candidate)) return GaloisField(p, n, std::move(candidate));
  }
  throw InternalError("no irreducible polynomial of degree " +
                      std::to_string(n) + " over GF(" + std::to_string(p) + ")");
}

std::uint32_t field_inverse(const GaloisField& field, std::uint32_t x) {
  if (x == 0) return 0;
  if (field.order() == 2) return x;
  return field.pow(x, field.order() - 2);
}

}  // namespace meadow
