/* Copyright 2026 The qfe Authors.

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

#ifndef QFE_RING_HPP_
#define QFE_RING_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qfe {

enum class RingKind { kRational, kPrimeField, kCyclotomic };

// Names one of the three exact coefficient fields: Q, GF(p), Q(zeta_d).
// A descriptor is a plain value; make_ring() validates it.
class RingDescriptor {
 public:
  static RingDescriptor rational() { return {RingKind::kRational, 0}; }
  static RingDescriptor prime_field(std::uint64_t p) {
    return {RingKind::kPrimeField, p};
  }
  static RingDescriptor cyclotomic(std::uint64_t d) {
    return {RingKind::kCyclotomic, d};
  }

  // Accepts "rational", "gfp:<p>" and "cyclotomic:<d>".
  static RingDescriptor parse(std::string_view text);

  RingKind kind() const { return kind_; }
  // p for kPrimeField, d for kCyclotomic, 0 for kRational.
  std::uint64_t parameter() const { return parameter_; }

  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  RingDescriptor(RingKind kind, std::uint64_t parameter)
      : kind_(kind), parameter_(parameter) {}

  RingKind kind_;
  std::uint64_t parameter_;
};

class Scalar;

// Validated ring handle. Copies are cheap; the cyclotomic modulus is shared.
class Ring {
 public:
  // Throws std::invalid_argument for a composite p or d < 1. Cyclotomic(1)
  // is canonicalized to Rational.
  explicit Ring(RingDescriptor descriptor);

  const RingDescriptor& descriptor() const { return descriptor_; }
  RingKind kind() const { return descriptor_.kind(); }

  // Dimension over the prime field: phi(d) for Q(zeta_d), 1 otherwise.
  std::size_t extension_degree() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long value) const;
  Scalar from_rational(const mpq_class& value) const;

  // The distinguished root of unity of Q(zeta_d); 1 for Rational.
  // Throws std::logic_error for a prime field.
  Scalar zeta() const;

  // Ascending integer coefficients of Phi_d. Empty for non-cyclotomic rings.
  std::span<const mpz_class> cyclotomic_modulus() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar negate(const Scalar& a) const;
  Scalar multiply(const Scalar& a, const Scalar& b) const;
  Scalar inverse(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.descriptor_ == b.descriptor_;
  }

 private:
  RingDescriptor descriptor_;
  std::shared_ptr<const std::vector<mpz_class>> modulus_;
};

inline Ring make_ring(RingDescriptor descriptor) { return Ring(descriptor); }

// Exact element of a Ring. Rationals are kept canonical, residues lie in
// [0, p), cyclotomic coordinates are reduced modulo Phi_d.
class Scalar {
 public:
  using Value = std::variant<mpq_class, std::uint64_t, std::vector<mpq_class>>;

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  // Rational value if the element lies in the prime subfield of Q(zeta_d)
  // or in Q; nullopt for prime fields and genuinely irrational elements.
  std::optional<mpq_class> as_rational() const;

  // Representation access. Each throws std::logic_error on the wrong kind.
  const mpq_class& rational() const;
  std::uint64_t residue() const;
  std::span<const mpq_class> coordinates() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  // *this += a * b without an intermediate Scalar.
  void add_product(const Scalar& a, const Scalar& b);

  // Throws std::domain_error for zero.
  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  std::string to_string() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  // Elements of different rings compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class Ring;
  Scalar(Ring ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {}

  void check_same_ring(const Scalar& other) const;

  Ring ring_;
  Value value_;
};

// Rational "a/b" or "a"; a decimal residue for GF(p) (reduced mod p); for
// Q(zeta_d) a single rational embedded as a constant.
Scalar parse_scalar(const Ring& ring, std::string_view text);

// Q(zeta_d) element from phi(d) rational strings in ascending powers of zeta.
Scalar parse_cyclotomic(const Ring& ring, std::span<const std::string> coords);

// Least l >= 1 with z^l = 1, searching l <= 4d for Q(zeta_d) (Q counts as
// d = 1) and l <= p - 1 for GF(p). Throws std::domain_error for z = 0.
std::optional<std::uint64_t> root_of_unity_order(const Scalar& z);

// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

// Ascending integer coefficients of the d-th cyclotomic polynomial, computed
// by exact division of x^d - 1 by Phi_e for the proper divisors e of d.
std::vector<mpz_class> cyclotomic_coefficients(std::uint64_t d);

}  // namespace qfe

#endif  // QFE_RING_HPP_
