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

#ifndef QFE_POLY_HPP_
#define QFE_POLY_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfe/ring.hpp"

namespace qfe {

// Dense univariate polynomial in q over a Ring. coefficients()[i] is the
// coefficient of q^i and the last stored coefficient is never zero, so the
// zero polynomial has no coefficients at all.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  // Throws RingMismatch if a coefficient belongs to another ring.
  Polynomial(Ring ring, std::vector<Scalar> coeffs);

  static Polynomial from_integers(const Ring& ring, std::initializer_list<long> coeffs);
  static Polynomial constant(const Scalar& c);
  // c * q^k
  static Polynomial monomial(const Scalar& c, std::size_t k);

  const Ring& ring() const { return ring_; }
  std::span<const Scalar> coefficients() const { return coeffs_; }
  // Zero past the degree.
  Scalar coefficient(std::size_t i) const;

  // nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  // Both throw std::domain_error on the zero polynomial.
  const Scalar& leading_coefficient() const;
  const Scalar& lowest_coefficient() const;

  Scalar constant_term() const { return coefficient(0); }
  Scalar evaluate(const Scalar& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& b) { return a *= b; }
  friend Polynomial operator*(const Scalar& a, Polynomial b) { return b *= a; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  void check_same_ring(const Polynomial& other) const;

  Ring ring_;
  std::vector<Scalar> coeffs_;
};

// f(q^m). Throws std::invalid_argument for m < 1.
Polynomial dilate(const Polynomial& f, std::uint64_t m);

// f(psi(q)) by Horner's rule.
Polynomial compose(const Polynomial& f, const Polynomial& psi);

// q^deg(f) f(1/q), the coefficient reversal. Throws std::domain_error for 0.
Polynomial reciprocal(const Polynomial& f);

// Index of the lowest nonzero coefficient. Throws std::domain_error for 0.
std::size_t valuation(const Polynomial& f);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division over the coefficient field. Throws std::domain_error
// when g is zero.
DivisionResult divide(const Polynomial& f, const Polynomial& g);

// h with g * h = f. Throws NotDivisible when the remainder is nonzero.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);

Polynomial pow(const Polynomial& f, std::uint64_t exponent);

// [n]_q = 1 + q + ... + q^(n-1).
Polynomial quantum_integer(std::uint64_t n, const Ring& ring);

// [n]_{zeta q} = sum_{i<n} zeta^i q^i. Throws for zeta = 0.
Polynomial scaled_quantum_integer(std::uint64_t n, const Scalar& zeta);

// Phi_d as a polynomial over Q.
Polynomial cyclotomic_polynomial(std::uint64_t d);

// Ascending terms, e.g. "1 - q + q^3". Unit coefficients are suppressed on
// nonconstant terms; the zero polynomial prints as "0".
std::string to_string(const Polynomial& f, std::string_view variable = "q");

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace qfe

#endif  // QFE_POLY_HPP_
