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

#include "qfe/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "qfe/error.hpp"

namespace qfe {

Polynomial::Polynomial(Ring ring, std::vector<Scalar> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.ring() == ring_)) {
      throw RingMismatch("coefficient over " + c.ring().descriptor().to_string() +
                         " in a polynomial over " + ring_.descriptor().to_string());
    }
  }
  normalize();
}

Polynomial Polynomial::from_integers(const Ring& ring, std::initializer_list<long> coeffs) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (long c : coeffs) cs.push_back(ring.from_integer(c));
  return Polynomial(ring, std::move(cs));
}

Polynomial Polynomial::constant(const Scalar& c) { return monomial(c, 0); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t k) {
  std::vector<Scalar> cs(k + 1, c.ring().zero());
  cs[k] = c;
  return Polynomial(c.ring(), std::move(cs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch("polynomial ring mismatch: " + ring_.descriptor().to_string() +
                       " vs " + other.ring_.descriptor().to_string());
  }
}

Scalar Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ring_.zero();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

const Scalar& Polynomial::lowest_coefficient() const {
  return coeffs_[valuation(*this)];
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = ring_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_ring(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ring_.zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  // Dilated operands are mostly zeros; only walk the nonzero entries.
  std::vector<std::size_t> support_b;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (!b.coeffs_[j].is_zero()) support_b.push_back(j);
  }
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const Scalar& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (std::size_t j : support_b) out.coeffs_[i + j].add_product(ai, b.coeffs_[j]);
  }
  out.normalize();
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Scalar& rhs) {
  if (!(rhs.ring() == ring_)) {
    throw RingMismatch("scalar ring mismatch in polynomial scaling");
  }
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

Polynomial dilate(const Polynomial& f, std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  if (f.is_zero() || m == 1) return f;
  const auto coeffs = f.coefficients();
  std::vector<Scalar> out((coeffs.size() - 1) * m + 1, f.ring().zero());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i * m] = coeffs[i];
  return Polynomial(f.ring(), std::move(out));
}

Polynomial compose(const Polynomial& f, const Polynomial& psi) {
  if (!(f.ring() == psi.ring())) throw RingMismatch("compose: ring mismatch");
  Polynomial acc(f.ring());
  const auto coeffs = f.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * psi + Polynomial::constant(coeffs[i]);
  }
  return acc;
}

Polynomial reciprocal(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
  std::vector<Scalar> reversed(f.coefficients().rbegin(), f.coefficients().rend());
  return Polynomial(f.ring(), std::move(reversed));
}

std::size_t valuation(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  const auto coeffs = f.coefficients();
  std::size_t i = 0;
  while (coeffs[i].is_zero()) ++i;
  return i;
}

DivisionResult divide(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch("divide: ring mismatch");
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Ring& ring = f.ring();
  std::vector<Scalar> rem(f.coefficients().begin(), f.coefficients().end());
  const auto divisor = g.coefficients();
  const std::size_t gd = divisor.size() - 1;
  if (rem.size() <= gd) return {Polynomial(ring), f};
  std::vector<Scalar> quotient(rem.size() - gd, ring.zero());
  const Scalar lead_inv = g.leading_coefficient().inverse();
  for (std::size_t top = rem.size(); top-- > gd;) {
    if (rem[top].is_zero()) continue;
    const Scalar c = rem[top] * lead_inv;
    const Scalar neg_c = -c;
    const std::size_t shift = top - gd;
    for (std::size_t j = 0; j <= gd; ++j) {
      if (!divisor[j].is_zero()) rem[shift + j].add_product(neg_c, divisor[j]);
    }
    quotient[shift] = c;
  }
  rem.resize(gd, ring.zero());
  return {Polynomial(ring, std::move(quotient)), Polynomial(ring, std::move(rem))};
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto [quotient, remainder] = divide(f, g);
  if (!remainder.is_zero()) {
    throw NotDivisible("(" + to_string(g) + ") does not divide (" + to_string(f) +
                       "); remainder " + to_string(remainder));
  }
  return quotient;
}

Polynomial pow(const Polynomial& f, std::uint64_t exponent) {
  Polynomial result = Polynomial::constant(f.ring().one());
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial quantum_integer(std::uint64_t n, const Ring& ring) {
  if (n < 1) throw std::invalid_argument("quantum integer needs n >= 1");
  return Polynomial(ring, std::vector<Scalar>(n, ring.one()));
}

Polynomial scaled_quantum_integer(std::uint64_t n, const Scalar& zeta) {
  if (n < 1) throw std::invalid_argument("quantum integer needs n >= 1");
  if (zeta.is_zero()) throw std::invalid_argument("scaled quantum integer needs zeta != 0");
  std::vector<Scalar> coeffs;
  coeffs.reserve(n);
  Scalar power = zeta.ring().one();
  for (std::uint64_t i = 0; i < n; ++i) {
    coeffs.push_back(power);
    power *= zeta;
  }
  return Polynomial(zeta.ring(), std::move(coeffs));
}

Polynomial cyclotomic_polynomial(std::uint64_t d) {
  const Ring q(RingDescriptor::rational());
  std::vector<Scalar> coeffs;
  for (const auto& c : cyclotomic_coefficients(d)) coeffs.push_back(q.from_rational(mpq_class(c)));
  return Polynomial(q, std::move(coeffs));
}

namespace {

std::string power_of(std::string_view variable, std::size_t k) {
  std::string out(variable);
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

}  // namespace

std::string to_string(const Polynomial& f, std::string_view variable) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto coeffs = f.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Scalar& c = coeffs[k];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (auto q = c.as_rational()) {
      const bool negative = sgn(*q) < 0;
      const mpq_class magnitude = abs(*q);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (k == 0) {
        out += magnitude.get_str();
      } else {
        if (magnitude != 1) {
          out += magnitude.get_den() == 1 ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
        }
        out += power_of(variable, k);
      }
      continue;
    }
    if (!first) out += " + ";
    std::string text = c.to_string();
    const bool compound = text.find(' ') != std::string::npos;
    if (k == 0) {
      out += compound ? "(" + text + ")" : text;
    } else if (c.ring().kind() == RingKind::kPrimeField) {
      if (!c.is_one()) out += text;
      out += power_of(variable, k);
    } else {
      out += "(" + text + ")" + power_of(variable, k);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace qfe
