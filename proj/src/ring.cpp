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

#include "qfe/ring.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qfe/error.hpp"

namespace qfe {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_of(" \t\n") != std::string::npos) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  mpq_class value;
  if (value.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  value.canonicalize();
  return value;
}

// --- dense Q[x] helpers for the cyclotomic field -------------------------

using QPoly = std::vector<mpq_class>;

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Returns (quotient, remainder); g must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly f, const QPoly& g) {
  trim(f);
  if (f.size() < g.size()) return {QPoly{}, f};
  QPoly quotient(f.size() - g.size() + 1);
  const mpq_class lead_inv = 1 / g.back();
  const std::size_t gd = g.size() - 1;
  for (std::size_t top = f.size(); top-- > gd;) {
    const mpq_class c = f[top] * lead_inv;
    const std::size_t shift = top - gd;
    quotient[shift] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < g.size(); ++j) f[shift + j] -= c * g[j];
    }
  }
  trim(f);
  trim(quotient);
  return {quotient, f};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Reduces a coordinate vector modulo the monic integer polynomial `modulus`
// and pads it to exactly deg(modulus) entries.
void reduce(QPoly& coords, std::span<const mpz_class> modulus) {
  const std::size_t n = modulus.size() - 1;
  for (std::size_t i = coords.size(); i-- > n;) {
    if (coords[i] == 0) continue;
    const mpq_class c = coords[i];
    for (std::size_t j = 0; j <= n; ++j) coords[i - n + j] -= c * modulus[j];
  }
  coords.resize(n);
}

std::shared_ptr<const std::vector<mpz_class>> cached_cyclotomic(std::uint64_t d) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const std::vector<mpz_class>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  auto computed = std::make_shared<const std::vector<mpz_class>>(cyclotomic_coefficients(d));
  std::lock_guard lock(mutex);
  return cache.emplace(d, std::move(computed)).first->second;
}

}  // namespace

// --- number theory ---------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are exact for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomic_coefficients(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("cyclotomic polynomial needs d >= 1");
  // x^d - 1
  std::vector<mpz_class> num(d + 1);
  num[0] = -1;
  num[d] = 1;
  for (std::uint64_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    const std::vector<mpz_class> den = *cached_cyclotomic(e);
    // Monic divisor: integer long division.
    const std::size_t dn = den.size() - 1;
    std::vector<mpz_class> quotient(num.size() - dn);
    for (std::size_t top = num.size(); top-- > dn;) {
      const mpz_class c = num[top];
      quotient[top - dn] = c;
      if (c != 0) {
        for (std::size_t j = 0; j <= dn; ++j) num[top - dn + j] -= c * den[j];
      }
    }
    for (const auto& r : num) {
      if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
    }
    num = std::move(quotient);
  }
  return num;
}

// --- RingDescriptor --------------------------------------------------------

RingDescriptor RingDescriptor::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text.starts_with("gfp:")) return prime_field(parse_u64(text.substr(4), "prime"));
  if (text.starts_with("cyclotomic:")) {
    return cyclotomic(parse_u64(text.substr(11), "cyclotomic order"));
  }
  throw std::invalid_argument("unknown ring '" + std::string(text) +
                              "' (expected rational, gfp:<p> or cyclotomic:<d>)");
}

std::string RingDescriptor::to_string() const {
  switch (kind_) {
    case RingKind::kRational:
      return "rational";
    case RingKind::kPrimeField:
      return "gfp:" + std::to_string(parameter_);
    case RingKind::kCyclotomic:
      return "cyclotomic:" + std::to_string(parameter_);
  }
  return "?";
}

// --- Ring ------------------------------------------------------------------

Ring::Ring(RingDescriptor descriptor) : descriptor_(descriptor) {
  switch (descriptor.kind()) {
    case RingKind::kRational:
      break;
    case RingKind::kPrimeField:
      if (!is_prime(descriptor.parameter())) {
        throw std::invalid_argument("prime field modulus " +
                                    std::to_string(descriptor.parameter()) + " is not prime");
      }
      break;
    case RingKind::kCyclotomic:
      if (descriptor.parameter() < 1) {
        throw std::invalid_argument("cyclotomic order must be >= 1");
      }
      if (descriptor.parameter() == 1) {
        descriptor_ = RingDescriptor::rational();
      } else {
        modulus_ = cached_cyclotomic(descriptor.parameter());
      }
      break;
  }
}

std::size_t Ring::extension_degree() const {
  return modulus_ ? modulus_->size() - 1 : 1;
}

Scalar Ring::zero() const { return from_integer(0); }
Scalar Ring::one() const { return from_integer(1); }

Scalar Ring::from_integer(long value) const {
  switch (kind()) {
    case RingKind::kRational:
      return Scalar(*this, mpq_class(value));
    case RingKind::kPrimeField: {
      const auto p = static_cast<std::int64_t>(descriptor_.parameter());
      std::int64_t r = static_cast<std::int64_t>(value) % p;
      if (r < 0) r += p;
      return Scalar(*this, static_cast<std::uint64_t>(r));
    }
    case RingKind::kCyclotomic: {
      std::vector<mpq_class> coords(extension_degree());
      coords[0] = value;
      return Scalar(*this, std::move(coords));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Ring::from_rational(const mpq_class& value) const {
  mpq_class v = value;
  v.canonicalize();
  switch (kind()) {
    case RingKind::kRational:
      return Scalar(*this, std::move(v));
    case RingKind::kPrimeField: {
      const std::uint64_t p = descriptor_.parameter();
      mpz_class num = v.get_num() % p;
      if (num < 0) num += p;
      mpz_class den = v.get_den() % p;
      if (den == 0) throw std::domain_error("denominator vanishes in GF(p)");
      const auto n = static_cast<std::uint64_t>(num.get_ui());
      const auto d = static_cast<std::uint64_t>(den.get_ui());
      return Scalar(*this, mul_mod(n, pow_mod(d, p - 2, p), p));
    }
    case RingKind::kCyclotomic: {
      std::vector<mpq_class> coords(extension_degree());
      coords[0] = std::move(v);
      return Scalar(*this, std::move(coords));
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Ring::zeta() const {
  switch (kind()) {
    case RingKind::kRational:
      return one();
    case RingKind::kPrimeField:
      throw std::logic_error("a prime field has no distinguished root of unity");
    case RingKind::kCyclotomic: {
      std::vector<mpq_class> coords{0, 1};
      reduce(coords, *modulus_);
      return Scalar(*this, std::move(coords));
    }
  }
  throw std::logic_error("unreachable");
}

std::span<const mpz_class> Ring::cyclotomic_modulus() const {
  if (!modulus_) return {};
  return *modulus_;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const { return a + b; }
Scalar Ring::negate(const Scalar& a) const { return -a; }
Scalar Ring::multiply(const Scalar& a, const Scalar& b) const { return a * b; }
Scalar Ring::inverse(const Scalar& a) const { return a.inverse(); }
bool Ring::equal(const Scalar& a, const Scalar& b) const { return a == b; }

// --- Scalar ----------------------------------------------------------------

void Scalar::check_same_ring(const Scalar& other) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch("scalar ring mismatch: " + ring_.descriptor().to_string() + " vs " +
                       other.ring_.descriptor().to_string());
  }
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0:
      return sgn(std::get<0>(value_)) == 0;
    case 1:
      return std::get<1>(value_) == 0;
    default:
      for (const auto& c : std::get<2>(value_)) {
        if (sgn(c) != 0) return false;
      }
      return true;
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 1;
    case 1:
      return std::get<1>(value_) == 1;
    default: {
      const auto& c = std::get<2>(value_);
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) != 0) return false;
      }
      return c[0] == 1;
    }
  }
}

std::optional<mpq_class> Scalar::as_rational() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_);
    case 1:
      return std::nullopt;
    default: {
      const auto& c = std::get<2>(value_);
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) != 0) return std::nullopt;
      }
      return c[0];
    }
  }
}

const mpq_class& Scalar::rational() const {
  if (value_.index() != 0) throw std::logic_error("scalar is not a plain rational");
  return std::get<0>(value_);
}

std::uint64_t Scalar::residue() const {
  if (value_.index() != 1) throw std::logic_error("scalar is not a prime-field residue");
  return std::get<1>(value_);
}

std::span<const mpq_class> Scalar::coordinates() const {
  if (value_.index() != 2) throw std::logic_error("scalar is not cyclotomic");
  return std::get<2>(value_);
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0:
      return Scalar(ring_, mpq_class(-std::get<0>(value_)));
    case 1: {
      const std::uint64_t p = ring_.descriptor().parameter();
      const std::uint64_t r = std::get<1>(value_);
      return Scalar(ring_, r == 0 ? std::uint64_t{0} : p - r);
    }
    default: {
      auto coords = std::get<2>(value_);
      for (auto& c : coords) c = -c;
      return Scalar(ring_, std::move(coords));
    }
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_ring(rhs);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) += std::get<0>(rhs.value_);
      break;
    case 1: {
      const std::uint64_t p = ring_.descriptor().parameter();
      auto& r = std::get<1>(value_);
      r = static_cast<std::uint64_t>((static_cast<u128>(r) + std::get<1>(rhs.value_)) % p);
      break;
    }
    default: {
      auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(rhs.value_);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_ring(rhs);
  switch (value_.index()) {
    case 0:
      std::get<0>(value_) *= std::get<0>(rhs.value_);
      break;
    case 1: {
      auto& r = std::get<1>(value_);
      r = mul_mod(r, std::get<1>(rhs.value_), ring_.descriptor().parameter());
      break;
    }
    default: {
      const auto& a = std::get<2>(value_);
      const auto& b = std::get<2>(rhs.value_);
      QPoly product(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) product[i + j] += a[i] * b[j];
      }
      reduce(product, ring_.cyclotomic_modulus());
      value_ = std::move(product);
      break;
    }
  }
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (value_.index() == 0) {
    check_same_ring(a);
    check_same_ring(b);
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), std::get<0>(a.value_).get_mpq_t(),
            std::get<0>(b.value_).get_mpq_t());
    auto& acc = std::get<0>(value_);
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
    return;
  }
  *this += a * b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  switch (value_.index()) {
    case 0:
      return Scalar(ring_, mpq_class(1 / std::get<0>(value_)));
    case 1: {
      const std::uint64_t p = ring_.descriptor().parameter();
      return Scalar(ring_, pow_mod(std::get<1>(value_), p - 2, p));
    }
    default: {
      // Extended Euclid: s*a + t*Phi = 1 in Q[x] since Phi_d is irreducible.
      QPoly modulus(ring_.cyclotomic_modulus().begin(), ring_.cyclotomic_modulus().end());
      QPoly r0 = modulus, r1 = std::get<2>(value_);
      trim(r1);
      QPoly s0{}, s1{1};
      while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r0 is a nonzero constant.
      const mpq_class scale = 1 / r0[0];
      for (auto& c : s0) c *= scale;
      reduce(s0, ring_.cyclotomic_modulus());
      return Scalar(ring_, std::move(s0));
    }
  }
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = ring_.one();
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_).get_str();
    case 1:
      return std::to_string(std::get<1>(value_));
    default: {
      if (auto q = as_rational()) return q->get_str();
      std::string out;
      const auto& c = std::get<2>(value_);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        const bool negative = sgn(c[i]) < 0;
        const mpq_class magnitude = abs(c[i]);
        if (out.empty()) {
          if (negative) out += "-";
        } else {
          out += negative ? " - " : " + ";
        }
        const bool unit = magnitude == 1;
        if (i == 0 || !unit) out += magnitude.get_str();
        if (i > 0) {
          if (!unit) out += "*";
          out += "zeta";
          if (i > 1) out += "^" + std::to_string(i);
        }
      }
      return out;
    }
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.ring_ == b.ring_)) return false;
  return a.value_ == b.value_;
}

// --- parsing / queries -----------------------------------------------------

Scalar parse_scalar(const Ring& ring, std::string_view text) {
  if (ring.kind() == RingKind::kPrimeField) {
    std::string s(text);
    mpz_class value;
    if (s.empty() || value.set_str(s, 10) != 0) {
      throw std::invalid_argument("malformed residue: '" + s + "'");
    }
    return ring.from_rational(mpq_class(value));
  }
  return ring.from_rational(parse_rational(text));
}

Scalar parse_cyclotomic(const Ring& ring, std::span<const std::string> coords) {
  if (coords.size() != ring.extension_degree()) {
    throw std::invalid_argument("cyclotomic scalar needs " +
                                std::to_string(ring.extension_degree()) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  Scalar result = ring.zero();
  Scalar power = ring.one();
  const Scalar zeta = ring.zeta();
  for (const auto& c : coords) {
    result += ring.from_rational(parse_rational(c)) * power;
    power *= zeta;
  }
  return result;
}

std::optional<std::uint64_t> root_of_unity_order(const Scalar& z) {
  if (z.is_zero()) throw std::domain_error("zero is not a root of unity");
  const Ring& ring = z.ring();
  std::uint64_t limit = 0;
  switch (ring.kind()) {
    case RingKind::kRational:
      limit = 4;
      break;
    case RingKind::kCyclotomic:
      limit = 4 * ring.descriptor().parameter();
      break;
    case RingKind::kPrimeField:
      limit = ring.descriptor().parameter() - 1;
      break;
  }
  Scalar power = z;
  for (std::uint64_t l = 1; l <= limit; ++l) {
    if (power.is_one()) return l;
    power *= z;
  }
  return std::nullopt;
}

}  // namespace qfe
