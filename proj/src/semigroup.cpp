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

#include "qfe/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qfe/ring.hpp"

namespace qfe {

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) {
      throw std::invalid_argument(std::to_string(primes_[i]) + " is not prime");
    }
    if (i > 0 && primes_[i] == primes_[i - 1]) {
      throw std::invalid_argument("prime " + std::to_string(primes_[i]) + " listed twice");
    }
  }
}

PrimeSet PrimeSet::all() {
  PrimeSet s;
  s.all_ = true;
  return s;
}

const std::vector<std::uint64_t>& PrimeSet::primes() const {
  if (all_) throw std::logic_error("the set of all primes is not enumerable");
  return primes_;
}

bool PrimeSet::has_prime(std::uint64_t p) const {
  if (all_) return is_prime(p);
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::to_string() const {
  if (all_) return "all";
  std::string out = "[";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(primes_[i]);
  }
  return out + "]";
}

Factorization factorize(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("factorize needs n >= 1");
  Factorization result{n, {}};
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (n > 1) result.factors.push_back({n, 1});
  return result;
}

std::uint32_t omega(std::uint64_t n) {
  std::uint32_t total = 0;
  for (const auto& f : factorize(n).factors) total += f.exponent;
  return total;
}

bool in_semigroup(std::uint64_t n, const PrimeSet& primes) {
  if (n < 1) throw std::invalid_argument("in_semigroup needs n >= 1");
  if (primes.is_all()) return true;
  for (std::uint64_t p : primes.primes()) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

std::vector<std::uint64_t> enumerate_semigroup(const PrimeSet& primes, std::uint64_t bound) {
  if (primes.is_all()) {
    throw std::invalid_argument("enumerate_semigroup: use the range 1..bound for all primes");
  }
  if (bound < 1) throw std::invalid_argument("enumerate_semigroup needs bound >= 1");
  std::vector<std::uint64_t> members{1};
  // Multiplying by each prime in turn gives every p1^a1 ... pk^ak exactly once.
  for (std::uint64_t p : primes.primes()) {
    const std::size_t existing = members.size();
    for (std::size_t i = 0; i < existing; ++i) {
      std::uint64_t m = members[i];
      while (m <= bound / p) {
        m *= p;
        members.push_back(m);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::uint64_t seed_gcd(const PrimeSet& primes) {
  if (primes.is_all()) throw std::invalid_argument("seed_gcd is undefined for all primes");
  if (primes.empty()) throw std::invalid_argument("seed_gcd needs a nonempty prime set");
  std::uint64_t d = 0;
  for (std::uint64_t p : primes.primes()) d = std::gcd(d, p - 1);
  return d;
}

}  // namespace qfe
