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

#ifndef QFE_SEMIGROUP_HPP_
#define QFE_SEMIGROUP_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qfe {

// A finite set of primes P, standing for the prime semigroup S(P), or the
// distinguished value all() whose semigroup is the whole of N.
class PrimeSet {
 public:
  // The empty set; S(empty) = {1}.
  PrimeSet() = default;
  // Sorts its input. Throws std::invalid_argument on a non-prime or a
  // repeated entry.
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  PrimeSet(std::initializer_list<std::uint64_t> primes)
      : PrimeSet(std::vector<std::uint64_t>(primes)) {}

  static PrimeSet all();

  bool is_all() const { return all_; }
  bool empty() const { return !all_ && primes_.empty(); }
  // Throws std::logic_error for all().
  const std::vector<std::uint64_t>& primes() const;
  bool has_prime(std::uint64_t p) const;

  // "[2,5,7]" or "all".
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  bool all_ = false;
  std::vector<std::uint64_t> primes_;
};

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::uint64_t n = 1;
  // Ascending primes; empty iff n == 1.
  std::vector<PrimePower> factors;
};

// Trial division. Throws std::invalid_argument for n < 1.
Factorization factorize(std::uint64_t n);

// Number of prime factors counted with multiplicity.
std::uint32_t omega(std::uint64_t n);

bool in_semigroup(std::uint64_t n, const PrimeSet& primes);

// Members of S(P) up to bound, ascending, starting with 1. Generated by
// closing {1} under multiplication by P. Throws for all().
std::vector<std::uint64_t> enumerate_semigroup(const PrimeSet& primes, std::uint64_t bound);

// gcd{p - 1 : p in P}. Throws for the empty set and for all().
std::uint64_t seed_gcd(const PrimeSet& primes);

}  // namespace qfe

#endif  // QFE_SEMIGROUP_HPP_
