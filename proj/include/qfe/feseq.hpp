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

#ifndef QFE_FESEQ_HPP_
#define QFE_FESEQ_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "qfe/error.hpp"
#include "qfe/poly.hpp"
#include "qfe/ring.hpp"
#include "qfe/semigroup.hpp"

namespace qfe {

// f_m (x)_q f_n = f_m(q) f_n(q^m), with m the index of the left operand.
Polynomial otimes(const Polynomial& fm, const Polynomial& fn, std::uint64_t m);

// f_m (+)_q f_n = f_m(q) + q^m f_n(q).
Polynomial oplus(const Polynomial& fm, const Polynomial& fn, std::uint64_t m);

enum class RuleKind {
  kQuantumInteger,
  kMonomial,
  kIdentity,
  kSeedBased,
  kZetaScaled,
  kDilated,
  kPsiSubstituted,
  kReciprocal,
  kProduct,
  kQuotient,
  kNormalized,
  kAssembled,
  kExplicit,
};

namespace detail {
class SequenceNode;
}  // namespace detail

// A lazily evaluated sequence n -> f_n(q) with a declared support S(P) (or
// all of N). Values are memoized in a write-once table; eval() may be called
// concurrently and always returns the same polynomial for the same n.
//
// Every rule except kExplicit returns the zero polynomial off the support.
// Copies share the underlying table.
class FESequence {
 public:
  explicit FESequence(std::shared_ptr<const detail::SequenceNode> node);

  // Unchecked candidate sequence, e.g. for probing the verifier with values
  // that do not satisfy the functional equation. The function is called at
  // most once per index and its values are taken as-is, even off `support`.
  static FESequence from_function(Ring ring, PrimeSet support,
                                  std::function<Polynomial(std::uint64_t)> values);

  const Ring& ring() const;
  const PrimeSet& support() const;
  RuleKind rule() const;
  bool in_support(std::uint64_t n) const;

  // Throws std::invalid_argument for n < 1. The reference stays valid for the
  // lifetime of the sequence.
  const Polynomial& eval(std::uint64_t n) const;

  std::size_t cached_count() const;

 private:
  std::shared_ptr<const detail::SequenceNode> node_;
};

// Prime -> seed polynomial h_p.
using SeedMap = std::map<std::uint64_t, Polynomial>;

// n -> scalar, e.g. the completely multiplicative part lambda(n).
using ArithmeticFunction = std::function<Scalar(std::uint64_t)>;

// A pair of seeds violating h_p1(q) h_p2(q^p1) = h_p2(q) h_p1(q^p2).
struct CommutativityFailure {
  std::uint64_t p1;
  std::uint64_t p2;
  Polynomial lhs;  // h_p1(q) h_p2(q^p1)
  Polynomial rhs;  // h_p2(q) h_p1(q^p2)
};

class CommutativityError : public Error {
 public:
  explicit CommutativityError(CommutativityFailure failure);
  const CommutativityFailure& failure() const { return failure_; }

 private:
  CommutativityFailure failure_;
};

// psi(q)^p != psi(q^p) for a generator p of the support.
class SubstitutionError : public Error {
 public:
  SubstitutionError(std::uint64_t prime, Polynomial lhs, Polynomial rhs);
  std::uint64_t prime() const { return prime_; }
  const Polynomial& lhs() const { return lhs_; }
  const Polynomial& rhs() const { return rhs_; }

 private:
  std::uint64_t prime_;
  Polynomial lhs_;
  Polynomial rhs_;
};

// zeta^d != 1 for d = gcd{p - 1}; the scaled quantum integers would not
// satisfy the functional equation.
class InadmissibleZeta : public Error {
 public:
  using Error::Error;
};

// assemble() inputs that cannot produce a solution.
class AssemblyError : public Error {
 public:
  using Error::Error;
};

// f_n = [n]_q on the support, 0 elsewhere.
FESequence quantum_sequence(const Ring& ring, PrimeSet support = PrimeSet::all());

// f_n = q^(n-1) on the support.
FESequence monomial_sequence(const Ring& ring, PrimeSet support = PrimeSet::all());

// f_n = 1 on the support: the identity of the product semigroup.
FESequence identity_sequence(const Ring& ring, PrimeSet support = PrimeSet::all());

// Checks every unordered pair of seeds. Throws std::invalid_argument for a
// zero seed or a non-prime key.
std::optional<CommutativityFailure> check_seed_commutativity(const SeedMap& seeds);

// The unique solution with support S(P) and f_p = h_p. Values are built
// from the prime-power chains f_{p^k} = f_p(q) f_{p^(k-1)}(q^p), joined left
// to right with the largest prime split off last:
//   f_n = f_{n'}(q) f_{p^a}(q^{n'}),  n = n' p^a.
// Throws CommutativityError, or std::invalid_argument when the seed keys
// differ from P or P is all().
FESequence from_seeds(const Ring& ring, const PrimeSet& primes, const SeedMap& seeds);

// f_n = [n]_{zeta q} on S(P). Throws InadmissibleZeta unless zeta^d = 1
// with d = gcd{p - 1 : p in P}.
FESequence zeta_scaled_sequence(const PrimeSet& primes, const Scalar& zeta);

// f_n(q^t).
FESequence dilate_sequence(const FESequence& base, std::uint64_t t);

// f_n(psi(q)). psi(q)^p = psi(q^p) is checked for every p in P, which
// extends to every member of S(P) by induction on the factorization. With
// support N only psi = q^t is accepted.
FESequence psi_substitute_sequence(const FESequence& base, const Polynomial& psi);

// q^deg(f_n) f_n(1/q).
FESequence reciprocal_sequence(const FESequence& base);

// f_n g_n. Supports and rings must agree.
FESequence product_sequence(const FESequence& left, const FESequence& right);

// g_n = (fg)_n / f_n, recovering a factor from a product. Evaluation throws
// NotDivisible if the division is not exact.
FESequence cancel_sequence(const FESequence& product, const FESequence& factor);

// g_n = f_n / (lambda(n) q^delta(n)), the part with constant term 1.
FESequence normalized_sequence(const FESequence& base);

// f_n = lambda(n) q^(t(n-1)) g_n(q). Sampled support members n <= sample_bound
// are checked for lambda(n) != 0, integral t(n-1) and lambda(mn) =
// lambda(m) lambda(n); any failure throws AssemblyError. Evaluation re-checks
// integrality.
FESequence assemble(const mpq_class& t, ArithmeticFunction lambda, const FESequence& g,
                    std::uint64_t sample_bound = 64);

// f_n / g_n as a pair of polynomials.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  // Cross-multiplied equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
};

// F/G for two solutions with the same finite support S(P): an element of
// the Grothendieck group of the product semigroup.
class RationalSequence {
 public:
  // Throws std::invalid_argument on a support mismatch or infinite support.
  RationalSequence(FESequence numerator, FESequence denominator);

  const FESequence& numerator() const { return numerator_; }
  const FESequence& denominator() const { return denominator_; }
  const PrimeSet& support() const { return numerator_.support(); }

  // 0/1 off the support.
  RationalFunction value_at(std::uint64_t n) const;

  RationalSequence inverse() const;
  friend RationalSequence operator*(const RationalSequence& a, const RationalSequence& b);

  // F G1 = F1 G on every support member up to bound.
  bool equals(const RationalSequence& other, std::uint64_t bound) const;

 private:
  FESequence numerator_;
  FESequence denominator_;
};

RationalSequence rational_quotient(const FESequence& numerator, const FESequence& denominator);

// n -> h(q) [n]_q, a solution of f_{m+n} = f_m (+)_q f_n.
class AdditiveSequence {
 public:
  explicit AdditiveSequence(Polynomial h) : h_(std::move(h)) {}

  const Polynomial& h() const { return h_; }
  const Ring& ring() const { return h_.ring(); }
  Polynomial eval(std::uint64_t n) const;

 private:
  Polynomial h_;
};

inline AdditiveSequence additive_sequence(Polynomial h) { return AdditiveSequence(std::move(h)); }

}  // namespace qfe

#endif  // QFE_FESEQ_HPP_
