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

#include "qfe/feseq.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace qfe {

Polynomial otimes(const Polynomial& fm, const Polynomial& fn, std::uint64_t m) {
  return fm * dilate(fn, m);
}

Polynomial oplus(const Polynomial& fm, const Polynomial& fn, std::uint64_t m) {
  return fm + Polynomial::monomial(fm.ring().one(), m) * fn;
}

namespace detail {

class SequenceNode {
 public:
  SequenceNode(Ring ring, PrimeSet support, RuleKind rule, bool zero_off_support = true)
      : ring_(std::move(ring)),
        support_(std::move(support)),
        rule_(rule),
        zero_off_support_(zero_off_support),
        zero_(ring_) {}
  virtual ~SequenceNode() = default;

  const Ring& ring() const { return ring_; }
  const PrimeSet& support() const { return support_; }
  RuleKind rule() const { return rule_; }

  bool in_support(std::uint64_t n) const { return in_semigroup(n, support_); }

  const Polynomial& eval(std::uint64_t n) const {
    if (n < 1) throw std::invalid_argument("sequence index must be >= 1");
    if (zero_off_support_ && !in_support(n)) return zero_;
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    // Computed without the lock: compute() recurses into eval(). A racing
    // thread may compute the same entry; the first insertion wins and both
    // values are equal.
    Polynomial value = compute(n);
    std::unique_lock lock(mutex_);
    return memo_.emplace(n, std::move(value)).first->second;
  }

  std::size_t cached_count() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

 protected:
  virtual Polynomial compute(std::uint64_t n) const = 0;

 private:
  Ring ring_;
  PrimeSet support_;
  RuleKind rule_;
  bool zero_off_support_;
  Polynomial zero_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::uint64_t, Polynomial> memo_;
};

}  // namespace detail

namespace {

using detail::SequenceNode;

class QuantumNode final : public SequenceNode {
 public:
  QuantumNode(const Ring& ring, PrimeSet support)
      : SequenceNode(ring, std::move(support), RuleKind::kQuantumInteger) {}

 protected:
  Polynomial compute(std::uint64_t n) const override { return quantum_integer(n, ring()); }
};

class MonomialNode final : public SequenceNode {
 public:
  MonomialNode(const Ring& ring, PrimeSet support)
      : SequenceNode(ring, std::move(support), RuleKind::kMonomial) {}

 protected:
  Polynomial compute(std::uint64_t n) const override {
    return Polynomial::monomial(ring().one(), n - 1);
  }
};

class IdentityNode final : public SequenceNode {
 public:
  IdentityNode(const Ring& ring, PrimeSet support)
      : SequenceNode(ring, std::move(support), RuleKind::kIdentity) {}

 protected:
  Polynomial compute(std::uint64_t) const override { return Polynomial::constant(ring().one()); }
};

class ExplicitNode final : public SequenceNode {
 public:
  ExplicitNode(Ring ring, PrimeSet support, std::function<Polynomial(std::uint64_t)> values)
      : SequenceNode(std::move(ring), std::move(support), RuleKind::kExplicit, false),
        values_(std::move(values)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override {
    Polynomial value = values_(n);
    if (!(value.ring() == ring())) throw RingMismatch("explicit sequence value over wrong ring");
    return value;
  }

 private:
  std::function<Polynomial(std::uint64_t)> values_;
};

class SeedNode final : public SequenceNode {
 public:
  SeedNode(const Ring& ring, PrimeSet primes, SeedMap seeds)
      : SequenceNode(ring, std::move(primes), RuleKind::kSeedBased), seeds_(std::move(seeds)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override {
    if (n == 1) return Polynomial::constant(ring().one());
    const Factorization fac = factorize(n);
    const PrimePower& last = fac.factors.back();
    if (fac.factors.size() == 1) {
      const Polynomial& hp = seeds_.at(last.prime);
      if (last.exponent == 1) return hp;
      // f_{p^k} = f_p(q) f_{p^(k-1)}(q^p)
      return otimes(hp, eval(n / last.prime), last.prime);
    }
    std::uint64_t prime_power = 1;
    for (std::uint32_t i = 0; i < last.exponent; ++i) prime_power *= last.prime;
    const std::uint64_t rest = n / prime_power;
    // f_n = f_{n'}(q) f_{p^a}(q^{n'})
    return otimes(eval(rest), eval(prime_power), rest);
  }

 private:
  SeedMap seeds_;
};

class ZetaNode final : public SequenceNode {
 public:
  ZetaNode(PrimeSet primes, Scalar zeta)
      : SequenceNode(zeta.ring(), std::move(primes), RuleKind::kZetaScaled),
        zeta_(std::move(zeta)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override { return scaled_quantum_integer(n, zeta_); }

 private:
  Scalar zeta_;
};

class DilatedNode final : public SequenceNode {
 public:
  DilatedNode(FESequence base, std::uint64_t t)
      : SequenceNode(base.ring(), base.support(), RuleKind::kDilated),
        base_(std::move(base)),
        t_(t) {}

 protected:
  Polynomial compute(std::uint64_t n) const override { return dilate(base_.eval(n), t_); }

 private:
  FESequence base_;
  std::uint64_t t_;
};

class PsiNode final : public SequenceNode {
 public:
  PsiNode(FESequence base, Polynomial psi)
      : SequenceNode(base.ring(), base.support(), RuleKind::kPsiSubstituted),
        base_(std::move(base)),
        psi_(std::move(psi)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override { return compose(base_.eval(n), psi_); }

 private:
  FESequence base_;
  Polynomial psi_;
};

class ReciprocalNode final : public SequenceNode {
 public:
  explicit ReciprocalNode(FESequence base)
      : SequenceNode(base.ring(), base.support(), RuleKind::kReciprocal), base_(std::move(base)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override {
    const Polynomial& f = base_.eval(n);
    return f.is_zero() ? f : reciprocal(f);
  }

 private:
  FESequence base_;
};

class ProductNode final : public SequenceNode {
 public:
  ProductNode(FESequence left, FESequence right)
      : SequenceNode(left.ring(), left.support(), RuleKind::kProduct),
        left_(std::move(left)),
        right_(std::move(right)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override { return left_.eval(n) * right_.eval(n); }

 private:
  FESequence left_;
  FESequence right_;
};

class QuotientNode final : public SequenceNode {
 public:
  QuotientNode(FESequence product, FESequence factor)
      : SequenceNode(product.ring(), product.support(), RuleKind::kQuotient),
        product_(std::move(product)),
        factor_(std::move(factor)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override {
    return exact_div(product_.eval(n), factor_.eval(n));
  }

 private:
  FESequence product_;
  FESequence factor_;
};

class NormalizedNode final : public SequenceNode {
 public:
  explicit NormalizedNode(FESequence base)
      : SequenceNode(base.ring(), base.support(), RuleKind::kNormalized), base_(std::move(base)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override {
    const Polynomial& f = base_.eval(n);
    if (f.is_zero()) return f;
    const auto coeffs = f.coefficients();
    const std::size_t delta = valuation(f);
    const Scalar inv = coeffs[delta].inverse();
    std::vector<Scalar> shifted;
    shifted.reserve(coeffs.size() - delta);
    for (std::size_t i = delta; i < coeffs.size(); ++i) shifted.push_back(coeffs[i] * inv);
    return Polynomial(ring(), std::move(shifted));
  }

 private:
  FESequence base_;
};

// t(n-1) as an exponent, or nullopt when it is not a nonnegative integer.
std::optional<std::size_t> scaled_exponent(const mpq_class& t, std::uint64_t n) {
  mpq_class e = t * mpq_class(mpz_class(std::to_string(n - 1)));
  e.canonicalize();
  if (e.get_den() != 1 || sgn(e) < 0 || !e.get_num().fits_ulong_p()) return std::nullopt;
  return static_cast<std::size_t>(e.get_num().get_ui());
}

class AssembledNode final : public SequenceNode {
 public:
  AssembledNode(mpq_class t, ArithmeticFunction lambda, FESequence g)
      : SequenceNode(g.ring(), g.support(), RuleKind::kAssembled),
        t_(std::move(t)),
        lambda_(std::move(lambda)),
        g_(std::move(g)) {}

 protected:
  Polynomial compute(std::uint64_t n) const override {
    const auto exponent = scaled_exponent(t_, n);
    if (!exponent) {
      throw AssemblyError("t(n-1) = " + t_.get_str() + "*" + std::to_string(n - 1) +
                          " is not an integer at n = " + std::to_string(n));
    }
    return Polynomial::monomial(lambda_(n), *exponent) * g_.eval(n);
  }

 private:
  mpq_class t_;
  ArithmeticFunction lambda_;
  FESequence g_;
};

void require_same_shape(const FESequence& a, const FESequence& b, const char* what) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatch(std::string(what) + ": ring mismatch");
  }
  if (!(a.support() == b.support())) {
    throw std::invalid_argument(std::string(what) + ": support mismatch " +
                                a.support().to_string() + " vs " + b.support().to_string());
  }
}

std::vector<std::uint64_t> support_members(const PrimeSet& support, std::uint64_t bound) {
  if (!support.is_all()) return enumerate_semigroup(support, bound);
  std::vector<std::uint64_t> members(bound);
  for (std::uint64_t n = 1; n <= bound; ++n) members[n - 1] = n;
  return members;
}

}  // namespace

// --- FESequence ------------------------------------------------------------

FESequence::FESequence(std::shared_ptr<const detail::SequenceNode> node) : node_(std::move(node)) {}

FESequence FESequence::from_function(Ring ring, PrimeSet support,
                                     std::function<Polynomial(std::uint64_t)> values) {
  return FESequence(
      std::make_shared<ExplicitNode>(std::move(ring), std::move(support), std::move(values)));
}

const Ring& FESequence::ring() const { return node_->ring(); }
const PrimeSet& FESequence::support() const { return node_->support(); }
RuleKind FESequence::rule() const { return node_->rule(); }
bool FESequence::in_support(std::uint64_t n) const { return node_->in_support(n); }
const Polynomial& FESequence::eval(std::uint64_t n) const { return node_->eval(n); }
std::size_t FESequence::cached_count() const { return node_->cached_count(); }

// --- errors ----------------------------------------------------------------

CommutativityError::CommutativityError(CommutativityFailure failure)
    : Error("seeds for p=" + std::to_string(failure.p1) + " and p=" + std::to_string(failure.p2) +
            " do not commute: " + to_string(failure.lhs) + " != " + to_string(failure.rhs)),
      failure_(std::move(failure)) {}

SubstitutionError::SubstitutionError(std::uint64_t prime, Polynomial lhs, Polynomial rhs)
    : Error("psi(q)^" + std::to_string(prime) + " != psi(q^" + std::to_string(prime) +
            "): " + to_string(lhs) + " vs " + to_string(rhs)),
      prime_(prime),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

// --- builders --------------------------------------------------------------

FESequence quantum_sequence(const Ring& ring, PrimeSet support) {
  return FESequence(std::make_shared<QuantumNode>(ring, std::move(support)));
}

FESequence monomial_sequence(const Ring& ring, PrimeSet support) {
  return FESequence(std::make_shared<MonomialNode>(ring, std::move(support)));
}

FESequence identity_sequence(const Ring& ring, PrimeSet support) {
  return FESequence(std::make_shared<IdentityNode>(ring, std::move(support)));
}

std::optional<CommutativityFailure> check_seed_commutativity(const SeedMap& seeds) {
  for (const auto& [p, h] : seeds) {
    if (!is_prime(p)) throw std::invalid_argument("seed key " + std::to_string(p) + " is not prime");
    if (h.is_zero()) throw std::invalid_argument("seed for p=" + std::to_string(p) + " is zero");
  }
  for (auto i = seeds.begin(); i != seeds.end(); ++i) {
    for (auto j = std::next(i); j != seeds.end(); ++j) {
      const auto& [p1, h1] = *i;
      const auto& [p2, h2] = *j;
      Polynomial lhs = otimes(h1, h2, p1);
      Polynomial rhs = otimes(h2, h1, p2);
      if (lhs != rhs) return CommutativityFailure{p1, p2, std::move(lhs), std::move(rhs)};
    }
  }
  return std::nullopt;
}

FESequence from_seeds(const Ring& ring, const PrimeSet& primes, const SeedMap& seeds) {
  if (primes.is_all()) throw std::invalid_argument("from_seeds needs a finite prime set");
  for (const auto& [p, h] : seeds) {
    if (!primes.has_prime(p)) {
      throw std::invalid_argument("seed given for p=" + std::to_string(p) +
                                  " which is not in " + primes.to_string());
    }
    if (!(h.ring() == ring)) throw RingMismatch("seed for p=" + std::to_string(p) + " has wrong ring");
  }
  for (std::uint64_t p : primes.primes()) {
    if (!seeds.contains(p)) throw std::invalid_argument("missing seed for p=" + std::to_string(p));
  }
  if (auto failure = check_seed_commutativity(seeds)) throw CommutativityError(*failure);
  return FESequence(std::make_shared<SeedNode>(ring, primes, seeds));
}

FESequence zeta_scaled_sequence(const PrimeSet& primes, const Scalar& zeta) {
  if (zeta.is_zero()) throw std::invalid_argument("zeta must be nonzero");
  const std::uint64_t d = seed_gcd(primes);
  if (!zeta.pow(d).is_one()) {
    throw InadmissibleZeta("zeta = " + zeta.to_string() + " is not a " + std::to_string(d) +
                           "-th root of unity (d = gcd{p-1 : p in " + primes.to_string() + "})");
  }
  return FESequence(std::make_shared<ZetaNode>(primes, zeta));
}

FESequence dilate_sequence(const FESequence& base, std::uint64_t t) {
  if (t < 1) throw std::invalid_argument("dilation factor must be >= 1");
  return FESequence(std::make_shared<DilatedNode>(base, t));
}

FESequence psi_substitute_sequence(const FESequence& base, const Polynomial& psi) {
  if (!(psi.ring() == base.ring())) throw RingMismatch("psi over a different ring");
  if (base.support().is_all()) {
    const auto coeffs = psi.coefficients();
    bool pure_power = !coeffs.empty() && coeffs.back().is_one();
    for (std::size_t i = 0; pure_power && i + 1 < coeffs.size(); ++i) {
      pure_power = coeffs[i].is_zero();
    }
    if (!pure_power) {
      throw std::invalid_argument("with support N only psi = q^t is admitted, got " + to_string(psi));
    }
  } else {
    for (std::uint64_t p : base.support().primes()) {
      Polynomial lhs = pow(psi, p);
      Polynomial rhs = dilate(psi, p);
      if (lhs != rhs) throw SubstitutionError(p, std::move(lhs), std::move(rhs));
    }
  }
  return FESequence(std::make_shared<PsiNode>(base, psi));
}

FESequence reciprocal_sequence(const FESequence& base) {
  if (base.eval(1).is_zero()) throw std::invalid_argument("reciprocal of the zero sequence");
  return FESequence(std::make_shared<ReciprocalNode>(base));
}

FESequence product_sequence(const FESequence& left, const FESequence& right) {
  require_same_shape(left, right, "product_sequence");
  return FESequence(std::make_shared<ProductNode>(left, right));
}

FESequence cancel_sequence(const FESequence& product, const FESequence& factor) {
  require_same_shape(product, factor, "cancel_sequence");
  return FESequence(std::make_shared<QuotientNode>(product, factor));
}

FESequence normalized_sequence(const FESequence& base) {
  return FESequence(std::make_shared<NormalizedNode>(base));
}

FESequence assemble(const mpq_class& t, ArithmeticFunction lambda, const FESequence& g,
                    std::uint64_t sample_bound) {
  if (sgn(t) < 0) throw std::invalid_argument("assemble needs t >= 0");
  const std::vector<std::uint64_t> members = support_members(g.support(), sample_bound);
  std::map<std::uint64_t, Scalar> sampled;
  for (std::uint64_t n : members) {
    if (!scaled_exponent(t, n)) {
      throw AssemblyError("t(n-1) is not an integer for support member n = " + std::to_string(n) +
                          " (t = " + t.get_str() + ")");
    }
    Scalar value = lambda(n);
    if (!(value.ring() == g.ring())) throw RingMismatch("lambda values over the wrong ring");
    if (value.is_zero()) {
      throw AssemblyError("lambda vanishes at support member n = " + std::to_string(n));
    }
    sampled.emplace(n, std::move(value));
  }
  for (const auto& [m, lm] : sampled) {
    for (const auto& [n, ln] : sampled) {
      if (m * n > sample_bound) break;
      auto it = sampled.find(m * n);
      if (it != sampled.end() && it->second != lm * ln) {
        throw AssemblyError("lambda is not completely multiplicative: lambda(" +
                            std::to_string(m * n) + ") != lambda(" + std::to_string(m) +
                            ") lambda(" + std::to_string(n) + ")");
      }
    }
  }
  return FESequence(std::make_shared<AssembledNode>(t, std::move(lambda), g));
}

// --- rational sequences ----------------------------------------------------

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

RationalSequence::RationalSequence(FESequence numerator, FESequence denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  require_same_shape(numerator_, denominator_, "rational_quotient");
  if (numerator_.support().is_all()) {
    throw std::invalid_argument("rational sequences need a finite prime set");
  }
}

RationalFunction RationalSequence::value_at(std::uint64_t n) const {
  if (!numerator_.in_support(n)) {
    const Ring& ring = numerator_.ring();
    return {Polynomial(ring), Polynomial::constant(ring.one())};
  }
  return {numerator_.eval(n), denominator_.eval(n)};
}

RationalSequence RationalSequence::inverse() const {
  return RationalSequence(denominator_, numerator_);
}

RationalSequence operator*(const RationalSequence& a, const RationalSequence& b) {
  return RationalSequence(product_sequence(a.numerator_, b.numerator_),
                          product_sequence(a.denominator_, b.denominator_));
}

bool RationalSequence::equals(const RationalSequence& other, std::uint64_t bound) const {
  require_same_shape(numerator_, other.numerator_, "RationalSequence::equals");
  for (std::uint64_t n : enumerate_semigroup(support(), bound)) {
    if (numerator_.eval(n) * other.denominator_.eval(n) !=
        other.numerator_.eval(n) * denominator_.eval(n)) {
      return false;
    }
  }
  return true;
}

RationalSequence rational_quotient(const FESequence& numerator, const FESequence& denominator) {
  return RationalSequence(numerator, denominator);
}

// --- additive --------------------------------------------------------------

Polynomial AdditiveSequence::eval(std::uint64_t n) const {
  return h_ * quantum_integer(n, h_.ring());
}

}  // namespace qfe
