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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "test_util.hpp"

namespace qfe {
namespace {

using testing::IntPoly;
using testing::lift;

const Ring kQ(RingDescriptor::rational());

Polynomial P(std::initializer_list<long> c) { return Polynomial::from_integers(kQ, c); }

SeedMap seeds_257() {
  SeedMap s;
  s.emplace(2, P({1, -1, 1}));
  s.emplace(5, P({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  s.emplace(7, P({1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1}));
  return s;
}

FESequence sequence_257() { return from_seeds(kQ, PrimeSet{2, 5, 7}, seeds_257()); }

// f_mn = f_m(q) f_n(q^m) for mn <= bound, checked with raw products.
::testing::AssertionResult satisfies_fe(const FESequence& f, std::uint64_t bound) {
  for (std::uint64_t m = 1; m <= bound; ++m)
    for (std::uint64_t n = 1; m * n <= bound; ++n)
      if (f.eval(m * n) != f.eval(m) * dilate(f.eval(n), m))
        return ::testing::AssertionFailure() << "fails at (" << m << ", " << n << ")";
  return ::testing::AssertionSuccess();
}

bool same_values(const FESequence& a, const FESequence& b, std::uint64_t bound) {
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (a.eval(n) != b.eval(n)) return false;
  return true;
}

TEST(OperatorTest, Otimes) {
  EXPECT_EQ(otimes(quantum_integer(2, kQ), quantum_integer(3, kQ), 2), quantum_integer(6, kQ));
  EXPECT_EQ(otimes(P({0, 1}), P({0, 0, 1}), 2), P({0, 0, 0, 0, 0, 1}));
  const Polynomial f = P({3, 0, -1});
  EXPECT_EQ(otimes(P({1}), f, 1), f);
}

TEST(OperatorTest, Oplus) {
  EXPECT_EQ(oplus(quantum_integer(2, kQ), quantum_integer(3, kQ), 2), quantum_integer(5, kQ));
  const Polynomial f = P({2, 1});
  EXPECT_EQ(oplus(f, Polynomial(kQ), 4), f);
  // (1 + q) + q (1 + q), expanded by the reference arithmetic.
  const IntPoly h{1, 1};
  EXPECT_EQ(oplus(lift(kQ, h), lift(kQ, h), 1), lift(kQ, testing::add(h, testing::shift(h, 1))));
  EXPECT_EQ(oplus(lift(kQ, h), lift(kQ, h), 1), P({1, 2, 1}));
}

TEST(BuiltinSequenceTest, Quantum) {
  EXPECT_EQ(quantum_sequence(kQ).eval(6), quantum_integer(6, kQ));
  EXPECT_TRUE(quantum_sequence(kQ, PrimeSet{2, 5, 7}).eval(3).is_zero());
  EXPECT_EQ(quantum_sequence(kQ).eval(1), P({1}));
  EXPECT_THROW(quantum_sequence(kQ).eval(0), std::invalid_argument);
  EXPECT_TRUE(satisfies_fe(quantum_sequence(kQ), 64));
}

TEST(BuiltinSequenceTest, Monomial) {
  const FESequence f = monomial_sequence(kQ);
  EXPECT_EQ(f.eval(1), P({1}));
  EXPECT_EQ(f.eval(4), P({0, 0, 0, 1}));
  EXPECT_EQ(otimes(f.eval(2), f.eval(3), 2), f.eval(6));
  EXPECT_EQ(f.eval(6), Polynomial::monomial(kQ.one(), 5));
  EXPECT_TRUE(satisfies_fe(f, 64));
}

TEST(BuiltinSequenceTest, Identity) {
  const FESequence id = identity_sequence(kQ, PrimeSet{2});
  EXPECT_EQ(id.eval(1), P({1}));
  EXPECT_TRUE(id.eval(3).is_zero());
  const FESequence f = quantum_sequence(kQ, PrimeSet{2});
  EXPECT_TRUE(same_values(product_sequence(id, f), f, 64));
}

TEST(SeedTest, CommutativityCheck) {
  EXPECT_FALSE(check_seed_commutativity(seeds_257()));
  SeedMap single;
  single.emplace(3, P({5, 0, 1}));
  EXPECT_FALSE(check_seed_commutativity(single));

  SeedMap bad;
  bad.emplace(2, P({1, 1}));
  bad.emplace(3, P({1, 1, 2}));
  const auto failure = check_seed_commutativity(bad);
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->p1, 2u);
  EXPECT_EQ(failure->p2, 3u);
  // Both sides expanded by the reference arithmetic, then against the
  // hand expansion.
  EXPECT_EQ(failure->lhs, lift(kQ, testing::mul({1, 1}, testing::dil({1, 1, 2}, 2))));
  EXPECT_EQ(failure->rhs, lift(kQ, testing::mul({1, 1, 2}, testing::dil({1, 1}, 3))));
  EXPECT_EQ(failure->lhs, P({1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(failure->rhs, P({1, 1, 2, 1, 1, 2}));
  EXPECT_NE(failure->lhs.coefficient(2), failure->rhs.coefficient(2));

  SeedMap zero;
  zero.emplace(2, Polynomial(kQ));
  EXPECT_THROW(check_seed_commutativity(zero), std::invalid_argument);
  SeedMap composite;
  composite.emplace(4, P({1}));
  EXPECT_THROW(check_seed_commutativity(composite), std::invalid_argument);
}

TEST(SeedTest, Sequence257) {
  const FESequence f = sequence_257();
  const Polynomial q10 = quantum_integer(10, kQ);
  EXPECT_EQ(f.eval(10), exact_div(dilate(q10, 3), q10));
  EXPECT_EQ(f.eval(10).degree(), 18u);
  EXPECT_TRUE(f.eval(3).is_zero());
  EXPECT_TRUE(f.eval(33).is_zero());
  EXPECT_TRUE(satisfies_fe(f, 200));
}

TEST(SeedTest, SinglePrimeSquares) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    SeedMap s;
    s.emplace(p, quantum_integer(p, kQ));
    const FESequence f = from_seeds(kQ, PrimeSet{p}, s);
    // one application of f_{p^2} = f_p(q) f_p(q^p), by hand
    EXPECT_EQ(f.eval(p * p), quantum_integer(p, kQ) * dilate(quantum_integer(p, kQ), p));
    EXPECT_EQ(f.eval(p * p), quantum_integer(p * p, kQ));
    EXPECT_EQ(f.eval(p * p * p), quantum_integer(p * p * p, kQ));
  }
}

TEST(SeedTest, Errors) {
  SeedMap bad;
  bad.emplace(2, P({1, 1}));
  bad.emplace(3, P({1, 1, 2}));
  try {
    from_seeds(kQ, PrimeSet{2, 3}, bad);
    FAIL() << "expected CommutativityError";
  } catch (const CommutativityError& e) {
    EXPECT_EQ(e.failure().p1, 2u);
    EXPECT_EQ(e.failure().p2, 3u);
  }
  EXPECT_THROW(from_seeds(kQ, PrimeSet{2}, seeds_257()), std::invalid_argument);
  EXPECT_THROW(from_seeds(kQ, PrimeSet{2, 3, 5, 7}, seeds_257()), std::invalid_argument);
  EXPECT_THROW(from_seeds(kQ, PrimeSet::all(), seeds_257()), std::invalid_argument);
}

// Values computed through every other factor split agree with the canonical
// largest-prime-last evaluation.
TEST(SeedTest, ConstructionOrderIndependence) {
  const FESequence f = sequence_257();
  for (std::uint64_t n : enumerate_semigroup(PrimeSet{2, 5, 7}, 400)) {
    for (const auto& [p, e] : factorize(n).factors) {
      // smallest-first style split: f_n = f_p(q) f_{n/p}(q^p)
      ASSERT_EQ(f.eval(n), f.eval(p) * dilate(f.eval(n / p), p)) << n;
      // and the mirrored split f_n = f_{n/p}(q) f_p(q^{n/p})
      ASSERT_EQ(f.eval(n), f.eval(n / p) * dilate(f.eval(p), n / p)) << n;
    }
  }
  // Memoization order does not matter either.
  std::vector<std::uint64_t> order = enumerate_semigroup(PrimeSet{2, 5, 7}, 400);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    const FESequence fresh = sequence_257();
    for (std::uint64_t n : order) ASSERT_EQ(fresh.eval(n), f.eval(n));
  }
}

// Seeds read off any known solution reproduce it.
TEST(SeedTest, SeedsDetermineTheSolution) {
  std::mt19937_64 rng(17);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11};
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t p : primes)
      if (rng() % 2) chosen.push_back(p);
    if (chosen.empty()) chosen.push_back(3);
    const PrimeSet set(chosen);
    const std::uint64_t t = 1 + rng() % 3;
    const FESequence known = product_sequence(dilate_sequence(quantum_sequence(kQ, set), t),
                                              monomial_sequence(kQ, set));
    SeedMap seeds;
    for (std::uint64_t p : chosen) seeds.emplace(p, known.eval(p));
    ASSERT_TRUE(same_values(from_seeds(kQ, set, seeds), known, 150)) << set.to_string();
  }
}

TEST(ZetaTest, NegativeOneOverThree) {
  const Ring c2(RingDescriptor::cyclotomic(2));
  const FESequence f = zeta_scaled_sequence(PrimeSet{3}, c2.from_integer(-1));
  EXPECT_EQ(f.eval(3), lift(c2, {1, -1, 1}));
  // (1 - q + q^2)(1 - q^3 + q^6)
  const IntPoly f9 = testing::mul({1, -1, 1}, testing::dil({1, -1, 1}, 3));
  EXPECT_EQ(f9, (IntPoly{1, -1, 1, -1, 1, -1, 1, -1, 1}));
  EXPECT_EQ(f.eval(9), lift(c2, f9));
  EXPECT_TRUE(f.eval(2).is_zero());
  EXPECT_TRUE(satisfies_fe(f, 81));
}

TEST(ZetaTest, OneGivesQuantum) {
  for (const PrimeSet& p : {PrimeSet{2}, PrimeSet{3, 5}, PrimeSet{2, 5, 7}}) {
    EXPECT_TRUE(same_values(zeta_scaled_sequence(p, kQ.one()), quantum_sequence(kQ, p), 100));
  }
}

TEST(ZetaTest, Refusal) {
  const Ring c2(RingDescriptor::cyclotomic(2));
  const Scalar minus_one = c2.from_integer(-1);
  EXPECT_THROW(zeta_scaled_sequence(PrimeSet{2}, minus_one), InadmissibleZeta);
  EXPECT_THROW(zeta_scaled_sequence(PrimeSet{3}, c2.zero()), std::invalid_argument);
  // The refused candidate really fails: f_2(q) f_2(q^2) != [4]_{-q}.
  const IntPoly f2{1, -1};
  EXPECT_EQ(testing::mul(f2, testing::dil(f2, 2)), (IntPoly{1, -1, -1, 1}));
  EXPECT_NE(lift(c2, {1, -1, -1, 1}), scaled_quantum_integer(4, minus_one));
  EXPECT_EQ(scaled_quantum_integer(4, minus_one), lift(c2, {1, -1, 1, -1}));
}

TEST(ZetaTest, FourthRootOfUnity) {
  // d = gcd{4, 12} = 4
  const Ring c4(RingDescriptor::cyclotomic(4));
  const FESequence f = zeta_scaled_sequence(PrimeSet{5, 13}, c4.zeta());
  EXPECT_TRUE(satisfies_fe(f, 400));
  EXPECT_THROW(zeta_scaled_sequence(PrimeSet{3, 5}, c4.zeta()), InadmissibleZeta);
}

TEST(TransformTest, Dilate) {
  for (std::uint64_t t : {1, 2, 3}) {
    const FESequence f = dilate_sequence(quantum_sequence(kQ), t);
    for (std::uint64_t n = 1; n <= 20; ++n)
      ASSERT_EQ(f.eval(n), dilate(quantum_integer(n, kQ), t));
    EXPECT_TRUE(satisfies_fe(f, 48));
  }
  EXPECT_EQ(dilate_sequence(monomial_sequence(kQ), 2).eval(3), P({0, 0, 0, 0, 1}));
  EXPECT_THROW(dilate_sequence(quantum_sequence(kQ), 0), std::invalid_argument);
}

TEST(TransformTest, PsiSubstitution) {
  const FESequence f = sequence_257();
  EXPECT_TRUE(same_values(psi_substitute_sequence(f, P({0, 0, 1})), dilate_sequence(f, 2), 60));

  const Ring f2(RingDescriptor::prime_field(2));
  const FESequence frob = psi_substitute_sequence(quantum_sequence(f2, PrimeSet{2}),
                                                  Polynomial::from_integers(f2, {1, 1, 0, 1}));
  EXPECT_TRUE(satisfies_fe(frob, 32));

  const Ring c2(RingDescriptor::cyclotomic(2));
  const FESequence via_psi = psi_substitute_sequence(quantum_sequence(c2, PrimeSet{3}),
                                                     Polynomial::monomial(c2.zeta(), 1));
  EXPECT_TRUE(
      same_values(via_psi, zeta_scaled_sequence(PrimeSet{3}, c2.from_integer(-1)), 81));

  try {
    psi_substitute_sequence(quantum_sequence(kQ, PrimeSet{2}), P({1, 1}));
    FAIL() << "expected SubstitutionError";
  } catch (const SubstitutionError& e) {
    EXPECT_EQ(e.prime(), 2u);
    EXPECT_EQ(e.lhs(), P({1, 2, 1}));
    EXPECT_EQ(e.rhs(), P({1, 0, 1}));
  }
  EXPECT_NO_THROW(psi_substitute_sequence(quantum_sequence(kQ), P({0, 0, 0, 1})));
  EXPECT_THROW(psi_substitute_sequence(quantum_sequence(kQ), P({1, 1})), std::invalid_argument);
  EXPECT_THROW(psi_substitute_sequence(quantum_sequence(kQ), P({0, 2})), std::invalid_argument);
}

TEST(TransformTest, Reciprocal) {
  EXPECT_TRUE(same_values(reciprocal_sequence(monomial_sequence(kQ)), identity_sequence(kQ), 64));
  EXPECT_TRUE(same_values(reciprocal_sequence(quantum_sequence(kQ)), quantum_sequence(kQ), 64));
  const FESequence f = sequence_257();
  EXPECT_TRUE(same_values(reciprocal_sequence(reciprocal_sequence(f)), f, 100));
  EXPECT_TRUE(satisfies_fe(reciprocal_sequence(f), 100));
  EXPECT_TRUE(satisfies_fe(reciprocal_sequence(monomial_sequence(kQ, PrimeSet{3})), 81));
}

TEST(ProductTest, Examples) {
  const FESequence sq = product_sequence(quantum_sequence(kQ), quantum_sequence(kQ));
  EXPECT_EQ(sq.eval(3), lift(kQ, testing::mul({1, 1, 1}, {1, 1, 1})));
  EXPECT_EQ(sq.eval(3), P({1, 2, 3, 2, 1}));
  // f_2 f_3(q^2) = f_6 by the reference arithmetic
  const IntPoly f2 = testing::mul({1, 1}, {1, 1});
  const IntPoly f3 = testing::mul({1, 1, 1}, {1, 1, 1});
  const IntPoly f6 = testing::mul(testing::ones(6), testing::ones(6));
  EXPECT_EQ(testing::mul(f2, testing::dil(f3, 2)), f6);
  EXPECT_TRUE(satisfies_fe(sq, 64));

  const FESequence mq = product_sequence(monomial_sequence(kQ), quantum_sequence(kQ));
  for (std::uint64_t n = 1; n <= 20; ++n)
    ASSERT_EQ(mq.eval(n), Polynomial::monomial(kQ.one(), n - 1) * quantum_integer(n, kQ));

  EXPECT_THROW(product_sequence(quantum_sequence(kQ, PrimeSet{2}), quantum_sequence(kQ)),
               std::invalid_argument);
  const Ring f2r(RingDescriptor::prime_field(2));
  EXPECT_THROW(product_sequence(quantum_sequence(kQ), quantum_sequence(f2r)), RingMismatch);
}

TEST(ProductTest, Cancellation) {
  const PrimeSet s{2, 3};
  const FESequence f = quantum_sequence(kQ, s);
  const FESequence g = monomial_sequence(kQ, s);
  const FESequence recovered = cancel_sequence(product_sequence(f, g), f);
  EXPECT_TRUE(same_values(recovered, g, 100));
  EXPECT_TRUE(satisfies_fe(recovered, 100));
  const FESequence not_a_factor = cancel_sequence(f, dilate_sequence(f, 2));
  EXPECT_THROW(not_a_factor.eval(2), NotDivisible);
}

TEST(RationalSequenceTest, Equality) {
  const PrimeSet s{2, 3};
  const FESequence f = quantum_sequence(kQ, s);
  const FESequence g = monomial_sequence(kQ, s);
  const FESequence h = dilate_sequence(quantum_sequence(kQ, s), 2);
  const FESequence id = identity_sequence(kQ, s);
  EXPECT_TRUE(rational_quotient(f, f).equals(rational_quotient(id, id), 100));
  EXPECT_TRUE(rational_quotient(product_sequence(f, h), product_sequence(g, h))
                  .equals(rational_quotient(f, g), 100));
  EXPECT_FALSE(rational_quotient(f, g).equals(rational_quotient(g, f), 100));
  const RationalSequence fg = rational_quotient(f, g);
  EXPECT_TRUE((fg * fg.inverse()).equals(rational_quotient(id, id), 100));
}

TEST(RationalSequenceTest, Values) {
  const PrimeSet s{2};
  const RationalSequence r =
      rational_quotient(quantum_sequence(kQ, s), monomial_sequence(kQ, s));
  EXPECT_EQ(r.value_at(2), (RationalFunction{P({1, 1}), P({0, 1})}));
  EXPECT_EQ(r.value_at(2), (RationalFunction{P({2, 2}), P({0, 2})}));
  EXPECT_TRUE(r.value_at(3).numerator.is_zero());
  EXPECT_THROW(rational_quotient(quantum_sequence(kQ, s), monomial_sequence(kQ, PrimeSet{3})),
               std::invalid_argument);
  EXPECT_THROW(rational_quotient(quantum_sequence(kQ), monomial_sequence(kQ)),
               std::invalid_argument);
}

TEST(AssembleTest, Examples) {
  const auto one = [](std::uint64_t) { return kQ.one(); };
  const FESequence f = assemble(mpq_class(1), one, quantum_sequence(kQ));
  for (std::uint64_t n = 1; n <= 20; ++n)
    ASSERT_EQ(f.eval(n), Polynomial::monomial(kQ.one(), n - 1) * quantum_integer(n, kQ));
  // f_m f_n(q^m) = f_mn for m, n <= 20 using the reference arithmetic
  auto ref = [](std::uint64_t n) { return testing::shift(testing::ones(n), n - 1); };
  for (std::uint64_t m = 1; m <= 20; ++m)
    for (std::uint64_t n = 1; n <= 20; ++n)
      ASSERT_EQ(testing::mul(ref(m), testing::dil(ref(n), m)), ref(m * n));

  const FESequence g = sequence_257();
  EXPECT_TRUE(same_values(assemble(mpq_class(0), one, g), g, 100));

  const FESequence p7 = assemble(mpq_class(1, 3), one, identity_sequence(kQ, PrimeSet{7}));
  std::uint64_t power = 1;
  for (int k = 0; k <= 5; ++k, power *= 7)
    EXPECT_EQ(p7.eval(power), Polynomial::monomial(kQ.one(), (power - 1) / 3));
}

TEST(AssembleTest, Errors) {
  const auto one = [](std::uint64_t) { return kQ.one(); };
  EXPECT_THROW(assemble(mpq_class(1, 2), one, identity_sequence(kQ, PrimeSet{2})), AssemblyError);
  EXPECT_THROW(assemble(mpq_class(1, 3), one, identity_sequence(kQ)), AssemblyError);
  EXPECT_THROW(
      assemble(mpq_class(0), [](std::uint64_t n) { return kQ.from_integer(long(n) + 1); },
               quantum_sequence(kQ)),
      AssemblyError);
  EXPECT_THROW(assemble(mpq_class(0), [](std::uint64_t) { return kQ.zero(); },
                        quantum_sequence(kQ)),
               AssemblyError);
  EXPECT_THROW(assemble(mpq_class(-1), one, quantum_sequence(kQ)), std::invalid_argument);
  // Sampling stops at the bound; evaluation re-checks integrality.
  const FESequence late = assemble(mpq_class(1, 3), one, identity_sequence(kQ, PrimeSet{2, 7}), 1);
  EXPECT_THROW(late.eval(2), AssemblyError);
}

TEST(AdditiveTest, Examples) {
  const AdditiveSequence q = additive_sequence(P({1}));
  EXPECT_EQ(oplus(q.eval(2), q.eval(3), 2), q.eval(5));
  const AdditiveSequence zero = additive_sequence(Polynomial(kQ));
  EXPECT_TRUE(zero.eval(7).is_zero());
  const AdditiveSequence h = additive_sequence(P({1, 1}));
  EXPECT_EQ(h.eval(2), P({1, 2, 1}));
  EXPECT_EQ(h.eval(2), oplus(h.eval(1), h.eval(1), 1));
}

TEST(InvariantTest, SupportLawAndUnit) {
  std::mt19937_64 rng(23);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t p : primes)
      if (rng() % 2) chosen.push_back(p);
    const PrimeSet s(chosen);
    const std::vector<FESequence> all{quantum_sequence(kQ, s), monomial_sequence(kQ, s),
                                      identity_sequence(kQ, s),
                                      reciprocal_sequence(quantum_sequence(kQ, s))};
    for (const FESequence& f : all) {
      ASSERT_EQ(f.eval(1), P({1}));
      for (std::uint64_t n = 1; n <= 120; ++n) ASSERT_EQ(!f.eval(n).is_zero(), in_semigroup(n, s));
    }
  }
}

TEST(MemoTest, WriteOnceAndCounted) {
  const FESequence f = sequence_257();
  EXPECT_EQ(f.cached_count(), 0u);
  const Polynomial* first = &f.eval(20);
  EXPECT_EQ(&f.eval(20), first);
  EXPECT_GE(f.cached_count(), 1u);
  EXPECT_TRUE(f.eval(3).is_zero());
}

TEST(MemoTest, ConcurrentEvaluation) {
  const std::vector<std::uint64_t> members = enumerate_semigroup(PrimeSet{2, 5, 7}, 2000);
  const FESequence reference = sequence_257();
  std::vector<Polynomial> expected;
  for (std::uint64_t n : members) expected.push_back(reference.eval(n));

  for (int round = 0; round < 3; ++round) {
    const FESequence shared = sequence_257();
    std::vector<std::vector<Polynomial>> seen(6);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t) {
      threads.emplace_back([&, t] {
        std::vector<std::size_t> order(members.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), std::mt19937_64(t + 100 * round));
        std::vector<Polynomial> values(members.size(), Polynomial(kQ));
        for (std::size_t i : order) values[i] = shared.eval(members[i]);
        seen[t] = std::move(values);
      });
    }
    for (auto& th : threads) th.join();
    for (const auto& values : seen)
      for (std::size_t i = 0; i < members.size(); ++i) ASSERT_EQ(values[i], expected[i]);
  }
}

}  // namespace
}  // namespace qfe
