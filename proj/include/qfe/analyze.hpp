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

#ifndef QFE_ANALYZE_HPP_
#define QFE_ANALYZE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfe/error.hpp"
#include "qfe/feseq.hpp"
#include "qfe/poly.hpp"

namespace qfe {

enum class FailureKind { kFunctionalEquation, kCommutativity, kSupport };

// A counterexample found by a checker.
//   kFunctionalEquation: lhs = f_{mn},            rhs = f_m(q) f_n(q^m)
//   kCommutativity:      lhs = f_m(q) f_n(q^m),   rhs = f_n(q) f_m(q^n)
//   kSupport:            m = n = the index,       lhs = f_n, rhs = 0; f_n
//                        is nonzero off the support or zero on it
struct CheckFailure {
  FailureKind kind;
  std::uint64_t m;
  std::uint64_t n;
  Polynomial lhs;
  Polynomial rhs;
};

struct VerificationReport {
  std::uint64_t bound = 0;
  bool fe_ok = true;
  bool commutativity_ok = true;
  bool support_ok = true;
  // The first failure in the order FE, commutativity, support; pairs are
  // scanned by ascending m, then n.
  std::optional<CheckFailure> first_failure;

  bool ok() const { return fe_ok && commutativity_ok && support_ok; }
};

// Checks f_{mn} = f_m(q) f_n(q^m) and the commutativity identity for every
// pair with mn <= bound, and that the nonzero indices up to bound are exactly
// the declared support (or none, for the zero sequence). Throws
// std::invalid_argument for bound < 2.
VerificationReport verify_fe(const FESequence& f, std::uint64_t bound);

// Commutativity alone, over the square 1 <= m < n <= max_index.
std::optional<CheckFailure> check_commutativity(const FESequence& f, std::uint64_t max_index);

struct DeltaSolution {
  enum class Status { kSolved, kInconsistent, kUndetermined };

  Status status = Status::kUndetermined;
  mpq_class t;
  // kInconsistent: (anchor, m) with delta(m)/(m-1) != delta(anchor)/(anchor-1).
  // An entry delta(1) != 0 is reported as (1, 1).
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

// Solves delta(n) = t (n - 1) for t, anchored at the smallest tabulated
// n >= 2.
DeltaSolution solve_delta(const std::map<std::uint64_t, mpq_class>& table);

// solve_delta over the degrees of the nonzero f_n, n <= bound.
DeltaSolution infer_degree_t(const FESequence& f, std::uint64_t bound);

class DecompositionError : public Error {
 public:
  using Error::Error;
};

// f_n = lambda(n) q^(t(n-1)) g_n(q) with g_n(0) = 1, tabulated on the
// support members n <= bound.
struct Decomposition {
  std::uint64_t bound = 0;
  mpq_class t;
  std::map<std::uint64_t, std::uint64_t> delta;
  std::map<std::uint64_t, Scalar> lambda;
  FESequence g;

  // Tabulated value; otherwise 0 off the support, or the product over the
  // prime factorization when every prime factor is tabulated. Throws
  // std::out_of_range if neither applies.
  Scalar lambda_at(std::uint64_t n) const;
};

// Throws DecompositionError when F is zero, when the valuations are not of
// the form t(n-1), or when lambda is not completely multiplicative on the
// tabulated pairs. t is 0 when no support member in [2, bound] exists.
Decomposition decompose(const FESequence& f, std::uint64_t bound);

// The inverse of decompose: lambda(n) q^(t(n-1)) g_n.
FESequence assemble(const Decomposition& d);

struct QuantumForcedReport {
  enum class Outcome {
    kConfirmed,
    // A hypothesis does not hold; nothing is claimed.
    kHypothesisFailure,
    // Hypotheses hold up to the bound but some f_n != [n]_q. Impossible for
    // a genuine solution.
    kContradiction,
  };

  Outcome outcome = Outcome::kHypothesisFailure;
  std::string detail;
  std::optional<std::uint64_t> witness;
};

// Hypotheses, checked in order on the support members n <= bound:
// deg f_n = n - 1, f_n(0) = 1, 2 in the support, an odd member > 1.
QuantumForcedReport check_quantum_forced(const FESequence& f, std::uint64_t bound);

struct ZetaAdmissibility {
  std::uint64_t d = 0;
  // zeta^d = 1.
  bool algebraic = false;
  // zeta^(m-1) = 1 for every m in S(P), m <= bound.
  bool exhaustive = false;
  // Smallest m with zeta^(m-1) != 1.
  std::optional<std::uint64_t> counterexample;

  bool admissible() const { return algebraic; }
};

// Both verdicts, which agree whenever bound >= max(P); that is required.
// Throws std::invalid_argument for zeta = 0, an empty or infinite P, or a
// bound below max(P), and std::logic_error if the verdicts ever disagree.
ZetaAdmissibility zeta_admissibility(const PrimeSet& primes, const Scalar& zeta,
                                     std::uint64_t bound);

struct AdditiveFailure {
  std::uint64_t m;
  std::uint64_t n;
  Polynomial lhs;  // f_{m+n}
  Polynomial rhs;  // f_m + q^m f_n
};

// f_{m+n} = f_m + q^m f_n for all m, n >= 1 with m + n <= bound.
std::optional<AdditiveFailure> check_additive(const AdditiveSequence& f, std::uint64_t bound);

// Result of reconstructing every rational solution with f_2 = 1 + a q,
// deg f_n = n - 1 and f_n(0) = 1 on 1..N from the constraints
// f_n(q) f_2(q^n) = f_2(q) f_n(q^2), n odd.
struct OracleFamily {
  mpq_class a;
  // n -> ascending coefficients of f_n, for n = 1..N.
  std::map<std::uint64_t, std::vector<mpq_class>> members;
};

struct OracleResult {
  std::uint64_t bound = 0;
  // The constraint system had a free parameter; families is then empty.
  bool underdetermined = false;
  std::vector<OracleFamily> families;
  // Human-readable derivation, one step per line.
  std::vector<std::string> trace;

  bool unique() const { return !underdetermined && families.size() == 1; }
};

// Throws std::invalid_argument for bound < 3.
OracleResult uniqueness_oracle(std::uint64_t bound);

}  // namespace qfe

#endif  // QFE_ANALYZE_HPP_
