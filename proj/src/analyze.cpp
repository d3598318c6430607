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

#include "qfe/analyze.hpp"

#include <stdexcept>

namespace qfe {

namespace {

// Support members n <= bound, ascending.
std::vector<std::uint64_t> members_upto(const FESequence& f, std::uint64_t bound) {
  if (!f.support().is_all()) return enumerate_semigroup(f.support(), bound);
  std::vector<std::uint64_t> out(bound);
  for (std::uint64_t n = 1; n <= bound; ++n) out[n - 1] = n;
  return out;
}

mpq_class to_mpq(std::uint64_t v) { return mpq_class(mpz_class(std::to_string(v))); }

}  // namespace

VerificationReport verify_fe(const FESequence& f, std::uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("verify_fe needs bound >= 2");
  VerificationReport report;
  report.bound = bound;
  std::optional<CheckFailure> first_comm;
  std::optional<CheckFailure> first_support;

  for (std::uint64_t m = 1; m <= bound; ++m) {
    const Polynomial& fm = f.eval(m);
    for (std::uint64_t n = 1; m * n <= bound; ++n) {
      const Polynomial& fn = f.eval(n);
      Polynomial mn = otimes(fm, fn, m);
      if (report.fe_ok && f.eval(m * n) != mn) {
        report.fe_ok = false;
        report.first_failure = CheckFailure{FailureKind::kFunctionalEquation, m, n, f.eval(m * n), mn};
      }
      if (report.commutativity_ok && m < n) {
        Polynomial nm = otimes(fn, fm, n);
        if (mn != nm) {
          report.commutativity_ok = false;
          first_comm = CheckFailure{FailureKind::kCommutativity, m, n, std::move(mn), std::move(nm)};
        }
      }
    }
  }

  const bool zero_sequence = f.eval(1).is_zero();
  for (std::uint64_t n = 1; n <= bound && report.support_ok; ++n) {
    const bool expected = !zero_sequence && f.in_support(n);
    if (f.eval(n).is_zero() == expected) {
      report.support_ok = false;
      first_support = CheckFailure{FailureKind::kSupport, n, n, f.eval(n), Polynomial(f.ring())};
    }
  }

  if (!report.first_failure) report.first_failure = first_comm ? first_comm : first_support;
  return report;
}

std::optional<CheckFailure> check_commutativity(const FESequence& f, std::uint64_t max_index) {
  for (std::uint64_t m = 1; m <= max_index; ++m) {
    for (std::uint64_t n = m + 1; n <= max_index; ++n) {
      Polynomial lhs = otimes(f.eval(m), f.eval(n), m);
      Polynomial rhs = otimes(f.eval(n), f.eval(m), n);
      if (lhs != rhs) {
        return CheckFailure{FailureKind::kCommutativity, m, n, std::move(lhs), std::move(rhs)};
      }
    }
  }
  return std::nullopt;
}

DeltaSolution solve_delta(const std::map<std::uint64_t, mpq_class>& table) {
  DeltaSolution out;
  if (auto it = table.find(1); it != table.end() && sgn(it->second) != 0) {
    out.status = DeltaSolution::Status::kInconsistent;
    out.witness = std::make_pair(1, 1);
    return out;
  }
  auto anchor = table.upper_bound(1);
  if (anchor == table.end()) return out;
  out.t = anchor->second / to_mpq(anchor->first - 1);
  for (auto it = std::next(anchor); it != table.end(); ++it) {
    if (it->second != out.t * to_mpq(it->first - 1)) {
      out.status = DeltaSolution::Status::kInconsistent;
      out.witness = std::make_pair(anchor->first, it->first);
      return out;
    }
  }
  out.status = DeltaSolution::Status::kSolved;
  return out;
}

DeltaSolution infer_degree_t(const FESequence& f, std::uint64_t bound) {
  std::map<std::uint64_t, mpq_class> table;
  for (std::uint64_t n : members_upto(f, bound)) {
    if (auto d = f.eval(n).degree()) table.emplace(n, to_mpq(*d));
  }
  return solve_delta(table);
}

Scalar Decomposition::lambda_at(std::uint64_t n) const {
  if (auto it = lambda.find(n); it != lambda.end()) return it->second;
  if (!g.in_support(n)) return g.ring().zero();
  Scalar value = g.ring().one();
  for (const auto& [p, e] : factorize(n).factors) {
    auto it = lambda.find(p);
    if (it == lambda.end()) {
      throw std::out_of_range("lambda(" + std::to_string(n) + ") needs untabulated lambda(" +
                              std::to_string(p) + ")");
    }
    value *= it->second.pow(e);
  }
  return value;
}

Decomposition decompose(const FESequence& f, std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("decompose needs bound >= 1");
  if (f.eval(1).is_zero()) throw DecompositionError("cannot decompose the zero sequence");
  const std::vector<std::uint64_t> members = members_upto(f, bound);

  std::map<std::uint64_t, std::uint64_t> delta;
  std::map<std::uint64_t, Scalar> lambda;
  std::map<std::uint64_t, mpq_class> delta_table;
  for (std::uint64_t n : members) {
    const Polynomial& fn = f.eval(n);
    if (fn.is_zero()) {
      throw DecompositionError("f_" + std::to_string(n) + " vanishes on the support");
    }
    const std::size_t v = valuation(fn);
    delta.emplace(n, v);
    lambda.emplace(n, fn.coefficients()[v]);
    delta_table.emplace(n, to_mpq(v));
  }

  const DeltaSolution solution = solve_delta(delta_table);
  if (solution.status == DeltaSolution::Status::kInconsistent) {
    const auto [a, b] = *solution.witness;
    throw DecompositionError("valuations are not t(n-1): delta(" + std::to_string(a) + ") = " +
                             std::to_string(delta.at(a)) + ", delta(" + std::to_string(b) +
                             ") = " + std::to_string(delta.at(b)));
  }

  for (std::uint64_t m : members) {
    for (std::uint64_t n : members) {
      if (m * n > bound) break;
      auto it = lambda.find(m * n);
      if (it == lambda.end()) continue;
      if (it->second != lambda.at(m) * lambda.at(n)) {
        throw DecompositionError("lambda is not completely multiplicative at (" +
                                 std::to_string(m) + ", " + std::to_string(n) + ")");
      }
    }
  }

  return Decomposition{bound, solution.t, std::move(delta), std::move(lambda),
                       normalized_sequence(f)};
}

FESequence assemble(const Decomposition& d) {
  return assemble(
      d.t, [d](std::uint64_t n) { return d.lambda_at(n); }, d.g, d.bound);
}

QuantumForcedReport check_quantum_forced(const FESequence& f, std::uint64_t bound) {
  using Outcome = QuantumForcedReport::Outcome;
  QuantumForcedReport report;
  if (f.eval(1).is_zero()) {
    report.detail = "the zero sequence";
    return report;
  }
  const std::vector<std::uint64_t> members = members_upto(f, bound);
  for (std::uint64_t n : members) {
    const auto deg = f.eval(n).degree();
    if (!deg || *deg != n - 1) {
      report.detail = "deg f_" + std::to_string(n) + " = " +
                      (deg ? std::to_string(*deg) : std::string("-inf")) +
                      " != " + std::to_string(n - 1);
      report.witness = n;
      return report;
    }
  }
  for (std::uint64_t n : members) {
    const Scalar c = f.eval(n).constant_term();
    if (!c.is_one()) {
      report.detail = "f_" + std::to_string(n) + "(0) = " + c.to_string() + " != 1";
      report.witness = n;
      return report;
    }
  }
  if (bound < 2 || !f.in_support(2)) {
    report.detail = "2 is not a support member within the bound";
    return report;
  }
  bool has_odd = false;
  for (std::uint64_t n : members) has_odd = has_odd || (n > 1 && n % 2 == 1);
  if (!has_odd) {
    report.detail = "no odd support member > 1 within the bound";
    return report;
  }
  for (std::uint64_t n : members) {
    if (f.eval(n) != quantum_integer(n, f.ring())) {
      report.outcome = Outcome::kContradiction;
      report.detail = "hypotheses hold but f_" + std::to_string(n) + " = " +
                      to_string(f.eval(n)) + " is not [" + std::to_string(n) + "]_q";
      report.witness = n;
      return report;
    }
  }
  report.outcome = Outcome::kConfirmed;
  report.detail = "f_n = [n]_q for all " + std::to_string(members.size()) +
                  " support members n <= " + std::to_string(bound);
  return report;
}

ZetaAdmissibility zeta_admissibility(const PrimeSet& primes, const Scalar& zeta,
                                     std::uint64_t bound) {
  if (zeta.is_zero()) throw std::invalid_argument("zeta must be nonzero");
  if (primes.is_all() || primes.empty()) {
    throw std::invalid_argument("zeta_admissibility needs a finite nonempty prime set");
  }
  if (bound < primes.primes().back()) {
    throw std::invalid_argument("zeta_admissibility needs bound >= max(P)");
  }
  ZetaAdmissibility out;
  out.d = seed_gcd(primes);
  out.algebraic = zeta.pow(out.d).is_one();
  out.exhaustive = true;
  for (std::uint64_t m : enumerate_semigroup(primes, bound)) {
    if (!zeta.pow(m - 1).is_one()) {
      out.exhaustive = false;
      out.counterexample = m;
      break;
    }
  }
  if (out.algebraic != out.exhaustive) {
    throw std::logic_error("zeta admissibility verdicts disagree for " + zeta.to_string() +
                           " over " + primes.to_string());
  }
  return out;
}

std::optional<AdditiveFailure> check_additive(const AdditiveSequence& f, std::uint64_t bound) {
  for (std::uint64_t m = 1; m < bound; ++m) {
    const Polynomial fm = f.eval(m);
    for (std::uint64_t n = 1; m + n <= bound; ++n) {
      Polynomial lhs = f.eval(m + n);
      Polynomial rhs = oplus(fm, f.eval(n), m);
      if (lhs != rhs) return AdditiveFailure{m, n, std::move(lhs), std::move(rhs)};
    }
  }
  return std::nullopt;
}

}  // namespace qfe
