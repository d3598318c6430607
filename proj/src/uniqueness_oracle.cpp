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

// Reconstructs the odd-index constraint system f_n(q) f_2(q^n) = f_2(q)
// f_n(q^2) with f_2 = 1 + a q and f_n = 1 + b_1 q + ... + b_{n-1} q^(n-1).
// The unknowns b_j are eliminated symbolically over Q[a]; what is left is a
// set of polynomial constraints on a alone, whose rational roots are found
// with the rational root theorem. Surviving families are checked against
// the full functional equation with plain coefficient vectors.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qfe/analyze.hpp"

namespace qfe {

namespace {

using Coeffs = std::vector<mpq_class>;

const Ring& rationals() {
  static const Ring ring(RingDescriptor::rational());
  return ring;
}

Polynomial constant_poly(long c) { return Polynomial::constant(rationals().from_integer(c)); }

// The polynomial a.
Polynomial var_a() { return Polynomial::monomial(rationals().one(), 1); }

// sum_j coeff_j(a) b_j + constant(a) = 0.
struct LinearForm {
  std::map<std::uint64_t, Polynomial> terms;
  Polynomial constant = Polynomial(rationals());

  // b_0 = 1 is folded into the constant.
  void add(std::uint64_t j, const Polynomial& c) {
    if (j == 0) {
      constant += c;
      return;
    }
    auto [it, inserted] = terms.try_emplace(j, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
};

// Coefficient of q^k in f_n(q) f_2(q^n) - f_2(q) f_n(q^2).
LinearForm equation(std::uint64_t n, std::uint64_t k) {
  LinearForm e;
  if (k < n) e.add(k, constant_poly(1));
  if (k >= n) e.add(k - n, var_a());
  if (k % 2 == 0) {
    e.add(k / 2, constant_poly(-1));
  } else {
    e.add((k - 1) / 2, -var_a());
  }
  return e;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.leading_coefficient().inverse();
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return out;
}

// Distinct rational roots, ascending. g must have a nonzero constant term.
std::vector<mpq_class> rational_roots(const Polynomial& g) {
  const auto coeffs = g.coefficients();
  mpz_class scale = 1;
  for (const auto& c : coeffs) scale = lcm(scale, c.rational().get_den());
  const mpz_class c0 = mpz_class(coeffs.front().rational() * scale);
  const mpz_class lead = mpz_class(coeffs.back().rational() * scale);
  std::set<mpq_class> roots;
  for (const auto& p : divisors(c0)) {
    for (const auto& q : divisors(lead)) {
      for (int sign : {1, -1}) {
        mpq_class x(sign * p, q);
        x.canonicalize();
        if (g.evaluate(rationals().from_rational(x)).is_zero()) roots.insert(x);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

Coeffs product(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Coeffs dilated(const Coeffs& a, std::uint64_t m) {
  Coeffs out((a.size() - 1) * m + 1);
  for (std::size_t i = 0; i < a.size(); ++i) out[i * m] = a[i];
  return out;
}

std::string coeff_string(const Coeffs& c) {
  std::vector<Scalar> s;
  for (const auto& x : c) s.push_back(rationals().from_rational(x));
  return to_string(Polynomial(rationals(), std::move(s)));
}

struct OddSystem {
  std::uint64_t n;
  std::map<std::uint64_t, Polynomial> solved;  // b_j as polynomials in a
};

}  // namespace

OracleResult uniqueness_oracle(std::uint64_t bound) {
  if (bound < 3) throw std::invalid_argument("uniqueness_oracle needs N >= 3");
  OracleResult result;
  result.bound = bound;
  auto& trace = result.trace;
  trace.push_back("f_2 = 1 + a q with a != 0 unknown");

  std::vector<OddSystem> systems;
  std::vector<Polynomial> constraints;
  for (std::uint64_t n = 3; n <= bound; n += 2) {
    OddSystem sys{n, {}};
    std::vector<std::pair<std::uint64_t, LinearForm>> pending;
    for (std::uint64_t k = 0; k <= 2 * n - 1; ++k) pending.emplace_back(k, equation(n, k));

    // Substitute known unknowns until no equation makes progress.
    bool progress = true;
    while (progress && !pending.empty()) {
      progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        LinearForm& e = it->second;
        for (auto t = e.terms.begin(); t != e.terms.end();) {
          if (auto s = sys.solved.find(t->first); s != sys.solved.end()) {
            e.constant += t->second * s->second;
            t = e.terms.erase(t);
          } else {
            ++t;
          }
        }
        if (e.terms.empty()) {
          if (!e.constant.is_zero()) {
            trace.push_back("n=" + std::to_string(n) + ", q^" + std::to_string(it->first) + ": " +
                            to_string(e.constant, "a") + " = 0");
            constraints.push_back(e.constant);
          }
          it = pending.erase(it);
          progress = true;
          continue;
        }
        if (e.terms.size() == 1 && e.terms.begin()->second.degree() == 0) {
          const auto& [j, c] = *e.terms.begin();
          Polynomial value = -(e.constant * c.leading_coefficient().inverse());
          trace.push_back("n=" + std::to_string(n) + ": b_" + std::to_string(j) + " = " +
                          to_string(value, "a"));
          sys.solved.emplace(j, std::move(value));
          it = pending.erase(it);
          progress = true;
          continue;
        }
        ++it;
      }
    }
    if (sys.solved.size() != n - 1) {
      trace.push_back("n=" + std::to_string(n) + ": unknowns left unresolved");
      result.underdetermined = true;
      return result;
    }
    systems.push_back(std::move(sys));
  }

  Polynomial g(rationals());
  for (const auto& c : constraints) g = gcd(g, c);
  if (g.is_zero()) {
    trace.push_back("no constraint on a");
    result.underdetermined = true;
    return result;
  }
  trace.push_back("gcd of constraints: " + to_string(g, "a"));
  const std::size_t v = valuation(g);
  if (v > 0) {
    g = divide(g, Polynomial::monomial(rationals().one(), v)).quotient;
    trace.push_back("a != 0 leaves " + to_string(g, "a"));
  }
  const std::vector<mpq_class> roots = rational_roots(g);
  if (roots.empty()) trace.push_back("no rational root");

  for (const mpq_class& a : roots) {
    const std::string label = "a = " + a.get_str();
    trace.push_back("candidate " + label);
    const Scalar at = rationals().from_rational(a);
    OracleFamily family{a, {}};
    family.members[1] = Coeffs{1};
    family.members[2] = Coeffs{1, a};
    bool ok = true;
    for (const auto& sys : systems) {
      Coeffs f(sys.n);
      f[0] = 1;
      for (const auto& [j, b] : sys.solved) f[j] = b.evaluate(at).rational();
      if (sgn(f.back()) == 0) {
        trace.push_back(label + " rejected: b_" + std::to_string(sys.n - 1) + " = 0 at n=" +
                        std::to_string(sys.n));
        ok = false;
        break;
      }
      family.members[sys.n] = std::move(f);
    }
    if (!ok) continue;
    for (std::uint64_t n = 4; n <= bound; n += 2) {
      family.members[n] = product(family.members.at(2), dilated(family.members.at(n / 2), 2));
    }
    for (std::uint64_t m = 2; m <= bound && ok; ++m) {
      for (std::uint64_t n = 2; m * n <= bound; ++n) {
        if (family.members.at(m * n) !=
            product(family.members.at(m), dilated(family.members.at(n), m))) {
          trace.push_back(label + " rejected: f_" + std::to_string(m * n) + " != f_" +
                          std::to_string(m) + "(q) f_" + std::to_string(n) + "(q^" +
                          std::to_string(m) + ")");
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    for (const auto& [n, f] : family.members) {
      trace.push_back(label + ": f_" + std::to_string(n) + " = " + coeff_string(f));
    }
    result.families.push_back(std::move(family));
  }
  trace.push_back(std::to_string(result.families.size()) + " famil" +
                  (result.families.size() == 1 ? "y" : "ies") + " found");
  return result;
}

}  // namespace qfe
