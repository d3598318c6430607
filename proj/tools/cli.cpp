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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

namespace qfe::cli {

using nlohmann::json;

// --- seed files ------------------------------------------------------------

namespace {

std::uint64_t json_index(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw InputError(where + ": expected a positive integer");
  return j.get<std::uint64_t>();
}

RingDescriptor parse_ring_object(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InputError("/ring: expected an object with a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") return RingDescriptor::rational();
  if (kind == "prime_field") {
    if (!j.contains("p")) throw InputError("/ring: prime_field needs \"p\"");
    return RingDescriptor::prime_field(json_index(j["p"], "/ring/p"));
  }
  if (kind == "cyclotomic") {
    if (!j.contains("d")) throw InputError("/ring: cyclotomic needs \"d\"");
    return RingDescriptor::cyclotomic(json_index(j["d"], "/ring/d"));
  }
  throw InputError("/ring/kind: unknown ring kind '" + kind + "'");
}

Scalar parse_coefficient(const Ring& ring, const json& c, const std::string& where) {
  try {
    if (c.is_string()) return parse_scalar(ring, c.get<std::string>());
    if (c.is_array() && ring.kind() == RingKind::kCyclotomic) {
      std::vector<std::string> coords;
      for (const auto& x : c) {
        if (!x.is_string()) throw InputError(where + ": coordinates must be strings");
        coords.push_back(x.get<std::string>());
      }
      return parse_cyclotomic(ring, coords);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a scalar string");
}

Ring validated_ring(const RingDescriptor& d, const std::string& where) {
  try {
    return Ring(d);
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

SeedSpec parse_seed_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON syntax: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("/: expected an object");
  for (const char* key : {"ring", "primes", "seeds"}) {
    if (!doc.contains(key)) throw InputError(std::string("/: missing \"") + key + "\"");
  }

  SeedSpec spec;
  spec.ring = parse_ring_object(doc["ring"]);
  const Ring ring = validated_ring(spec.ring, "/ring");

  const json& primes = doc["primes"];
  if (primes.is_string() && primes.get<std::string>() == "all") {
    throw InputError("/primes: \"all\" has no finite seed set; use the builtin 'quantum'");
  }
  if (!primes.is_array()) throw InputError("/primes: expected an array or \"all\"");
  std::vector<std::uint64_t> ps;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    ps.push_back(json_index(primes[i], "/primes/" + std::to_string(i)));
  }
  try {
    spec.primes = PrimeSet(ps);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("/primes: ") + e.what());
  }

  const json& seeds = doc["seeds"];
  if (!seeds.is_object()) throw InputError("/seeds: expected an object");
  for (const auto& [key, coeffs] : seeds.items()) {
    const std::string where = "/seeds/" + key;
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError(where + ": key is not a prime number");
    }
    if (!spec.primes.has_prime(p)) {
      throw InputError(where + ": prime " + key + " is not listed in /primes");
    }
    if (!coeffs.is_array() || coeffs.empty()) {
      throw InputError(where + ": expected a nonempty coefficient array");
    }
    std::vector<json> entries(coeffs.begin(), coeffs.end());
    if (parse_coefficient(ring, entries.back(),
                          where + "/" + std::to_string(entries.size() - 1))
            .is_zero()) {
      throw InputError(where + ": last coefficient must be nonzero");
    }
    spec.seeds.emplace(p, std::move(entries));
  }
  for (std::uint64_t p : spec.primes.primes()) {
    if (!spec.seeds.contains(p)) throw InputError("/seeds: no seed for prime " + std::to_string(p));
  }
  return spec;
}

FESequence build_from_spec(const SeedSpec& spec) {
  const Ring ring = validated_ring(spec.ring, "/ring");
  SeedMap seeds;
  for (const auto& [p, entries] : spec.seeds) {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      coeffs.push_back(parse_coefficient(
          ring, entries[i], "/seeds/" + std::to_string(p) + "/" + std::to_string(i)));
    }
    seeds.emplace(p, Polynomial(ring, std::move(coeffs)));
  }
  return from_seeds(ring, spec.primes, seeds);
}

std::string seeds_257_json() {
  return R"({
  "ring": {"kind": "rational"},
  "primes": [2, 5, 7],
  "seeds": {
    "2": ["1", "-1", "1"],
    "5": ["1", "-1", "0", "1", "-1", "1", "0", "-1", "1"],
    "7": ["1", "-1", "0", "1", "-1", "0", "1", "0", "-1", "1", "0", "-1", "1"]
  }
}
)";
}

// --- builtins --------------------------------------------------------------

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"quantum",  "monomial",     "identity",
                                              "constant2", "power7-third", "seeds-257"};
  return names;
}

std::optional<FESequence> builtin_sequence(std::string_view name, const Ring& ring) {
  if (name == "quantum") return quantum_sequence(ring);
  if (name == "monomial") return monomial_sequence(ring);
  if (name == "identity") return identity_sequence(ring);
  if (name == "constant2") {
    const Polynomial two = Polynomial::constant(ring.from_integer(2));
    return FESequence::from_function(ring, PrimeSet::all(), [two](std::uint64_t) { return two; });
  }
  if (name == "power7-third") {
    return assemble(mpq_class(1, 3), [ring](std::uint64_t) { return ring.one(); },
                    identity_sequence(ring, PrimeSet{7}));
  }
  if (name == "seeds-257") {
    SeedSpec spec = parse_seed_spec(seeds_257_json());
    spec.ring = ring.descriptor();
    return build_from_spec(spec);
  }
  return std::nullopt;
}

// --- formatting ------------------------------------------------------------

std::string table_tsv(const FESequence& f, std::uint64_t upto) {
  std::string out = "n\tin_support\tdegree\tpolynomial\n";
  for (std::uint64_t n = 1; n <= upto; ++n) {
    const Polynomial& fn = f.eval(n);
    const auto deg = fn.degree();
    out += std::to_string(n) + "\t" + (f.in_support(n) ? "true" : "false") + "\t" +
           (deg ? std::to_string(*deg) : "-") + "\t" + to_string(fn) + "\n";
  }
  return out;
}

std::string rational_string(const mpq_class& t) {
  return t.get_num().get_str() + "/" + t.get_den().get_str();
}

namespace {

const char* kind_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::kFunctionalEquation:
      return "functional_equation";
    case FailureKind::kCommutativity:
      return "commutativity";
    case FailureKind::kSupport:
      return "support";
  }
  return "unknown";
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

void print_failure(std::ostream& out, const CheckFailure& f) {
  switch (f.kind) {
    case FailureKind::kFunctionalEquation:
      out << "first_failure: functional_equation at (m, n) = (" << f.m << ", " << f.n << ")\n"
          << "  f_" << f.m * f.n << ": " << f.lhs << "\n"
          << "  f_" << f.m << "(q) f_" << f.n << "(q^" << f.m << "): " << f.rhs << "\n";
      break;
    case FailureKind::kCommutativity:
      out << "first_failure: commutativity at (m, n) = (" << f.m << ", " << f.n << ")\n"
          << "  f_" << f.m << "(q) f_" << f.n << "(q^" << f.m << "): " << f.lhs << "\n"
          << "  f_" << f.n << "(q) f_" << f.m << "(q^" << f.n << "): " << f.rhs << "\n";
      break;
    case FailureKind::kSupport:
      out << "first_failure: support at n = " << f.n << "\n"
          << "  f_" << f.n << ": " << f.lhs << "\n";
      break;
  }
}

void print_report(std::ostream& out, const std::string& label, const FESequence& f,
                  const VerificationReport& r) {
  out << "sequence: " << label << "\n"
      << "ring: " << f.ring().descriptor().to_string() << "\n"
      << "support: " << f.support().to_string() << "\n"
      << "bound: " << r.bound << "\n"
      << "fe_ok: " << bool_string(r.fe_ok) << "\n"
      << "commutativity_ok: " << bool_string(r.commutativity_ok) << "\n"
      << "support_ok: " << bool_string(r.support_ok) << "\n";
  if (r.first_failure) {
    print_failure(out, *r.first_failure);
  } else {
    out << "first_failure: none\n";
  }
}

}  // namespace

json report_json(const VerificationReport& r) {
  json j;
  j["bound"] = r.bound;
  j["fe_ok"] = r.fe_ok;
  j["commutativity_ok"] = r.commutativity_ok;
  j["support_ok"] = r.support_ok;
  if (r.first_failure) {
    const CheckFailure& f = *r.first_failure;
    j["first_failure"] = {{"kind", kind_name(f.kind)},
                          {"m", f.m},
                          {"n", f.n},
                          {"lhs", to_string(f.lhs)},
                          {"rhs", to_string(f.rhs)}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

json decomposition_json(const Decomposition& d) {
  json j;
  j["bound"] = d.bound;
  j["t"] = rational_string(d.t);
  json delta = json::object(), lambda = json::object(), g = json::object();
  for (const auto& [n, v] : d.delta) delta[std::to_string(n)] = v;
  for (const auto& [n, l] : d.lambda) {
    lambda[std::to_string(n)] = l.to_string();
    g[std::to_string(n)] = to_string(d.g.eval(n));
  }
  j["delta"] = std::move(delta);
  j["lambda"] = std::move(lambda);
  j["g"] = std::move(g);
  return j;
}

json oracle_json(const OracleResult& result) {
  json j;
  j["bound"] = result.bound;
  j["underdetermined"] = result.underdetermined;
  j["unique"] = result.unique();
  json families = json::array();
  for (const auto& fam : result.families) {
    json members = json::object();
    for (const auto& [n, coeffs] : fam.members) {
      json cs = json::array();
      for (const auto& c : coeffs) cs.push_back(c.get_str());
      members[std::to_string(n)] = std::move(cs);
    }
    families.push_back({{"a", fam.a.get_str()}, {"members", std::move(members)}});
  }
  j["families"] = std::move(families);
  j["trace"] = result.trace;
  return j;
}

// --- demos -----------------------------------------------------------------

namespace {

class Narrative {
 public:
  explicit Narrative(std::ostream& out) : out_(out) {}

  void note(const std::string& text) { out_ << "  " << text << "\n"; }
  void check(bool ok, const std::string& text) {
    out_ << (ok ? "  [ok] " : "  [FAIL] ") << text << "\n";
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

bool same_values(const FESequence& a, const FESequence& b, std::uint64_t bound) {
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (a.eval(n) != b.eval(n)) return false;
  }
  return true;
}

void demo_seeds_257(Narrative& story) {
  const Ring q(RingDescriptor::rational());
  const SeedSpec spec = parse_seed_spec(seeds_257_json());
  const FESequence f = build_from_spec(spec);
  SeedMap seeds;
  for (std::uint64_t p : spec.primes.primes()) {
    story.note("h_" + std::to_string(p) + " = " + to_string(f.eval(p)));
    seeds.emplace(p, f.eval(p));
  }
  story.check(!check_seed_commutativity(seeds), "seeds pass the pairwise commutativity condition");

  bool closed_form = true;
  bool degrees = true;
  std::size_t count = 0;
  for (std::uint64_t n : enumerate_semigroup(spec.primes, 500)) {
    const Polynomial qn = quantum_integer(n, q);
    closed_form = closed_form && f.eval(n) == exact_div(dilate(qn, 3), qn);
    degrees = degrees && f.eval(n).degree() == 2 * (n - 1);
    ++count;
  }
  story.check(closed_form, "f_n = [n]_{q^3}/[n]_q for all " + std::to_string(count) +
                               " members of S(P) up to 500");
  story.check(degrees, "deg f_n = 2(n-1) on the same members");
  story.note("f_10 = " + to_string(f.eval(10)));
  story.check(verify_fe(f, 100).ok(), "functional equation holds for mn <= 100");

  const DeltaSolution t = infer_degree_t(f, 500);
  story.check(t.status == DeltaSolution::Status::kSolved && t.t == 2, "degree law t = 2");

  const Decomposition d = decompose(f, 100);
  bool unit = true;
  for (const auto& [n, l] : d.lambda) unit = unit && l.is_one();
  story.check(d.t == 0 && unit, "decomposition: t = 0, lambda = 1, g = f");

  const QuantumForcedReport forced = check_quantum_forced(f, 100);
  story.check(forced.outcome == QuantumForcedReport::Outcome::kHypothesisFailure,
              "not forced to [n]_q: " + forced.detail);
}

void demo_zeta(Narrative& story) {
  const Ring ring(RingDescriptor::cyclotomic(2));
  const Scalar zeta = ring.zeta();
  story.note("ring " + ring.descriptor().to_string() + ", zeta = " + zeta.to_string());
  story.check(zeta == ring.from_integer(-1), "zeta = -1");

  const PrimeSet p3{3};
  const FESequence f = zeta_scaled_sequence(p3, zeta);
  story.note("f_3 = " + to_string(f.eval(3)));
  story.check(verify_fe(f, 81).ok(), "[n]_{-q} on S({3}) satisfies the equation up to 81");
  const FESequence via_psi = psi_substitute_sequence(
      quantum_sequence(ring, p3), Polynomial::monomial(zeta, 1));
  story.check(same_values(f, via_psi, 81), "matches the substitution q -> -q");
  const ZetaAdmissibility good = zeta_admissibility(p3, zeta, 1000);
  story.check(good.admissible() && good.exhaustive && good.d == 2,
              "P = {3}: d = 2, zeta^d = 1, and zeta^(m-1) = 1 on S(P) up to 1000");

  const PrimeSet p2{2};
  bool refused = false;
  try {
    zeta_scaled_sequence(p2, zeta);
  } catch (const InadmissibleZeta& e) {
    refused = true;
    story.note(std::string("P = {2} refused: ") + e.what());
  }
  story.check(refused, "P = {2}: construction refused");
  const Polynomial f2 = scaled_quantum_integer(2, zeta);
  const Polynomial lhs = otimes(f2, f2, 2);
  const Polynomial rhs = scaled_quantum_integer(4, zeta);
  story.check(lhs != rhs, "f_2(q) f_2(q^2) = " + to_string(lhs) + " differs from [4]_{-q} = " +
                              to_string(rhs));
  const ZetaAdmissibility bad = zeta_admissibility(p2, zeta, 1000);
  story.check(!bad.admissible() && !bad.exhaustive && bad.counterexample == 2u,
              "P = {2}: zeta^1 != 1, first counterexample m = 2");
}

void demo_additive(Narrative& story) {
  const Ring q(RingDescriptor::rational());
  std::vector<Polynomial> quantum;
  for (std::uint64_t n = 1; n <= 200; ++n) quantum.push_back(quantum_integer(n, q));
  bool ok = true;
  for (std::uint64_t m = 1; m <= 100 && ok; ++m) {
    for (std::uint64_t n = 1; n <= 100 && ok; ++n) {
      ok = oplus(quantum[m - 1], quantum[n - 1], m) == quantum[m + n - 1];
    }
  }
  story.check(ok, "[m]_q + q^m [n]_q = [m+n]_q for m, n <= 100");
  const Polynomial h = Polynomial::from_integers(q, {1, 1});
  const AdditiveSequence f = additive_sequence(h);
  story.note("h = " + to_string(h) + ": f_1 = " + to_string(f.eval(1)) +
             ", f_2 = " + to_string(f.eval(2)));
  story.check(!check_additive(f, 60), "h(q)[n]_q is additive for m + n <= 60");
}

void demo_frobenius(Narrative& story) {
  const Ring gf2(RingDescriptor::prime_field(2));
  const Polynomial psi = Polynomial::from_integers(gf2, {1, 1, 0, 1});
  story.note("GF(2), psi = " + to_string(psi));
  story.check(pow(psi, 2) == dilate(psi, 2), "psi(q)^2 = psi(q^2) = " + to_string(dilate(psi, 2)));
  const FESequence f = psi_substitute_sequence(quantum_sequence(gf2, PrimeSet{2}), psi);
  story.note("f_4 = [4]_psi = " + to_string(f.eval(4)));
  story.check(verify_fe(f, 32).ok(), "substituted sequence satisfies the equation up to 32");
}

void demo_reciprocal(Narrative& story) {
  const Ring q(RingDescriptor::rational());
  story.check(same_values(reciprocal_sequence(monomial_sequence(q)), identity_sequence(q), 64),
              "reciprocal of q^(n-1) is 1, n <= 64");
  story.check(same_values(reciprocal_sequence(quantum_sequence(q)), quantum_sequence(q), 64),
              "[n]_q is self-reciprocal, n <= 64");
  const FESequence f = build_from_spec(parse_seed_spec(seeds_257_json()));
  const FESequence r = reciprocal_sequence(f);
  story.check(verify_fe(r, 100).ok(), "reciprocal of the {2,5,7} sequence satisfies the equation");
  story.check(same_values(reciprocal_sequence(r), f, 100), "reciprocal twice gives f back, n <= 100");
}

using DemoFn = void (*)(Narrative&);

const std::map<std::string, DemoFn>& demos() {
  static const std::map<std::string, DemoFn> table{
      {"seeds-257", demo_seeds_257},  {"zeta-neg1-p3", demo_zeta},
      {"additive", demo_additive},    {"frobenius-gf2", demo_frobenius},
      {"reciprocal", demo_reciprocal},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : demos()) out.push_back(name);
    return out;
  }();
  return names;
}

// --- commands --------------------------------------------------------------

namespace {

struct Source {
  std::string label;
  FESequence sequence;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Source resolve(const std::string& name, const std::string& ring_flag) {
  std::optional<RingDescriptor> flag;
  if (!ring_flag.empty()) {
    try {
      flag = Ring(RingDescriptor::parse(ring_flag)).descriptor();
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--ring: ") + e.what());
    }
  }
  const Ring ring(flag.value_or(RingDescriptor::rational()));
  if (auto builtin = builtin_sequence(name, ring)) return {name, *builtin};

  std::ifstream probe(name);
  if (!probe) throw InputError("'" + name + "' is neither a builtin nor a readable seed file");
  const SeedSpec spec = parse_seed_spec(read_file(name));
  if (flag && !(Ring(spec.ring).descriptor() == *flag)) {
    throw InputError("--ring " + ring_flag + " conflicts with the seed file ring " +
                     spec.ring.to_string());
  }
  return {name, build_from_spec(spec)};
}

int cmd_construct(const std::string& source, std::uint64_t upto, const std::string& out_path,
                  const std::string& ring, std::ostream& out) {
  const Source s = resolve(source, ring);
  const std::string table = table_tsv(s.sequence, upto);
  if (out_path.empty()) {
    out << table;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InputError("--out: cannot write '" + out_path + "'");
  file << table;
  return kOk;
}

int cmd_verify(const std::string& source, std::uint64_t upto, bool as_json,
               const std::string& ring, std::ostream& out) {
  const Source s = resolve(source, ring);
  const VerificationReport r = verify_fe(s.sequence, upto);
  if (as_json) {
    json j = report_json(r);
    j["sequence"] = s.label;
    j["ring"] = s.sequence.ring().descriptor().to_string();
    j["support"] = s.sequence.support().to_string();
    out << j.dump(2) << "\n";
  } else {
    print_report(out, s.label, s.sequence, r);
  }
  return r.fe_ok ? kOk : kCheckFailed;
}

int cmd_decompose(const std::string& source, std::uint64_t upto, bool as_json,
                  const std::string& ring, std::ostream& out, std::ostream& err) {
  const Source s = resolve(source, ring);
  const VerificationReport r = verify_fe(s.sequence, upto);
  if (!r.ok()) {
    err << "verification failed; not decomposing\n";
    print_report(err, s.label, s.sequence, r);
    return kCheckFailed;
  }
  const Decomposition d = decompose(s.sequence, upto);
  if (as_json) {
    json j = decomposition_json(d);
    j["sequence"] = s.label;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "sequence: " << s.label << "\n"
      << "bound: " << d.bound << "\n"
      << "t: " << d.t.get_str() << "\n"
      << "n\tdelta\tlambda\tg\n";
  for (const auto& [n, delta] : d.delta) {
    out << n << "\t" << delta << "\t" << d.lambda.at(n).to_string() << "\t" << d.g.eval(n)
        << "\n";
  }
  return kOk;
}

int cmd_demo(const std::string& name, std::ostream& out) {
  const auto& table = demos();
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown demo '" + name + "'");
  out << "demo " << name << "\n";
  Narrative story(out);
  it->second(story);
  out << (story.ok() ? "all checks passed" : "some checks FAILED") << "\n";
  return story.ok() ? kOk : kCheckFailed;
}

int cmd_oracle(std::uint64_t upto, bool as_json, std::ostream& out) {
  const OracleResult result = uniqueness_oracle(upto);
  if (as_json) {
    out << oracle_json(result).dump(2) << "\n";
  } else {
    for (const auto& line : result.trace) out << line << "\n";
    out << "families: " << result.families.size() << "\n"
        << "unique: " << (result.unique() ? "yes" : "no") << "\n";
  }
  return result.unique() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial solutions of f_mn(q) = f_m(q) f_n(q^m)", "qfe"};
  app.require_subcommand(1);

  std::string source, out_path, ring, demo_name;
  std::uint64_t upto_construct = 20, upto_verify = 64, upto_decompose = 64, upto_oracle = 12;
  bool as_json = false;

  std::string source_help = "builtin (";
  for (const auto& n : builtin_names()) source_help += (source_help.back() == '(' ? "" : ", ") + n;
  source_help += ") or seed file";

  auto* construct = app.add_subcommand("construct", "Print the table of f_1..f_N as TSV");
  construct->add_option("source", source, source_help)->required();
  construct->add_option("--upto", upto_construct, "Last index N")
      ->check(CLI::Range(std::uint64_t{1}, kMaxUpto));
  construct->add_option("--out", out_path, "Write the table here instead of stdout");
  construct->add_option("--ring", ring, "rational | gfp:p | cyclotomic:d (builtins)");

  auto* verify = app.add_subcommand("verify", "Check the functional equation up to N");
  verify->add_option("source", source, source_help)->required();
  verify->add_option("--upto", upto_verify, "Check pairs with mn <= N")
      ->check(CLI::Range(std::uint64_t{2}, kMaxUpto));
  verify->add_flag("--json", as_json, "JSON report");
  verify->add_option("--ring", ring, "rational | gfp:p | cyclotomic:d (builtins)");

  auto* decompose_cmd = app.add_subcommand("decompose", "f_n = lambda(n) q^(t(n-1)) g_n");
  decompose_cmd->add_option("source", source, source_help)->required();
  decompose_cmd->add_option("--upto", upto_decompose, "Tabulate n <= N")
      ->check(CLI::Range(std::uint64_t{2}, kMaxUpto));
  decompose_cmd->add_flag("--json", as_json, "JSON report");
  decompose_cmd->add_option("--ring", ring, "rational | gfp:p | cyclotomic:d (builtins)");

  auto* demo = app.add_subcommand("demo", "Run a worked example");
  demo->add_option("name", demo_name, "One of: " + [] {
    std::string s;
    for (const auto& n : demo_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();

  auto* oracle = app.add_subcommand("oracle", "Solve the odd-index constraint system");
  oracle->add_option("--upto", upto_oracle, "Largest index N")
      ->check(CLI::Range(kMinOracle, kMaxOracle));
  oracle->add_flag("--json", as_json, "JSON report");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (*construct) return cmd_construct(source, upto_construct, out_path, ring, out);
    if (*verify) return cmd_verify(source, upto_verify, as_json, ring, out);
    if (*decompose_cmd) return cmd_decompose(source, upto_decompose, as_json, ring, out, err);
    if (*demo) return cmd_demo(demo_name, out);
    if (*oracle) return cmd_oracle(upto_oracle, as_json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const CommutativityError& e) {
    const CommutativityFailure& f = e.failure();
    err << "error: seeds for p = " << f.p1 << " and p = " << f.p2 << " do not commute\n"
        << "  h_" << f.p1 << "(q) h_" << f.p2 << "(q^" << f.p1 << ") = " << f.lhs << "\n"
        << "  h_" << f.p2 << "(q) h_" << f.p1 << "(q^" << f.p2 << ") = " << f.rhs << "\n";
    return kCommutativityFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace qfe::cli
