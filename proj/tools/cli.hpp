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

#ifndef QFE_TOOLS_CLI_HPP_
#define QFE_TOOLS_CLI_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qfe/analyze.hpp"
#include "qfe/feseq.hpp"

namespace qfe::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kMalformedInput = 2,
  kCommutativityFailed = 3,
};

inline constexpr std::uint64_t kMaxUpto = 5000;
inline constexpr std::uint64_t kMinOracle = 3;
inline constexpr std::uint64_t kMaxOracle = 25;

// Bad user input; the message names the location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A seed file. Each coefficient is a scalar string, or for cyclotomic rings
// optionally an array of phi(d) coordinate strings.
struct SeedSpec {
  RingDescriptor ring = RingDescriptor::rational();
  PrimeSet primes;
  std::map<std::uint64_t, std::vector<nlohmann::json>> seeds;
};

// Throws InputError.
SeedSpec parse_seed_spec(std::string_view text);

// Throws InputError for unparsable coefficients, CommutativityError when the
// seeds fail the pairwise condition.
FESequence build_from_spec(const SeedSpec& spec);

// quantum, monomial, identity, constant2, power7-third, seeds-257.
const std::vector<std::string>& builtin_names();
std::optional<FESequence> builtin_sequence(std::string_view name, const Ring& ring);

// Seeds printed for the P = {2, 5, 7} example, as a seed file.
std::string seeds_257_json();

// Header "n\tin_support\tdegree\tpolynomial", then one row per n = 1..upto.
std::string table_tsv(const FESequence& f, std::uint64_t upto);

std::string rational_string(const mpq_class& t);  // always "num/den"
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json decomposition_json(const Decomposition& d);
nlohmann::json oracle_json(const OracleResult& result);

const std::vector<std::string>& demo_names();

// Entry point; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfe::cli

#endif  // QFE_TOOLS_CLI_HPP_
