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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qfe::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qfe");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = fs::temp_directory_path() /
            ("qfe_cli_test_" + std::to_string(counter_++) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::vector<std::vector<std::string>> tsv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cell_in(line);
    std::string cell;
    while (std::getline(cell_in, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const std::string kData = QFE_DATA_DIR;

TEST(SeedSpecTest, DataFileMatchesBuiltin) {
  std::ifstream in(kData + "/seeds-257.json");
  std::stringstream buf;
  buf << in.rdbuf();
  const SeedSpec a = parse_seed_spec(buf.str());
  const SeedSpec b = parse_seed_spec(seeds_257_json());
  EXPECT_EQ(a.primes, b.primes);
  EXPECT_EQ(a.seeds, b.seeds);
  EXPECT_EQ(a.ring, RingDescriptor::rational());
}

TEST(SeedSpecTest, Malformed) {
  EXPECT_THROW(parse_seed_spec("{"), InputError);
  EXPECT_THROW(parse_seed_spec("[]"), InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":[2]})"), InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"real"},"primes":[2],"seeds":{}})"),
               InputError);
  EXPECT_THROW(
      parse_seed_spec(R"({"ring":{"kind":"prime_field","p":4},"primes":[2],"seeds":{"2":["1"]}})"),
      InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":[2],"seeds":{}})"),
               InputError);
  EXPECT_THROW(
      parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":[2],"seeds":{"2":["1"],"3":["1"]}})"),
      InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":[2],"seeds":{"2":["1","0"]}})"),
               InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":[2],"seeds":{"2":[]}})"),
               InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":[2],"seeds":{"2":["x"]}})"),
               InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":[4],"seeds":{}})"),
               InputError);
  EXPECT_THROW(parse_seed_spec(R"({"ring":{"kind":"rational"},"primes":"all","seeds":{}})"),
               InputError);
}

TEST(SeedSpecTest, CyclotomicCoordinates) {
  const SeedSpec spec = parse_seed_spec(
      R"({"ring":{"kind":"cyclotomic","d":4},"primes":[5],"seeds":{"5":["1",["0","1"],"-1",["0","-1"],"1"]}})");
  const FESequence f = build_from_spec(spec);
  const Ring ring(RingDescriptor::cyclotomic(4));
  EXPECT_EQ(f.eval(5), scaled_quantum_integer(5, ring.zeta()));
}

TEST(CliTest, ConstructSeedFile) {
  const CliRun r = run_cli({"construct", kData + "/seeds-257.json", "--upto", "10"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = tsv_rows(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "in_support", "degree", "polynomial"}));
  const Ring q(RingDescriptor::rational());
  const Polynomial q10 = quantum_integer(10, q);
  EXPECT_EQ(rows[10], (std::vector<std::string>{"10", "true", "18",
                                                to_string(exact_div(dilate(q10, 3), q10))}));
  EXPECT_EQ(rows[3], (std::vector<std::string>{"3", "false", "-", "0"}));
}

TEST(CliTest, ConstructPowersOfTwo) {
  TempFile spec(R"({"ring":{"kind":"rational"},"primes":[2],"seeds":{"2":["1","1"]}})");
  const CliRun r = run_cli({"construct", spec.path(), "--upto", "8"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = tsv_rows(r.out);
  ASSERT_EQ(rows.size(), 9u);
  const Ring q(RingDescriptor::rational());
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const bool power = n == 1 || n == 2 || n == 4 || n == 8;
    EXPECT_EQ(rows[n][3], power ? to_string(quantum_integer(n, q)) : "0") << n;
  }
}

TEST(CliTest, ConstructCommutativityFailure) {
  TempFile spec(
      R"({"ring":{"kind":"rational"},"primes":[2,3],"seeds":{"2":["1","1"],"3":["1","1","2"]}})");
  const CliRun r = run_cli({"construct", spec.path()});
  EXPECT_EQ(r.code, kCommutativityFailed);
  EXPECT_NE(r.err.find("1 + q + q^2 + q^3 + 2q^4 + 2q^5"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("1 + q + 2q^2 + q^3 + q^4 + 2q^5"), std::string::npos) << r.err;
}

TEST(CliTest, ConstructWritesOutFile) {
  const fs::path out = fs::temp_directory_path() / "qfe_cli_test_table.tsv";
  const CliRun r = run_cli({"construct", "quantum", "--upto", "4", "--out", out.string()});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(),
            "n\tin_support\tdegree\tpolynomial\n1\ttrue\t0\t1\n2\ttrue\t1\t1 + q\n"
            "3\ttrue\t2\t1 + q + q^2\n4\ttrue\t3\t1 + q + q^2 + q^3\n");
  fs::remove(out);
}

TEST(CliTest, MalformedInputs) {
  TempFile broken("{ not json");
  EXPECT_EQ(run_cli({"construct", broken.path()}).code, kMalformedInput);
  EXPECT_EQ(run_cli({"verify", "no-such-thing"}).code, kMalformedInput);
  EXPECT_EQ(run_cli({"verify", "quantum", "--upto", "1"}).code, kMalformedInput);
  EXPECT_EQ(run_cli({"verify", "quantum", "--upto", "999999"}).code, kMalformedInput);
  EXPECT_EQ(run_cli({"verify", "quantum", "--ring", "gfp:4"}).code, kMalformedInput);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kMalformedInput);
  EXPECT_EQ(run_cli({}).code, kMalformedInput);
  const CliRun conflict = run_cli({"verify", kData + "/seeds-257.json", "--ring", "gfp:2"});
  EXPECT_EQ(conflict.code, kMalformedInput);
  EXPECT_NE(conflict.err.find("conflicts"), std::string::npos);
}

TEST(CliTest, HelpExitsZero) {
  const CliRun r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("oracle"), std::string::npos);
}

TEST(CliTest, VerifyQuantum) {
  const CliRun r = run_cli({"verify", "quantum", "--upto", "64"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("fe_ok: true"), std::string::npos);
  EXPECT_NE(r.out.find("first_failure: none"), std::string::npos);
}

TEST(CliTest, VerifyConstantTwo) {
  const CliRun r = run_cli({"verify", "constant2", "--upto", "4"});
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_NE(r.out.find("commutativity_ok: true"), std::string::npos);
  EXPECT_NE(r.out.find("fe_ok: false"), std::string::npos);
  EXPECT_NE(r.out.find("functional_equation at (m, n) = (1, 1)"), std::string::npos);

  const CliRun j = run_cli({"verify", "constant2", "--upto", "4", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["fe_ok"], false);
  EXPECT_EQ(doc["commutativity_ok"], true);
  EXPECT_EQ(doc["first_failure"]["lhs"], "2");
  EXPECT_EQ(doc["first_failure"]["rhs"], "4");
  EXPECT_EQ(doc["first_failure"]["m"], 1);
}

TEST(CliTest, VerifySeedFileAndRings) {
  EXPECT_EQ(run_cli({"verify", kData + "/seeds-257.json", "--upto", "100"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", "quantum", "--ring", "gfp:3", "--upto", "30"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", "seeds-257", "--ring", "cyclotomic:5", "--upto", "30"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", "power7-third", "--upto", "400"}).code, kOk);
}

TEST(CliTest, Decompose) {
  const CliRun m = run_cli({"decompose", "monomial", "--upto", "20"});
  ASSERT_EQ(m.code, kOk);
  EXPECT_NE(m.out.find("t: 1\n"), std::string::npos);
  EXPECT_NE(m.out.find("\n20\t19\t1\t1\n"), std::string::npos);

  const CliRun p = run_cli({"decompose", "power7-third", "--upto", "400", "--json"});
  ASSERT_EQ(p.code, kOk);
  const auto doc = nlohmann::json::parse(p.out);
  EXPECT_EQ(doc["t"], "1/3");
  EXPECT_EQ(doc["delta"]["343"], 114);
  EXPECT_EQ(doc["lambda"]["49"], "1");

  const CliRun q = run_cli({"decompose", "quantum", "--json"});
  EXPECT_EQ(nlohmann::json::parse(q.out)["t"], "0/1");

  EXPECT_EQ(run_cli({"decompose", "constant2"}).code, kCheckFailed);
}

TEST(CliTest, Demos) {
  for (const auto& name : demo_names()) {
    const CliRun r = run_cli({"demo", name});
    EXPECT_EQ(r.code, kOk) << name << "\n" << r.out;
    EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos) << r.out;
  }
  EXPECT_EQ(run_cli({"demo", "nope"}).code, kMalformedInput);
}

TEST(CliTest, Oracle) {
  const CliRun r = run_cli({"oracle", "--upto", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("candidate a = 1"), std::string::npos);
  EXPECT_NE(r.out.find("a = 1: f_5 = 1 + q + q^2 + q^3 + q^4"), std::string::npos);
  EXPECT_NE(r.out.find("unique: yes"), std::string::npos);
  EXPECT_EQ(run_cli({"oracle", "--upto", "3"}).code, kOk);

  const CliRun j = run_cli({"oracle", "--upto", "12", "--json"});
  EXPECT_EQ(j.code, kOk);
  const auto doc = nlohmann::json::parse(j.out);
  ASSERT_EQ(doc["families"].size(), 1u);
  EXPECT_EQ(doc["families"][0]["a"], "1");
  EXPECT_EQ(doc["families"][0]["members"]["12"].size(), 12u);

  EXPECT_EQ(run_cli({"oracle", "--upto", "2"}).code, kMalformedInput);
  EXPECT_EQ(run_cli({"oracle", "--upto", "26"}).code, kMalformedInput);
}

TEST(CliTest, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "seeds-257", "--json"},
        std::vector<std::string>{"decompose", "monomial", "--json"},
        std::vector<std::string>{"construct", "seeds-257", "--upto", "30"}}) {
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
  // JSON keys come out sorted.
  const auto doc = run_cli({"verify", "quantum", "--json"}).out;
  EXPECT_LT(doc.find("\"bound\""), doc.find("\"commutativity_ok\""));
  EXPECT_LT(doc.find("\"fe_ok\""), doc.find("\"support_ok\""));
}

}  // namespace
}  // namespace qfe::cli
