/*
   Copyright 2026 The reciprodick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reciprodick/cli.hpp"
#include "reciprodick/json_io.hpp"

using namespace reciprodick;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("poly JSON round trip") {
  const Poly a(Ring::prime_field(5), {1, 0, 2});
  const Json j = poly_to_json(a);
  CHECK(j.dump() == R"({"ring":"Fp","p":5,"coeffs":["1","0","2"]})");
  CHECK(poly_from_json(j) == a);
  Integer huge;
  huge.set_str("123456789012345678901234567890", 10);
  const Poly b(Ring::integers(), {huge, -3});
  CHECK(poly_from_json(Json::parse(poly_to_json(b).dump())) == b);
  CHECK_THROWS(poly_from_json(Json::parse(R"({"ring":"Fp","p":4,"coeffs":["1"]})")));
  CHECK_THROWS(poly_from_json(Json::parse(R"({"ring":"Z","coeffs":["x1"]})")));
}

TEST_CASE("family spec JSON round trip") {
  const FamilySpec s{Family::D, 7, -2, 3, Ring::prime_field(11)};
  CHECK(family_spec_from_json(family_spec_to_json(s)) == s);
  const FamilySpec t{Family::hstar, 9, 4, 1, Ring::integers()};
  CHECK(family_spec_from_json(family_spec_to_json(t)) == t);
}

TEST_CASE("every generated polynomial round-trips") {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= 4; ++k) {
      for (const Ring ring : {Ring::integers(), Ring::prime_field(5)}) {
        const Poly f = f_family(n, k, ring);
        CHECK(poly_from_json(Json::parse(poly_to_json(f).dump())) == f);
      }
    }
  }
}

TEST_CASE("verdict JSON field order") {
  Verdict v;
  v.theorem = TheoremId::T3_1;
  v.spec = FamilySpec{Family::f, 6, 2, 1, Ring::prime_field(3)};
  v.match = true;
  CHECK(verdict_to_json(v).dump() ==
        R"({"theorem":"T3_1","family":"f","n":6,"k":2,"p":3,"predicted":false,"observed":false,"match":true})");
}

TEST_CASE("cli gen") {
  const Result r = run({"gen", "--family", "f", "--n", "4", "--k", "0", "--ring", "z"});
  CHECK(r.code == cli::kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 1);
  CHECK(out[0]["coeffs"] == Json::array({"2", "12", "2"}));
  const Result csv = run({"gen", "--family", "f", "--n", "4", "--k", "0", "--format", "csv"});
  CHECK(csv.out == "family,n,k,p,coeffs\nf,4,0,,2 12 2\n");
  const Result range = run({"gen", "--family", "g", "--n-max", "6", "--k", "1"});
  CHECK(lines(range.out).size() == 3);
}

TEST_CASE("cli verify") {
  const Result ok = run({"verify", "--theorem", "t2.1", "--n-max", "200", "--k-min", "-5", "--k-max", "6"});
  CHECK(ok.code == cli::kExitOk);
  const auto summary = lines(ok.out);
  REQUIRE(summary.size() == 1);
  CHECK(summary[0]["mismatches"] == 0);
  CHECK(summary[0]["checked"] == 1200);

  const Result bad = run({"verify", "--theorem", "t2.3", "--n-max", "4"});
  CHECK(bad.code == cli::kExitMismatch);
  const auto records = lines(bad.out);
  REQUIRE(records.size() > 1);
  bool saw_n4 = false;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    CHECK(records[i]["match"] == false);
    saw_n4 = saw_n4 || records[i]["n"] == 4;
  }
  CHECK(saw_n4);
  CHECK(records.back()["summary"] == "T2_3");
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"table", "--theorem", "t3.4", "--n-max", "41"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli errors") {
  CHECK(run({"verify", "--theorem", "t9.9"}).code == cli::kExitError);
  CHECK(run({"gen", "--bogus"}).code == cli::kExitError);
  CHECK(run({"gen", "--n", "4", "--ring", "fp", "--p", "9"}).code == cli::kExitError);
  CHECK(run({"gen", "--family", "g", "--n", "5", "--k", "0"}).code == cli::kExitError);
  CHECK(run({"verify", "--n-min", "9", "--n-max", "3", "--theorem", "t2.1"}).code == cli::kExitError);
  CHECK(run({}).code == cli::kExitError);
  const Result help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
}

TEST_CASE("cli classify, coterm, code") {
  const auto c = lines(run({"classify", "--family", "f", "--n", "10", "--k", "2"}).out);
  REQUIRE(c.size() == 1);
  CHECK(c[0]["self_reciprocal"] == true);
  CHECK(c[0]["predictions"][0]["theorem"] == "T2_1");

  const Result t = run({"coterm", "--theorem", "t5.9", "--n", "9", "--p", "3"});
  CHECK(t.code == cli::kExitOk);
  const auto tl = lines(t.out);
  REQUIRE(tl.size() == 1);
  CHECK(tl[0]["degenerate"] == true);
  CHECK(tl[0]["coeffs"] == Json::array({"1"}));

  const Result code = run({"code", "--p", "2", "--m", "7"});
  CHECK(code.code == cli::kExitOk);
  CHECK(lines(code.out).size() == 1 + 4);
  const Result all = run({"code", "--p", "3", "--m", "4", "--divisors", "all"});
  CHECK(all.code == cli::kExitOk);
}

TEST_CASE("cli --out") {
  const auto path = std::filesystem::temp_directory_path() / "reciprodick_cli_out.jsonl";
  const Result r = run({"gen", "--n", "4", "--k", "0", "--out", path.string()});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(Json::parse(line)["coeffs"] == Json::array({"2", "12", "2"}));
  std::filesystem::remove(path);
}
