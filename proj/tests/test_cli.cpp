// Copyright 2026 The richelot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using namespace richelot;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string input(const std::string& name) { return std::string(RICHELOT_INPUTS_DIR) + "/" + name; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("examples reproduce their golden reports") {
  for (const std::string& name : cli::example_names()) {
    CAPTURE(name);
    CHECK(cli::unified_diff(cli::golden(name), cli::example_report(name), "golden", "actual").empty());
    CHECK_FALSE(has(cli::example_report(name), "[MISMATCH]"));
  }
  const Outcome all = call({"examples", "all"});
  CHECK(all.code == cli::kExitOk);
  CHECK_FALSE(has(all.out, "golden: MISMATCH"));
}

TEST_CASE("unified diff") {
  CHECK(cli::unified_diff("a\nb\nc\n", "a\nb\nc\n", "x", "y").empty());
  const std::string d = cli::unified_diff("a\nb\nc\n", "a\nB\nc\n", "golden", "actual");
  CHECK(has(d, "--- golden"));
  CHECK(has(d, "+++ actual"));
  CHECK(has(d, "-b"));
  CHECK(has(d, "+B"));
}

TEST_CASE("analyze") {
  const Outcome a = call({"analyze", input("example5_2.json"), "--format", "json"});
  CHECK(a.code == cli::kExitOk);
  CHECK(has(a.out, "\"DECOMPOSED\""));
  CHECK(a.out == call({"analyze", input("example5_2.json"), "--format", "json"}).out);

  const Outcome g = call({"analyze", input("generic_sextic.json"), "--format", "text"});
  CHECK(g.code == cli::kExitOk);
  CHECK(has(g.out, "NO-DECOMPOSITION-FOUND"));

  const Outcome s = call({"analyze", input("singular.json")});
  CHECK(s.code == cli::kExitInvalid);
  CHECK(has(s.err, "NotSquarefree"));
}

TEST_CASE("howe") {
  const Outcome h = call({"howe", input("example5_5.json"), "--format", "text"});
  CHECK(h.code == cli::kExitOk);
  const Outcome j = call({"howe", input("example5_4.json"), "--format", "json"});
  CHECK(j.code == cli::kExitOk);
  CHECK(has(j.out, "\"schema_version\""));
  const Outcome d = call({"howe", input("duplicate_points.json")});
  CHECK(d.code == cli::kExitInvalid);
  CHECK(has(d.err, "DuplicatePoints"));
}

TEST_CASE("cartier") {
  const Outcome c = call({"cartier", input("x5_plus_1.json"), "--primes", "11,19,29", "--format", "csv"});
  CHECK(c.code == cli::kExitOk);
  CHECK(c.out == "p,p_mod_4,p_mod_8,p_mod_5,is_superspecial\n11,3,3,1,false\n19,3,3,4,true\n29,1,5,4,true\n");
  CHECK(call({"cartier", input("x8_minus_1.json")}).code == cli::kExitOk);
  CHECK(call({"cartier", input("x5_plus_1.json"), "--primes", "4"}).code == cli::kExitInvalid);
}

TEST_CASE("invalid invocations") {
  CHECK(call({}).code == cli::kExitInvalid);
  CHECK(call({"analyze"}).code == cli::kExitInvalid);
  CHECK(call({"analyze", input("missing.json")}).code == cli::kExitInvalid);
  CHECK(call({"analyze", input("example5_2.json"), "--format", "yaml"}).code == cli::kExitInvalid);
  CHECK(call({"examples", "9.9"}).code == cli::kExitInvalid);
  CHECK(call({"frobnicate"}).code == cli::kExitInvalid);
}

TEST_CASE("prime lists") {
  CHECK(cli::parse_primes("7-20") == std::vector<std::uint32_t>{7, 11, 13, 17, 19});
  CHECK(cli::parse_primes("7,17,23") == std::vector<std::uint32_t>{7, 17, 23});
}
