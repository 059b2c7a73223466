/*
 * Copyright (c) 2026, The rendezvous authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace fs = std::filesystem;
using rendezvous::cli::runCli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rendezvous");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = runCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "rendezvous_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = RENDEZVOUS_TEST_DATA;

}  // namespace

TEST_CASE("cli run: non-rigid three-color run gathers") {
  const fs::path out = scratch("alg3.trace.jsonl");
  Result r = cli({"run", "alg3-fcomm-3", "--pos", "0", "1", "--ssynch-random", "--seed", "7",
                  "--rounds", "200", "--nonrigid", "--delta", "1/10", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("GatheredStable") != std::string::npos);
  CHECK(fs::exists(out));
  CHECK(cli({"replay", out.string()}).code == 0);
}

TEST_CASE("cli run: class-L adversary yields a witness") {
  const fs::path out = scratch("thm1.trace.jsonl");
  Result r = cli({"run", "classL:A=1/2,A", "--thm1", "--pos", "0", "1", "--out", out.string()});
  CHECK(r.code == 3);
  CHECK(r.out.find("NonGatheringWitness") != std::string::npos);
  CHECK(cli({"replay", out.string()}).code == 3);
}

TEST_CASE("cli run: configuration errors exit 1") {
  CHECK(cli({"run", "alg1-fstate-6", "--asynch-random", "--seed", "1"}).code == 1);
  CHECK(cli({"run", "alg1-fstate-6", "--ssynch-random"}).code == 1);
  CHECK(cli({"run", "alg4-fstate-delta-3", "--lockstep"}).code == 1);
  CHECK(cli({"run", "alg1-fstate-6", "--pos", "0", "0.5", "--lockstep"}).code == 1);
  CHECK(cli({"run", "alg1-fstate-6", "--lockstep", "--thm1"}).code == 1);
  CHECK(cli({"run", "nope", "--lockstep"}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({}).code == 1);
}

TEST_CASE("cli run: budget exhaustion exits 2") {
  const fs::path out = scratch("budget.trace.jsonl");
  CHECK(cli({"run", "alg2-fcomm-12", "--pos", "0", "3", "--asynch-random", "--seed", "2",
             "--events", "5", "--out", out.string()})
            .code == 2);
}

TEST_CASE("cli run: scripted timelines") {
  const fs::path out = scratch("script.trace.jsonl");
  Result r = cli({"run", "alg2-fcomm-12", "--pos", "0", "3", "--asynch-script",
                  kData + "/alg2/equal_units.timeline", "--events", "1000", "--out",
                  out.string()});
  CHECK(r.code == 0);
  CHECK(cli({"replay", out.string()}).code == 0);
}

TEST_CASE("cli replay detects a tampered trace") {
  const fs::path out = scratch("tamper.trace.jsonl");
  REQUIRE(cli({"run", "alg1-fstate-6", "--pos", "0", "5", "--units", "1", "3/2", "--ssynch-random",
               "--seed", "4", "--out", out.string()})
              .code == 0);
  std::string text = slurp(out);
  // move S in the first logged world
  const std::string needle = "\"position\":\"5/1\"";
  auto at = text.find(needle, text.find("\"type\":\"entry\""));
  REQUIRE(at != std::string::npos);
  text.replace(at, needle.size(), "\"position\":\"6/1\"");
  std::ofstream(out) << text;
  CHECK(cli({"replay", out.string()}).code == 4);
  CHECK(cli({"replay", scratch("missing.jsonl").string()}).code == 1);
}

TEST_CASE("cli fuzz") {
  const fs::path csv = scratch("fuzz.csv");
  Result r = cli({"fuzz", "alg1-fstate-6", "--trials", "5", "--seed", "10", "--csv", csv.string()});
  CHECK(r.code == 0);
  const std::string first = slurp(csv);
  CHECK(first.rfind("seed,initial_dist,rounds_to_gather,verdict\n", 0) == 0);
  CHECK(std::count(first.begin(), first.end(), '\n') == 6);
  CHECK(cli({"fuzz", "alg1-fstate-6", "--trials", "5", "--seed", "10", "--csv", csv.string()})
            .code == 0);
  CHECK(slurp(csv) == first);
  CHECK(cli({"fuzz", "alg1-fstate-6", "--trials", "0", "--seed", "1"}).code == 1);
  CHECK(cli({"fuzz", "alg1-fstate-6", "--trials", "3"}).code == 1);
  CHECK(cli({"fuzz", "alg1-fstate-6", "--asynch-random", "--trials", "3", "--seed", "1"}).code == 1);
  Result async = cli({"fuzz", "alg5-fcomm-delta-3", "--asynch-random", "--nonrigid", "--delta",
                      "1/4", "--trials", "3", "--seed", "1", "--events", "20000"});
  CHECK(async.code == 0);
  CHECK(async.out.rfind("seed,initial_dist,events_to_gather,verdict\n", 0) == 0);
}

TEST_CASE("cli lemmas") {
  const fs::path empty = scratch("empty.manifest");
  std::ofstream(empty) << "# nothing\n";
  Result e = cli({"lemmas", "--manifest", empty.string()});
  CHECK(e.code == 0);
  CHECK(e.out.find("\"claims\": []") != std::string::npos);

  const fs::path mutant = scratch("mutant.manifest");
  std::ofstream(mutant) << "l4 claim S_finish S_3 [0,1] [0,1/4) 8 -\n";
  const fs::path cex = scratch("cex");
  fs::remove_all(cex);
  Result m = cli({"lemmas", "--manifest", mutant.string(), "--counterexamples", cex.string()});
  CHECK(m.code == 3);
  CHECK(fs::exists(cex / "l4.trace.jsonl"));
  CHECK(cli({"replay", (cex / "l4.trace.jsonl").string()}).code == 3);

  const fs::path cyclic = scratch("cyclic.manifest");
  std::ofstream(cyclic) << "a claim S_1 S_1 [0,1] [0,1] 8 b\nb claim S_1 S_1 [0,1] [0,1] 8 a\n";
  CHECK(cli({"lemmas", "--manifest", cyclic.string()}).code == 1);
  CHECK(cli({"lemmas", "--manifest", scratch("absent.manifest").string()}).code == 1);
}

TEST_CASE("cli enumerate and adversary") {
  Result e = cli({"enumerate", "alg3-fcomm-3", "--dist", "1", "1/3", "--delta", "1/2",
                  "--depth", "0"});
  CHECK(e.code == 0);
  CHECK(e.out.find("fair_cycles 0") != std::string::npos);
  CHECK(cli({"enumerate", "classL:A=0,A", "--dist", "1"}).code == 3);
  CHECK(cli({"enumerate", "alg3-fcomm-3", "--lights", "A"}).code == 1);

  const fs::path out = scratch("thm4.trace.jsonl");
  Result a = cli({"adversary", "thm4", "A=1/2,B;B=0,C;C=1,A", "--out", out.string()});
  CHECK(a.code == 3);
  CHECK(a.out.find("witness replay: ok") != std::string::npos);
  CHECK(cli({"replay", out.string()}).code == 3);
  CHECK(cli({"adversary", "thm2", "A=1,A"}).code == 1);
}
