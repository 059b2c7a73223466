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
#include <sstream>

#include "rendezvous/lemmas.hpp"
#include "rendezvous/schedulers.hpp"

using namespace rendezvous;

namespace {

LemmaClaim claim(const std::string& id, const char* lr, const char* ls, const char* ir,
                 const char* is, std::vector<std::string> sinks = {}) {
  LemmaClaim c;
  c.id = id;
  c.config = {parseAbstractLight(lr), parseAbstractLight(ls), Interval::parse(ir),
              Interval::parse(is)};
  c.sinks = std::move(sinks);
  return c;
}

}  // namespace

TEST_CASE("intervals") {
  Interval a = Interval::parse("[1/4,1/2)");
  CHECK(a.contains(Scalar(1, 4)));
  CHECK_FALSE(a.contains(Scalar(1, 2)));
  CHECK(a.str() == "[1/4,1/2)");
  Interval inf = Interval::parse("(1,+inf)");
  CHECK_FALSE(inf.contains(Scalar(1)));
  CHECK(inf.contains(Scalar(1000000)));
  CHECK(a.subsetOf(Interval::parse("[0,1]")));
  CHECK_FALSE(Interval::parse("[0,1]").subsetOf(a));
  CHECK(Interval::parse("[2,3]").subsetOf(inf));
  CHECK_FALSE(Interval::parse("[1,3]").subsetOf(inf));
  CHECK(Interval::parse("[1,1]").contains(Scalar(1)));
  CHECK_THROWS_AS(Interval::parse("[1,1)"), Error);
  CHECK_THROWS_AS(Interval::parse("[-1,1]"), Error);
  CHECK_THROWS_AS(Interval::parse("[0,+inf]"), Error);
  CHECK_THROWS_AS(Interval::parse("0,1"), Error);
}

TEST_CASE("interval samples") {
  Rng rng(0);
  std::vector<Scalar> closed = sampleInterval(Interval::parse("[1/4,1/2]"), rng, 3);
  // endpoints, two inner offsets per side, midpoint and three random points
  CHECK(closed.size() >= 7);
  CHECK(closed.front() == Scalar(1, 4));
  CHECK(closed.back() == Scalar(1, 2));
  CHECK(std::find(closed.begin(), closed.end(), Scalar(1, 4) + Scalar(1, 1000)) != closed.end());
  CHECK(std::find(closed.begin(), closed.end(), Scalar(1, 2) - Scalar(1, 1000000)) !=
        closed.end());
  CHECK(std::find(closed.begin(), closed.end(), Scalar(3, 8)) != closed.end());
  for (const Scalar& s : sampleInterval(Interval::parse("(1,+inf)"), rng, 3)) {
    CHECK(s > Scalar(1));
  }
  std::vector<Scalar> open = sampleInterval(Interval::parse("(0,1)"), rng, 3);
  CHECK(std::find(open.begin(), open.end(), Scalar(0)) == open.end());
  CHECK(std::is_sorted(open.begin(), open.end()));
}

TEST_CASE("instantiation realizes perceived distances") {
  Rng rng(1);
  AbstractConfig cfg{AbstractLight::Finish, AbstractLight::Three, Interval::parse("[0,1]"),
                     Interval::parse("[1/4,1/2)")};
  Instantiations inst = instantiate(cfg, rng, 3);
  CHECK_FALSE(inst.worlds.empty());
  CHECK(inst.unrealizable > 0);  // R at 0 with S at a positive distance
  for (const WorldConfig& w : inst.worlds) CHECK(cfg.matches(w));
}

TEST_CASE("side-relative lights") {
  WorldConfig w = makeWorld({Scalar(0), {}, alg1::kTwoRight}, {Scalar(1), {}, alg1::kTwoRight},
                            Visibility::FState);
  AbstractConfig same{AbstractLight::TwoSame, AbstractLight::TwoOpposite, Interval::parse("[0,+inf)"),
                      Interval::parse("[0,+inf)")};
  // R sees S on its right, S sees R on its left
  CHECK(same.matches(w));
  CHECK_FALSE(same.swapped().matches(w));
}

TEST_CASE("lemma: finish and three resolve") {
  LemmaClaim l4 = claim("l4", "S_finish", "S_3", "[0,1]", "[1/4,1/2)");
  LemmaContext ctx;
  ctx.fairnessWindow = 2;
  LemmaResult two = checkLemma(l4, makeAlg1(), ctx);
  CHECK(two.verdict == LemmaVerdict::Verified);
  CHECK(two.depth <= 2);
  ctx.fairnessWindow = 3;
  LemmaResult three = checkLemma(l4, makeAlg1(), ctx);
  CHECK(three.verdict == LemmaVerdict::Verified);
  CHECK(three.depth <= 3);
  CHECK(three.samples >= 7);
}

TEST_CASE("lemma: a falsified claim yields a replayable counterexample") {
  LemmaClaim bad = claim("l4", "S_finish", "S_3", "[0,1]", "[0,1/4)");
  LemmaResult r = checkLemma(bad, makeAlg1(), {});
  CHECK(r.verdict == LemmaVerdict::Counterexample);
  REQUIRE(r.counterexample);
  CHECK(replayTrace(*r.counterexample, makeAlg1()) == *r.counterexample);
  CHECK(r.counterexample->finalWorld().separation() > Scalar(0));

  // the upper half of S_3's range still resolves
  LemmaClaim upper = claim("l4", "S_finish", "S_3", "[0,1]", "[1/2,1)");
  CHECK(checkLemma(upper, makeAlg1(), {}).verdict == LemmaVerdict::Verified);
}

TEST_CASE("lemma: unverified sinks are inconclusive") {
  LemmaClaim l5 = claim("l5", "S_finish", "S_2^!=", "[0,1]", "[1/2,+inf)", {"l4"});
  LemmaResult r = checkLemma(l5, makeAlg1(), {});
  CHECK(r.verdict == LemmaVerdict::Inconclusive);
  LemmaContext ctx;
  ctx.verified["l4"] = claim("l4", "S_finish", "S_3", "[0,1]", "[1/4,1/2)").config;
  CHECK(checkLemma(l5, makeAlg1(), ctx).verdict == LemmaVerdict::Verified);
}

TEST_CASE("lemma: unrealizable configurations") {
  LemmaClaim none = claim("x", "S_1", "S_1", "[0,0]", "[1,2]");
  CHECK(checkLemma(none, makeAlg1(), {}).verdict == LemmaVerdict::Unrealizable);
}

TEST_CASE("symmetry and monotonicity observations") {
  std::vector<LemmaClaim> claims{claim("a", "S_finish", "S_3", "[0,1]", "[1/4,1/2)"),
                                 claim("b", "S_2^!=", "S_2^!=", "[1,+inf)", "[1,+inf)")};
  LemmaResult sym = checkSymmetry("o2", claims, makeAlg1(), {}, 3);
  CHECK(sym.verdict == LemmaVerdict::Verified);
  CHECK(sym.branches > 0);
  LemmaResult mono = checkMonotonicity("o3", claims, {});
  CHECK(mono.verdict == LemmaVerdict::Verified);
}

TEST_CASE("manifest parsing and ordering") {
  std::istringstream in(
      "# comment\n"
      "o2 symmetry - - - - 4 -\n"
      "b claim S_1 S_start [0,1] [1,+inf) 8 a\n"
      "a claim S_finish S_3 [0,1] [1/4,1/2) 8 -\n");
  std::vector<LemmaClaim> claims = parseManifest(in);
  REQUIRE(claims.size() == 3);
  CHECK(claims[0].kind == ClaimKind::Symmetry);
  CHECK(claims[1].sinks == std::vector<std::string>{"a"});
  std::vector<LemmaClaim> ordered = orderClaims(claims);
  CHECK(ordered[0].id == "o2");
  CHECK(ordered[1].id == "a");
  CHECK(ordered[2].id == "b");

  std::istringstream cyclic("a claim S_1 S_1 [0,1] [0,1] 8 b\nb claim S_1 S_1 [0,1] [0,1] 8 a\n");
  CHECK_THROWS_AS(orderClaims(parseManifest(cyclic)), Error);
  std::istringstream unknown("a claim S_1 S_1 [0,1] [0,1] 8 zz\n");
  CHECK_THROWS_AS(orderClaims(parseManifest(unknown)), Error);
  std::istringstream shortLine("a claim S_1 S_1 [0,1]\n");
  CHECK_THROWS_AS(parseManifest(shortLine), Error);
  std::istringstream dup("a claim S_1 S_1 [0,1] [0,1] 8 -\na claim S_1 S_1 [0,1] [0,1] 8 -\n");
  CHECK_THROWS_AS(parseManifest(dup), Error);
  std::istringstream badLight("a claim S_9 S_1 [0,1] [0,1] 8 -\n");
  CHECK_THROWS_AS(parseManifest(badLight), Error);
}

TEST_CASE("lemma suite writes counterexample traces") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "rendezvous_lemma_suite_test";
  std::filesystem::remove_all(dir);
  SuiteOptions opts;
  opts.seeds = {0};
  opts.counterexampleDir = dir.string();
  SuiteReport r = runLemmaSuite({claim("bad", "S_finish", "S_3", "[0,1]", "[0,1/4)")},
                                makeAlg1(), opts);
  CHECK(r.anyCounterexample());
  CHECK_FALSE(r.allVerified());
  REQUIRE(r.results.size() == 1);
  CHECK(std::filesystem::exists(r.results[0].counterexamplePath));
  CHECK(suiteReportJson(r).find("\"Counterexample\"") != std::string::npos);
  std::filesystem::remove_all(dir);
}
