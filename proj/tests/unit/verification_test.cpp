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

#include "rendezvous/enumerate.hpp"
#include "rendezvous/schedulers.hpp"
#include "rendezvous/verification.hpp"

using namespace rendezvous;

namespace {

WorldConfig world(Scalar r, Scalar s, LightId lr, LightId ls, Visibility v,
                  std::optional<Scalar> delta = std::nullopt) {
  return makeWorld({r, {}, lr}, {s, {}, ls}, v, delta);
}

}  // namespace

TEST_CASE("gathered-stable worlds") {
  CHECK(isGatheredStable(world(Scalar(1), Scalar(1), alg3::kA, alg3::kA, Visibility::FComm),
                         makeAlg3()));
  for (LightId a : alg1Alphabet().all()) {
    for (LightId b : alg1Alphabet().all()) {
      CHECK(isGatheredStable(world(Scalar(0), Scalar(0), a, b, Visibility::FState), makeAlg1()));
    }
  }
  for (const std::string& name : registeredProtocolNames()) {
    Protocol p = protocolByName(name);
    std::optional<Scalar> delta;
    if (p.needsDelta()) delta = Scalar(1);
    WorldConfig w = world(Scalar(0), Scalar(1, 3), p.alphabet().start(), p.alphabet().start(),
                          p.visibilityRequired(), delta);
    CHECK_FALSE(isGatheredStable(w, p));
  }
}

TEST_CASE("gathered-stable rejects protocols that leave a meeting point") {
  Protocol leave("leave", LightAlphabet("x", {"A", "B"}), Visibility::FComm, false,
                 [](const Snapshot& s, const std::optional<Scalar>&) {
                   if (*s.visibleLight == LightId{1}) {
                     return ProtocolOutput{LightId{1}, {Scalar(1), Scalar(0)}, false};
                   }
                   return ProtocolOutput{LightId{1}, {}, false};
                 });
  WorldConfig w = world(Scalar(0), Scalar(0), LightId{0}, LightId{0}, Visibility::FComm);
  CHECK_THROWS_AS(isGatheredStable(w, leave), Error);
}

TEST_CASE("cycle detection") {
  Trace half = thm1Adversary(parseClassLTable("A=1/2,A"));
  auto w = detectNonGatheringCycle(half);
  REQUIRE(w);
  CHECK(w->period() == 2);

  WorldConfig g = world(Scalar(0), Scalar(5), alg1::kStart, alg1::kStart, Visibility::FState);
  Trace gathered = runSSynch(g, makeAlg1(), SSynchSchedule::lockstep(), 20);
  CHECK(gathered.verdict == Verdict::GatheredStable);
  CHECK_FALSE(detectNonGatheringCycle(gathered));

  Trace alg3 = thm4Adversary(alg3Table());
  auto w3 = detectNonGatheringCycle(alg3, true);
  REQUIRE(w3);
  // the stale-light pattern repeats with the light pair (A, A)
  CHECK(w3->classDescription == alg3.witness->classDescription);
  CHECK(configurationClass(alg3.worldAt(w3->start), true) ==
        configurationClass(alg3.worldAt(w3->end), true));
}

TEST_CASE("configuration classes") {
  WorldConfig a = world(Scalar(0), Scalar(1), alg3::kA, alg3::kB, Visibility::FComm);
  WorldConfig b = world(Scalar(5), Scalar(9), alg3::kA, alg3::kB, Visibility::FComm);
  CHECK(configurationClass(a, true) == configurationClass(b, true));
  CHECK(configurationClass(a, false) != configurationClass(b, false));
  WorldConfig c = world(Scalar(5), Scalar(6), alg3::kA, alg3::kB, Visibility::FComm);
  CHECK(configurationClass(a, false) == configurationClass(c, false));
  WorldConfig looking = executeEvent(a, makeAlg3(), parseEvent("R.Look")).world;
  CHECK_FALSE(configurationClass(looking, false));
}

TEST_CASE("witness replay catches a forged witness") {
  WorldConfig g = world(Scalar(0), Scalar(5), alg3::kA, alg3::kA, Visibility::FComm);
  RunOptions opts;
  opts.stopWhenGathered = false;
  Trace t = runSSynch(g, makeAlg3(), SSynchSchedule::fromRounds({parseRound("R"), parseRound("S")}),
                      2, opts);
  t.witness = CycleWitness{0, 2, "forged"};
  CHECK_FALSE(replayWitness(t, makeAlg3()).ok);
}

TEST_CASE("exhaustive enumeration of the three-color protocol") {
  Protocol p = makeAlg3();
  std::vector<WorldConfig> roots;
  for (LightId a : p.alphabet().all()) {
    for (LightId b : p.alphabet().all()) {
      roots.push_back(world(Scalar(0), Scalar(1), a, b, Visibility::FComm, Scalar(1, 2)));
    }
  }
  EnumerationOptions opts;
  opts.depth = 0;
  EnumerationReport r = enumerateSSynch(roots, p, opts);
  CHECK(r.roots == 9);
  CHECK(r.allFairBranchesGather());
  CHECK(r.worstCaseRounds);
  CHECK_FALSE(r.counterexample);
}

TEST_CASE("exhaustive enumeration finds a fair non-gathering lasso") {
  ClassLTable still = parseClassLTable("A=0,A");
  Protocol p = makeClassL(still, Visibility::FState);
  EnumerationOptions opts;
  opts.depth = 0;
  EnumerationReport r =
      enumerateSSynch({world(Scalar(0), Scalar(1), LightId{0}, LightId{0}, Visibility::FState)}, p,
                      opts);
  CHECK_FALSE(r.allFairBranchesGather());
  CHECK(r.fairCycles > 0);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->verdict == Verdict::NonGatheringWitness);
  CHECK(replayTrace(*r.counterexample, p) == *r.counterexample);
}

TEST_CASE("enumeration depth bound leaves a frontier") {
  // halving forever never repeats a state
  Protocol p = makeClassL(parseClassLTable("A=1/2,A"), Visibility::FState);
  EnumerationOptions opts;
  opts.depth = 6;
  EnumerationReport r =
      enumerateSSynch({world(Scalar(0), Scalar(1), LightId{0}, LightId{0}, Visibility::FState)}, p,
                      opts);
  CHECK(r.frontier > 0);
  CHECK_FALSE(r.allFairBranchesGather());
}

TEST_CASE("enumeration reports invariant violations and marks") {
  Protocol p = makeAlg3();
  EnumerationOptions opts;
  opts.depth = 0;
  opts.check = [](const WorldConfig& from, const SSynchRound&, const WorldConfig& to)
      -> std::optional<std::string> {
    if (to.separation() > from.separation()) return "distance grew";
    return std::nullopt;
  };
  opts.mark = [](const WorldConfig& w) { return w.separation() < Scalar(1); };
  EnumerationReport r = enumerateSSynch(
      {world(Scalar(0), Scalar(1), alg3::kA, alg3::kA, Visibility::FComm, Scalar(1, 2))}, p, opts);
  // the three-color protocol never moves apart from (A, A) at distance 1
  CHECK(r.violations == 0);
  CHECK(r.gatheredMarked > 0);
  CHECK(r.gatheredUnmarked == 0);
}
