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

#include "../common/alg2_scripts.hpp"
#include "rendezvous/verification.hpp"

using namespace rendezvous;
using namespace rendezvous::testing;

TEST_CASE("twelve-color scripted timelines reach their symmetry-breaking branches") {
  for (const Alg2Script& script : alg2Scripts()) {
    CAPTURE(script.file);
    std::vector<AsynchEvent> events =
        readTimeline(std::string(RENDEZVOUS_TEST_DATA) + "/alg2/" + script.file);
    Trace t = runAsynch(alg2ScriptWorld(script), makeAlg2(),
                        AsynchEventTimeline::fromEvents(events), events.size());
    Alg2Milestones m = alg2Milestones(t);
    CHECK(m.gathered);
    CHECK(m.movedAway);
    CHECK(m.bothBelowOneBeforeAway);
    CHECK(m.branchFired(script.branch));
    CHECK(replayTrace(t, makeAlg2()) == t);
  }
}

TEST_CASE("twelve-color protocol gathers at once under lockstep from distance 3") {
  // both robots approach the midpoint of the same snapshot
  std::vector<AsynchEvent> events;
  for (int c = 0; c < 4; ++c) {
    auto r = fullCycle(RobotId::R);
    auto s = fullCycle(RobotId::S);
    for (std::size_t k = 0; k < r.size(); ++k) {
      events.push_back(r[k]);
      events.push_back(s[k]);
    }
  }
  WorldConfig w = makeWorld({Scalar(0), {}, alg2::kTest}, {Scalar(3), {}, alg2::kTest},
                            Visibility::FComm);
  Trace t = runAsynch(w, makeAlg2(), AsynchEventTimeline::fromEvents(events), events.size());
  CHECK(t.verdict == Verdict::GatheredStable);
  CHECK(t.finalWorld().robot(RobotId::R).position == Scalar(3, 2));
}

TEST_CASE("twelve-color protocol lockstep below distance 1 takes the equal-units branch") {
  std::vector<AsynchEvent> events;
  for (int c = 0; c < 12; ++c) {
    auto r = fullCycle(RobotId::R);
    auto s = fullCycle(RobotId::S);
    for (std::size_t k = 0; k < r.size(); ++k) {
      events.push_back(r[k]);
      events.push_back(s[k]);
    }
  }
  WorldConfig w = makeWorld({Scalar(0), {}, alg2::kTest}, {Scalar(3, 4), {}, alg2::kTest},
                            Visibility::FComm);
  Trace t = runAsynch(w, makeAlg2(), AsynchEventTimeline::fromEvents(events), events.size());
  Alg2Milestones m = alg2Milestones(t);
  CHECK(m.gathered);
  CHECK(m.bothBelowOneBeforeAway);
  CHECK(m.equalUnitsBranch);
}
