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

#ifndef RENDEZVOUS_TESTS_ALG2_SCRIPTS_HPP_
#define RENDEZVOUS_TESTS_ALG2_SCRIPTS_HPP_

#include <fstream>
#include <string>
#include <vector>

#include "rendezvous/schedulers.hpp"

namespace rendezvous::testing {

struct Alg2Script {
  std::string file;
  Scalar unitS;
  enum class Branch { EqualUnits, SmallerUnit, BiggerUnit } branch;
};

inline std::vector<Alg2Script> alg2Scripts() {
  return {{"equal_units.timeline", Scalar(1), Alg2Script::Branch::EqualUnits},
          {"smaller_unit.timeline", Scalar(3, 2), Alg2Script::Branch::SmallerUnit},
          {"bigger_unit.timeline", Scalar(3, 2), Alg2Script::Branch::BiggerUnit}};
}

inline std::vector<AsynchEvent> readTimeline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<AsynchEvent> events;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    events.push_back(parseEvent(line));
  }
  return events;
}

inline WorldConfig alg2ScriptWorld(const Alg2Script& script) {
  return makeWorld({Scalar(0), {}, alg2::kTest}, {Scalar(3), {script.unitS, Sense::PosX}, alg2::kTest},
                   Visibility::FComm);
}

struct Alg2Milestones {
  bool gathered = false;
  /// Each robot saw the other below distance 1 while testing, before the
  /// first MovingAway.
  bool bothBelowOneBeforeAway = false;
  bool movedAway = false;
  bool equalUnitsBranch = false;   // Waiting seen at exactly 2
  bool smallerUnitBranch = false;  // Waiting seen beyond 2
  bool biggerUnitBranch = false;   // Waiting seen in (0, 2)

  bool branchFired(Alg2Script::Branch b) const {
    switch (b) {
      case Alg2Script::Branch::EqualUnits: return equalUnitsBranch;
      case Alg2Script::Branch::SmallerUnit: return smallerUnitBranch;
      case Alg2Script::Branch::BiggerUnit: return biggerUnitBranch;
    }
    return false;
  }
};

inline Alg2Milestones alg2Milestones(const Trace& trace) {
  using namespace alg2;
  Alg2Milestones m;
  m.gathered = trace.verdict == Verdict::GatheredStable;
  std::array<bool, 2> below{false, false};
  for (const TraceEntry& e : trace.entries) {
    for (const StepRecord& s : e.steps) {
      if (!s.snapshot || !s.output) continue;
      const LightId seen = *s.snapshot->visibleLight;
      const Scalar& d = s.snapshot->dist;
      if (!m.movedAway && s.output->nextLight == kMovingAway) {
        m.movedAway = true;
        m.bothBelowOneBeforeAway = below[0] && below[1];
      }
      if ((seen == kTest || seen == kMeBelow1) && d < Scalar(1)) below[index(s.actor)] = true;
      if (seen == kWaiting) {
        if (d == Scalar(2) && s.output->nextLight == kBothEqual2) m.equalUnitsBranch = true;
        if (d > Scalar(2) && s.output->nextLight == kStay) m.smallerUnitBranch = true;
        if (!d.isZero() && d < Scalar(2) && s.output->nextLight == kHalted) {
          m.biggerUnitBranch = true;
        }
      }
    }
  }
  return m;
}

}  // namespace rendezvous::testing

#endif  // RENDEZVOUS_TESTS_ALG2_SCRIPTS_HPP_
