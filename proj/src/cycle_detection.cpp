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

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "rendezvous/schedulers.hpp"
#include "rendezvous/verification.hpp"

namespace rendezvous {

namespace {

std::string lightsOf(const WorldConfig& w) {
  std::ostringstream os;
  os << "lights=" << int(w.robots[0].light.value) << ","
     << int(w.robots[1].light.value);
  if (w.robots[0].terminated || w.robots[1].terminated) {
    os << ";terminated=" << w.robots[0].terminated << "," << w.robots[1].terminated;
  }
  return os.str();
}

// Which robots complete a cycle in trace entry k (1-based).
std::array<bool, 2> actors(const Trace& trace, std::size_t k) {
  std::array<bool, 2> acted{false, false};
  const TraceEntry& e = trace.entries[k - 1];
  if (trace.engine == EngineKind::SSynch) {
    for (const StepRecord& s : e.steps) acted[index(s.actor)] = true;
    return acted;
  }
  AsynchEvent ev = parseEvent(e.schedule);
  if (ev.kind == EventKind::MoveEnd && trace.worldAt(k - 1).robot(ev.robot).pending) {
    acted[index(ev.robot)] = true;
  }
  return acted;
}

}  // namespace

std::optional<std::string> configurationClass(const WorldConfig& world, bool classL) {
  if (!world.idle()) return std::nullopt;
  if (classL) return lightsOf(world);
  std::ostringstream os;
  os << "offset=" << (world.robots[1].position - world.robots[0].position) << ";"
     << lightsOf(world);
  for (const RobotBody& b : world.robots) {
    os << ";frame=" << b.frame.unit << "," << toString(b.frame.sense);
  }
  return os.str();
}

std::optional<CycleWitness> detectNonGatheringCycle(const Trace& trace, bool classL) {
  std::unordered_map<std::string, std::vector<std::size_t>> seen;
  // prefix counts of completed cycles, per robot
  std::vector<std::array<std::size_t, 2>> done{{0, 0}};
  std::size_t firstPositive = 0;  // no zero-distance entry at or after this

  for (std::size_t j = 0; j <= trace.entries.size(); ++j) {
    const WorldConfig& w = trace.worldAt(j);
    if (j > 0) {
      auto a = actors(trace, j);
      auto c = done.back();
      for (RobotId id : kRobots) c[index(id)] += a[index(id)] ? 1 : 0;
      done.push_back(c);
    }
    if (w.separation().isZero()) {
      firstPositive = j + 1;
      continue;
    }
    auto cls = configurationClass(w, classL);
    if (!cls) continue;
    auto& list = seen[*cls];
    // the earliest admissible start gives both robots the most room to act
    auto it = std::lower_bound(list.begin(), list.end(), firstPositive);
    if (it != list.end()) {
      std::size_t i = *it;
      if (done[j][0] > done[i][0] && done[j][1] > done[i][1]) {
        return CycleWitness{i, j, *cls};
      }
    }
    list.push_back(j);
  }
  return std::nullopt;
}

std::optional<CycleWitness> detectNonGatheringCycle(const Trace& trace) {
  return detectNonGatheringCycle(trace, trace.protocol.rfind("classL:", 0) == 0);
}

WitnessReplay replayWitness(const Trace& trace, const Protocol& protocol,
                            std::size_t periods) {
  if (!trace.witness) return {false, "trace carries no witness"};
  const CycleWitness& wit = *trace.witness;
  if (wit.end > trace.entries.size() || wit.start >= wit.end) {
    return {false, "witness indices out of range"};
  }
  const bool classL = protocol.isClassL();
  std::vector<std::optional<std::string>> classes;
  for (std::size_t k = wit.start + 1; k <= wit.end; ++k) {
    classes.push_back(configurationClass(trace.worldAt(k), classL));
  }

  WorldConfig world = trace.worldAt(wit.end);
  for (std::size_t p = 0; p < periods; ++p) {
    for (std::size_t k = wit.start + 1; k <= wit.end; ++k) {
      const std::string& literal = trace.entries[k - 1].schedule;
      try {
        if (trace.engine == EngineKind::SSynch) {
          world = executeRound(world, protocol, parseRound(literal)).world;
        } else {
          world = executeEvent(world, protocol, parseEvent(literal)).world;
        }
      } catch (const Error& e) {
        return {false, "period " + std::to_string(p + 1) + ": " + e.what()};
      }
      if (world.separation().isZero()) {
        return {false, "robots meet in replayed period " + std::to_string(p + 1)};
      }
      if (configurationClass(world, classL) != classes[k - wit.start - 1]) {
        return {false, "class sequence diverges in replayed period " +
                           std::to_string(p + 1)};
      }
    }
  }
  return {true, {}};
}

}  // namespace rendezvous
