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
#include <deque>

#include "rendezvous/schedulers.hpp"

namespace rendezvous {

namespace {

MotionChoice randomStop(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return MotionChoice::complete();
    case 1: return MotionChoice::atDelta();
    case 2: return MotionChoice::atMid();
    default: return MotionChoice::atFraction(rng.interiorFraction());
  }
}

}  // namespace

SSynchSchedule fairRandomSSynch(std::uint64_t seed, std::size_t maxRounds,
                                std::size_t fairnessWindow, bool nonRigid) {
  if (fairnessWindow == 0) throw Error("fairness window must be positive");
  Rng rng(seed);
  std::vector<SSynchRound> rounds;
  rounds.reserve(maxRounds);
  std::array<std::size_t, 2> idle{0, 0};
  for (std::size_t i = 0; i < maxRounds; ++i) {
    SSynchRound round;
    switch (rng.below(3)) {
      case 0: round.active = {true, false}; break;
      case 1: round.active = {false, true}; break;
      default: round.active = {true, true}; break;
    }
    // a robot idle for window-1 rounds must act now
    for (RobotId id : kRobots) {
      if (idle[index(id)] + 1 >= fairnessWindow) round.active[index(id)] = true;
    }
    for (RobotId id : kRobots) {
      idle[index(id)] = round.activates(id) ? 0 : idle[index(id)] + 1;
      if (nonRigid && round.activates(id)) round.motion[index(id)] = randomStop(rng);
    }
    rounds.push_back(round);
  }
  return SSynchSchedule::fromRounds(std::move(rounds));
}

std::size_t maxCycleLength(const AsynchRandomOptions& options) {
  return 5 + options.maxMoveSteps;
}

AsynchEventTimeline fairRandomAsynch(std::uint64_t seed, std::size_t maxEvents,
                                     std::size_t fairnessWindow,
                                     const AsynchRandomOptions& options) {
  if (fairnessWindow < 2 * maxCycleLength(options)) {
    throw Error("fairness window " + std::to_string(fairnessWindow) +
                " is below twice the longest cycle (" +
                std::to_string(2 * maxCycleLength(options)) + ")");
  }
  Rng rng(seed);
  auto drawCycle = [&](RobotId id) {
    MotionChoice stop = options.nonRigid ? randomStop(rng) : MotionChoice::complete();
    std::vector<Scalar> steps(rng.below(options.maxMoveSteps + 1));
    for (Scalar& f : steps) f = rng.interiorFraction();
    std::vector<AsynchEvent> c = fullCycle(id, stop, std::move(steps));
    return std::deque<AsynchEvent>(c.begin(), c.end());
  };

  // The pending cycle of each robot always ends in its next MoveEnd, which
  // must happen at or before the deadline.
  std::array<std::deque<AsynchEvent>, 2> queue{drawCycle(RobotId::R),
                                               drawCycle(RobotId::S)};
  std::array<std::size_t, 2> deadline{fairnessWindow - 1, fairnessWindow - 1};

  // Earliest-deadline-first: after `pos` events, can both pending cycles
  // still meet their deadlines?
  auto feasible = [&](std::size_t pos) {
    std::array<std::size_t, 2> order{0, 1};
    if (deadline[1] < deadline[0]) std::swap(order[0], order[1]);
    std::size_t t = pos;
    for (std::size_t k : order) {
      t += queue[k].size();
      if (t - 1 > deadline[k]) return false;
    }
    return true;
  };

  std::vector<AsynchEvent> events;
  events.reserve(maxEvents);
  for (std::size_t i = 0; i < maxEvents; ++i) {
    std::size_t first = rng.below(2);
    std::optional<std::size_t> pick;
    for (std::size_t k : {first, 1 - first}) {
      AsynchEvent e = queue[k].front();
      queue[k].pop_front();
      bool ok = queue[k].empty() || feasible(i + 1);
      if (queue[k].empty()) {
        // MoveEnd: the next cycle starts a fresh window
        auto saved = deadline[k];
        queue[k] = drawCycle(static_cast<RobotId>(k));
        deadline[k] = i + fairnessWindow;
        ok = feasible(i + 1);
        if (!ok) {
          deadline[k] = saved;
          queue[k].clear();
        }
      }
      if (ok) {
        events.push_back(e);
        pick = k;
        break;
      }
      queue[k].push_front(e);
    }
    if (!pick) throw Error("fair asynchronous interleaving became infeasible");
  }
  return AsynchEventTimeline::fromEvents(std::move(events));
}

}  // namespace rendezvous
