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

#include <deque>
#include <memory>

#include "rendezvous/schedulers.hpp"

namespace rendezvous {

namespace {

WorldConfig adversaryWorld(const ClassLTable& table, const AdversaryOptions& options,
                           Visibility visibility) {
  if (options.separation <= Scalar(0)) throw Error("separation must be positive");
  LightId start = table.alphabet.start();
  return makeWorld({Scalar(0), options.frameR, start},
                   {options.separation, options.frameS, start}, visibility);
}

RunOptions adversaryRun() {
  RunOptions run;
  run.stopWhenGathered = true;
  run.stopOnWitness = true;
  return run;
}

}  // namespace

Trace thm1Adversary(const ClassLTable& table, const AdversaryOptions& options) {
  Protocol protocol = makeClassL(table, Visibility::FState);
  WorldConfig world = adversaryWorld(table, options, Visibility::FState);

  // R's turn comes with equal lights. R alone followed by S alone keeps the
  // robots apart unless R's lambda is 1, in which case both jump and swap.
  auto rTurn = std::make_shared<bool>(true);
  auto gen = [table, rTurn](std::size_t,
                            const WorldConfig& w) -> std::optional<SSynchRound> {
    SSynchRound round;
    if (*rTurn) {
      const LightId r = w.robot(RobotId::R).light;
      const bool swap = table.entry(r).lambda == Scalar(1);
      round.active = {true, swap};
      *rTurn = swap;
    } else {
      round.active = {false, true};
      *rTurn = true;
    }
    return round;
  };
  return runSSynch(world, protocol, SSynchSchedule::fromGenerator(gen),
                   options.budget, adversaryRun());
}

Trace thm4Adversary(const ClassLTable& table, const AdversaryOptions& options) {
  Protocol protocol = makeClassL(table, Visibility::FComm);
  WorldConfig world = adversaryWorld(table, options, Visibility::FComm);

  auto queue = std::make_shared<std::deque<AsynchEvent>>();
  auto gen = [table, queue](std::size_t,
                            const WorldConfig& w) -> std::optional<AsynchEvent> {
    if (queue->empty()) {
      if (!w.idle()) throw Error("adversary batch ended mid-cycle");
      auto ev = [](RobotId id, EventKind k) {
        AsynchEvent e;
        e.robot = id;
        e.kind = k;
        return e;
      };
      constexpr RobotId R = RobotId::R, S = RobotId::S;
      const Scalar lambda = table.entry(w.robot(S).light).lambda;
      if (lambda != Scalar(1, 2)) {
        for (EventKind k : {EventKind::Look, EventKind::ComputeDone,
                            EventKind::CommitLight, EventKind::MoveStart}) {
          queue->push_back(ev(R, k));
          queue->push_back(ev(S, k));
        }
        if (lambda == Scalar(1)) {
          // a swap: S leaves before R arrives, so they pass without meeting
          AsynchEvent step = ev(S, EventKind::MoveStep);
          step.fraction = Scalar(1, 3);
          queue->push_back(step);
        }
        queue->push_back(ev(R, EventKind::MoveEnd));
        queue->push_back(ev(S, EventKind::MoveEnd));
      } else {
        // both computed the midpoint; S's light stays stale while R runs a
        // second cycle against it
        *queue = {ev(R, EventKind::Look),        ev(S, EventKind::Look),
                  ev(R, EventKind::ComputeDone), ev(S, EventKind::ComputeDone),
                  ev(R, EventKind::CommitLight), ev(R, EventKind::MoveStart),
                  ev(R, EventKind::MoveEnd),     ev(R, EventKind::Look),
                  ev(R, EventKind::ComputeDone), ev(R, EventKind::CommitLight),
                  ev(R, EventKind::MoveStart),   ev(R, EventKind::MoveEnd),
                  ev(S, EventKind::CommitLight), ev(S, EventKind::MoveStart),
                  ev(S, EventKind::MoveEnd)};
      }
    }
    AsynchEvent e = queue->front();
    queue->pop_front();
    return e;
  };
  return runAsynch(world, protocol, AsynchEventTimeline::fromGenerator(gen),
                   options.budget, adversaryRun());
}

}  // namespace rendezvous
