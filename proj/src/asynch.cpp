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

#include <memory>

#include "engine_common.hpp"
#include "rendezvous/schedulers.hpp"
#include "rendezvous/verification.hpp"

namespace rendezvous {

namespace {

[[noreturn]] void outOfOrder(const AsynchEvent& event) {
  throw ScheduleError(formatEvent(event) +
                      " does not continue the robot's current cycle");
}

PendingCycle& expectPhase(RobotBody& body, const AsynchEvent& event,
                          CyclePhase phase) {
  if (!body.pending || body.pending->phase != phase) outOfOrder(event);
  return *body.pending;
}

}  // namespace

EventOutcome executeEvent(const WorldConfig& world, const Protocol& protocol,
                          const AsynchEvent& event, FrameRandomizer* frames) {
  EventOutcome out{world, StepRecord{event.robot, {}, {}, {}}};
  RobotBody& body = out.world.robot(event.robot);
  if (body.terminated) return out;

  switch (event.kind) {
    case EventKind::Look: {
      if (body.pending) outOfOrder(event);
      if (frames) body.frame = frames->draw();
      PendingCycle cycle;
      cycle.snapshot = detail::lookAt(out.world, event.robot);
      out.step.snapshot = cycle.snapshot;
      body.pending = cycle;
      break;
    }
    case EventKind::ComputeDone: {
      PendingCycle& cycle = expectPhase(body, event, CyclePhase::Looked);
      ProtocolOutput po = protocol.compute(
          cycle.snapshot, detail::localDelta(out.world, event.robot));
      cycle.nextLight = po.nextLight;
      cycle.destGlobal = toGlobal(body, po.destLocal);
      cycle.terminate = po.terminate;
      cycle.phase = CyclePhase::Computed;
      out.step.snapshot = cycle.snapshot;
      out.step.output = po;
      break;
    }
    case EventKind::CommitLight: {
      PendingCycle& cycle = expectPhase(body, event, CyclePhase::Computed);
      body.light = cycle.nextLight;
      cycle.phase = CyclePhase::Committed;
      break;
    }
    case EventKind::MoveStart: {
      PendingCycle& cycle = expectPhase(body, event, CyclePhase::Committed);
      cycle.moveStart = body.position;
      cycle.moveEnd =
          stopPoint(body.position, cycle.destGlobal, out.world.delta, event.stop);
      if (cycle.moveEnd != cycle.destGlobal &&
          abs(cycle.moveEnd - cycle.moveStart) < *out.world.delta) {
        throw InvariantViolation("move advanced less than delta");
      }
      cycle.phase = CyclePhase::Moving;
      out.step.motion = event.stop;
      break;
    }
    case EventKind::MoveStep: {
      PendingCycle& cycle = expectPhase(body, event, CyclePhase::Moving);
      if (event.fraction < Scalar(0) || event.fraction > Scalar(1)) {
        throw ScheduleError("MoveStep fraction outside [0, 1]");
      }
      body.position = body.position + event.fraction * (cycle.moveEnd - body.position);
      break;
    }
    case EventKind::MoveEnd: {
      PendingCycle& cycle = expectPhase(body, event, CyclePhase::Moving);
      body.position = cycle.moveEnd;
      body.terminated = cycle.terminate;
      body.pending.reset();
      break;
    }
  }
  checkCanonical(out.world);
  return out;
}

Trace runAsynch(const WorldConfig& world, const Protocol& protocol,
                const AsynchEventTimeline& timeline, std::size_t maxEvents,
                const RunOptions& options) {
  detail::checkCompatible(world, protocol, options);
  if (!world.idle()) throw Error("asynchronous runs start from idle robots");
  if (const auto* events = timeline.events()) {
    std::vector<AsynchEvent> prefix(
        events->begin(), events->begin() + std::min(events->size(), maxEvents));
    if (auto err = checkTimeline(prefix, options.fairnessWindow)) {
      throw ScheduleError(*err);
    }
  }
  std::unique_ptr<FrameRandomizer> frames;
  if (options.frameSeed) frames = std::make_unique<FrameRandomizer>(*options.frameSeed);

  Trace trace;
  trace.protocol = protocol.name();
  trace.engine = EngineKind::ASynch;
  trace.initial = world;
  trace.frameSeed = options.frameSeed;
  trace.stopWhenGathered = options.stopWhenGathered;
  trace.stopOnWitness = options.stopOnWitness;
  checkCanonical(world);

  WorldConfig current = world;
  if (!(options.stopWhenGathered && isGatheredStable(current, protocol))) {
    for (std::size_t i = 0; i < maxEvents; ++i) {
      std::optional<AsynchEvent> event = timeline.next(i, current);
      if (!event) break;
      EventOutcome outcome = executeEvent(current, protocol, *event, frames.get());
      current = outcome.world;
      trace.entries.push_back({i + 1, formatEvent(*event), {outcome.step}, current});
      if (options.stopOnWitness &&
          detectNonGatheringCycle(trace, protocol.isClassL())) {
        break;
      }
      if (options.stopWhenGathered && isGatheredStable(current, protocol)) break;
    }
  }
  trace.verdict = detail::finalVerdict(trace, protocol, options);
  return trace;
}

}  // namespace rendezvous
