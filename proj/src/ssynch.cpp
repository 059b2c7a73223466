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

Frame FrameRandomizer::draw() {
  Frame f;
  f.unit = Scalar(static_cast<long>(rng_.below(16)) + 1, 4);
  f.sense = kAllSenses[rng_.below(kAllSenses.size())];
  return f;
}

namespace detail {

void checkCompatible(const WorldConfig& world, const Protocol& protocol,
                     const RunOptions& options) {
  if (protocol.visibilityRequired() != world.visibility) {
    throw Error(protocol.name() + " requires " +
                std::string(toString(protocol.visibilityRequired())) +
                " visibility");
  }
  if (protocol.needsDelta() && !world.delta) {
    throw Error(protocol.name() + " needs a delta (non-rigid world)");
  }
  if (options.frameSeed && !protocol.isClassL()) {
    throw Error("per-cycle frame re-randomization is only valid for class-L protocols");
  }
  for (const RobotBody& b : world.robots) {
    if (!protocol.alphabet().contains(b.light)) {
      throw Error("initial light outside the alphabet of " + protocol.name());
    }
  }
}

Snapshot lookAt(const WorldConfig& world, RobotId id) {
  const RobotBody& me = world.robot(id);
  const Scalar& otherPos = world.robot(otherRobot(id)).position;
  Snapshot snap = observe(world, id, otherPos);
  if (toGlobal(me, snap.otherLocal) != otherPos) {
    throw InvariantViolation("snapshot does not round-trip to the global position");
  }
  return snap;
}

std::optional<Scalar> localDelta(const WorldConfig& world, RobotId id) {
  if (!world.delta) return std::nullopt;
  return *world.delta / world.robot(id).frame.unit;
}

Verdict finalVerdict(Trace& trace, const Protocol& protocol,
                     const RunOptions& options) {
  if (isGatheredStable(trace.finalWorld(), protocol)) return Verdict::GatheredStable;
  if (options.stopOnWitness) {
    trace.witness = detectNonGatheringCycle(trace, protocol.isClassL());
    if (trace.witness) return Verdict::NonGatheringWitness;
  }
  return Verdict::BudgetExhausted;
}

}  // namespace detail

RoundOutcome executeRound(const WorldConfig& world, const Protocol& protocol,
                          const SSynchRound& round, FrameRandomizer* frames) {
  if (!round.active[0] && !round.active[1]) {
    throw ScheduleError("empty activation set");
  }
  WorldConfig start = world;
  RoundOutcome out;
  std::array<std::optional<ProtocolOutput>, 2> outputs;
  std::array<Scalar, 2> dests;

  for (RobotId id : kRobots) {
    if (!round.activates(id) || start.robot(id).terminated) continue;
    if (frames) start.robot(id).frame = frames->draw();
  }
  for (RobotId id : kRobots) {
    if (!round.activates(id) || start.robot(id).terminated) continue;
    Snapshot snap = detail::lookAt(start, id);
    ProtocolOutput po = protocol.compute(snap, detail::localDelta(start, id));
    dests[index(id)] = toGlobal(start.robot(id), po.destLocal);
    outputs[index(id)] = po;
    out.steps.push_back({id, snap, po, round.motion[index(id)]});
  }

  out.world = start;
  for (RobotId id : kRobots) {
    if (!outputs[index(id)]) continue;
    const ProtocolOutput& po = *outputs[index(id)];
    out.world = applyMove(out.world, id, dests[index(id)], round.motion[index(id)]);
    RobotBody& body = out.world.robot(id);
    body.light = po.nextLight;
    body.terminated = po.terminate;
  }
  checkCanonical(out.world);
  return out;
}

Trace runSSynch(const WorldConfig& world, const Protocol& protocol,
                const SSynchSchedule& schedule, std::size_t maxRounds,
                const RunOptions& options) {
  detail::checkCompatible(world, protocol, options);
  if (options.fairnessWindow) {
    if (const auto* rounds = schedule.rounds()) {
      std::vector<SSynchRound> prefix(
          rounds->begin(), rounds->begin() + std::min(rounds->size(), maxRounds));
      if (!isFairSSynch(prefix, *options.fairnessWindow)) {
        throw ScheduleError("schedule is not fair within a window of " +
                            std::to_string(*options.fairnessWindow) + " rounds");
      }
    }
  }
  std::unique_ptr<FrameRandomizer> frames;
  if (options.frameSeed) frames = std::make_unique<FrameRandomizer>(*options.frameSeed);

  Trace trace;
  trace.protocol = protocol.name();
  trace.engine = EngineKind::SSynch;
  trace.initial = world;
  trace.frameSeed = options.frameSeed;
  trace.stopWhenGathered = options.stopWhenGathered;
  trace.stopOnWitness = options.stopOnWitness;
  checkCanonical(world);

  WorldConfig current = world;
  if (!(options.stopWhenGathered && isGatheredStable(current, protocol))) {
    for (std::size_t i = 0; i < maxRounds; ++i) {
      std::optional<SSynchRound> round = schedule.next(i, current);
      if (!round) break;
      RoundOutcome outcome = executeRound(current, protocol, *round, frames.get());
      current = outcome.world;
      trace.entries.push_back(
          {i + 1, formatRound(*round), std::move(outcome.steps), current});
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

Trace replayTrace(const Trace& recorded, const Protocol& protocol) {
  RunOptions options;
  options.stopWhenGathered = recorded.stopWhenGathered;
  options.stopOnWitness = recorded.stopOnWitness;
  options.frameSeed = recorded.frameSeed;
  std::vector<std::string> literals = recorded.scheduleLiterals();
  if (recorded.engine == EngineKind::SSynch) {
    std::vector<SSynchRound> rounds;
    for (const std::string& l : literals) rounds.push_back(parseRound(l));
    return runSSynch(recorded.initial, protocol,
                     SSynchSchedule::fromRounds(std::move(rounds)),
                     literals.size(), options);
  }
  std::vector<AsynchEvent> events;
  for (const std::string& l : literals) events.push_back(parseEvent(l));
  return runAsynch(recorded.initial, protocol,
                   AsynchEventTimeline::fromEvents(std::move(events)),
                   literals.size(), options);
}

}  // namespace rendezvous
