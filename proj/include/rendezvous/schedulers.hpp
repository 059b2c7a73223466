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

#ifndef RENDEZVOUS_SCHEDULERS_HPP_
#define RENDEZVOUS_SCHEDULERS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rendezvous/core.hpp"
#include "rendezvous/protocols.hpp"
#include "rendezvous/rng.hpp"
#include "rendezvous/schedule.hpp"
#include "rendezvous/trace.hpp"

namespace rendezvous {

struct RunOptions {
  bool stopWhenGathered = true;
  /// End the run at the first non-gathering cycle (class-L adversaries).
  bool stopOnWitness = false;
  /// Checked against finite schedules/timelines before running.
  std::optional<std::size_t> fairnessWindow;
  /// Re-draw a robot's frame at the start of each of its cycles. Only valid
  /// for class-L protocols, whose outcome does not depend on frames.
  std::optional<std::uint64_t> frameSeed;
};

/// Draws frames for per-cycle re-randomization.
class FrameRandomizer {
 public:
  explicit FrameRandomizer(std::uint64_t seed) : rng_(seed) {}
  Frame draw();

 private:
  Rng rng_;
};

struct RoundOutcome {
  WorldConfig world;
  std::vector<StepRecord> steps;
};

/// One semi-synchronous round: every active robot looks at the round-start
/// world, then all light updates and moves are applied together.
RoundOutcome executeRound(const WorldConfig& world, const Protocol& protocol,
                          const SSynchRound& round,
                          FrameRandomizer* frames = nullptr);

Trace runSSynch(const WorldConfig& world, const Protocol& protocol,
                const SSynchSchedule& schedule, std::size_t maxRounds,
                const RunOptions& options = {});

struct EventOutcome {
  WorldConfig world;
  StepRecord step;
};

/// Applies one asynchronous event. Throws ScheduleError when the event does
/// not continue the robot's current cycle.
EventOutcome executeEvent(const WorldConfig& world, const Protocol& protocol,
                          const AsynchEvent& event,
                          FrameRandomizer* frames = nullptr);

Trace runAsynch(const WorldConfig& world, const Protocol& protocol,
                const AsynchEventTimeline& timeline, std::size_t maxEvents,
                const RunOptions& options = {});

/// Re-executes the logged schedule from the trace's initial world.
Trace replayTrace(const Trace& recorded, const Protocol& protocol);

/// Nonempty random rounds; each robot at least once per `window` rounds.
/// Non-rigid schedules draw each mover's stop from {complete, delta, mid}
/// plus uniform interior fractions.
SSynchSchedule fairRandomSSynch(std::uint64_t seed, std::size_t maxRounds,
                                std::size_t fairnessWindow = 3,
                                bool nonRigid = false);

struct AsynchRandomOptions {
  bool nonRigid = false;
  std::size_t maxMoveSteps = 3;
};

/// Longest cycle the generator emits: 5 fixed events plus the MoveSteps.
std::size_t maxCycleLength(const AsynchRandomOptions& options);

/// Random interleaving in which every window of `fairnessWindow` events
/// contains a completed cycle of each robot. Requires
/// fairnessWindow >= 2 * maxCycleLength(options).
AsynchEventTimeline fairRandomAsynch(std::uint64_t seed, std::size_t maxEvents,
                                     std::size_t fairnessWindow,
                                     const AsynchRandomOptions& options = {});

struct AdversaryOptions {
  Scalar separation{1};
  std::size_t budget = 100;
  Frame frameR;
  Frame frameS;
};

/// FState class-L adversary: single activations alternate; when the robot
/// about to act would move onto the other, both act and swap places.
Trace thm1Adversary(const ClassLTable& table, const AdversaryOptions& options = {});

/// FComm class-L asynchronous adversary: lockstep cycles, except that when
/// the shared light sends both to the midpoint, R finishes that cycle and one
/// more against S's stale light before S commits and moves.
Trace thm4Adversary(const ClassLTable& table, const AdversaryOptions& options = {});

}  // namespace rendezvous

#endif  // RENDEZVOUS_SCHEDULERS_HPP_
