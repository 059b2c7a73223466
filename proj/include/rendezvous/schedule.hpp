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

#ifndef RENDEZVOUS_SCHEDULE_HPP_
#define RENDEZVOUS_SCHEDULE_HPP_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rendezvous/core.hpp"

namespace rendezvous {

/// Raised for schedules the engines refuse: empty rounds, broken per-robot
/// event order, unfair timelines.
class ScheduleError : public Error {
 public:
  using Error::Error;
};

struct SSynchRound {
  std::array<bool, 2> active{true, true};
  std::array<MotionChoice, 2> motion;

  bool activates(RobotId id) const { return active[index(id)]; }
  friend bool operator==(const SSynchRound&, const SSynchRound&) = default;
};

/// `R`, `S` or `RS`, optionally followed by `:c` / `:c1,c2` giving the motion
/// choice of each activated robot in R, S order. Omitted choices are
/// "complete".
std::string formatRound(const SSynchRound& round);
SSynchRound parseRound(std::string_view literal);

/// Finite or generator-backed sequence of rounds. Generators see the index
/// of the round and the world at its start, which is what the adaptive
/// adversaries need; replay always goes through the finite form.
class SSynchSchedule {
 public:
  using Generator =
      std::function<std::optional<SSynchRound>(std::size_t, const WorldConfig&)>;

  static SSynchSchedule fromRounds(std::vector<SSynchRound> rounds);
  static SSynchSchedule fromGenerator(Generator gen);
  /// Both robots every round, motion complete.
  static SSynchSchedule lockstep();

  std::optional<SSynchRound> next(std::size_t index, const WorldConfig& world) const;
  const std::vector<SSynchRound>* rounds() const {
    return gen_ ? nullptr : &rounds_;
  }

 private:
  std::vector<SSynchRound> rounds_;
  Generator gen_;
};

/// Every round nonempty and every window of `window` consecutive rounds
/// activates each robot at least once.
bool isFairSSynch(const std::vector<SSynchRound>& rounds, std::size_t window);

enum class EventKind : std::uint8_t {
  Look,
  ComputeDone,
  CommitLight,
  MoveStart,
  MoveStep,
  MoveEnd
};

std::string_view toString(EventKind kind);

struct AsynchEvent {
  RobotId robot = RobotId::R;
  EventKind kind = EventKind::Look;
  MotionChoice stop;  // MoveStart only
  Scalar fraction;    // MoveStep only: share of the remaining segment, [0, 1]

  friend bool operator==(const AsynchEvent&, const AsynchEvent&) = default;
};

/// `<robot>.<eventName>[:arg]`, e.g. `R.Look`, `S.MoveStart:mid`,
/// `R.MoveStep:1/3`.
std::string formatEvent(const AsynchEvent& event);
AsynchEvent parseEvent(std::string_view literal);

/// Full cycle for one robot: Look, ComputeDone, CommitLight, MoveStart,
/// `steps` MoveSteps, MoveEnd.
std::vector<AsynchEvent> fullCycle(RobotId robot,
                                   MotionChoice stop = MotionChoice::complete(),
                                   std::vector<Scalar> steps = {});

class AsynchEventTimeline {
 public:
  using Generator =
      std::function<std::optional<AsynchEvent>(std::size_t, const WorldConfig&)>;

  static AsynchEventTimeline fromEvents(std::vector<AsynchEvent> events);
  static AsynchEventTimeline fromGenerator(Generator gen);

  std::optional<AsynchEvent> next(std::size_t index, const WorldConfig& world) const;
  const std::vector<AsynchEvent>* events() const {
    return gen_ ? nullptr : &events_;
  }

 private:
  std::vector<AsynchEvent> events_;
  Generator gen_;
};

/// Returns a description of the first violated constraint, if any: per-robot
/// event order, and every window of `window` events containing a MoveEnd of
/// each robot.
std::optional<std::string> checkTimeline(const std::vector<AsynchEvent>& events,
                                         std::optional<std::size_t> window);

}  // namespace rendezvous

#endif  // RENDEZVOUS_SCHEDULE_HPP_
