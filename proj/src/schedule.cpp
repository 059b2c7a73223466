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

#include "rendezvous/schedule.hpp"

namespace rendezvous {

std::string formatRound(const SSynchRound& round) {
  std::string out;
  std::string choices;
  bool anyInterrupted = false;
  for (RobotId id : kRobots) {
    if (!round.activates(id)) continue;
    out += toString(id);
    if (!choices.empty()) choices += ',';
    choices += toString(round.motion[index(id)]);
    anyInterrupted |= round.motion[index(id)].kind != StopKind::Complete;
  }
  if (anyInterrupted) out += ":" + choices;
  return out;
}

SSynchRound parseRound(std::string_view literal) {
  auto colon = literal.find(':');
  std::string_view who = literal.substr(0, colon);
  SSynchRound round;
  if (who == "R") {
    round.active = {true, false};
  } else if (who == "S") {
    round.active = {false, true};
  } else if (who == "RS") {
    round.active = {true, true};
  } else {
    throw ScheduleError("bad round literal '" + std::string(literal) + "'");
  }
  if (colon == std::string_view::npos) return round;

  std::string_view rest = literal.substr(colon + 1);
  for (RobotId id : kRobots) {
    if (!round.activates(id)) continue;
    auto comma = rest.find(',');
    round.motion[index(id)] = parseMotionChoice(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
  }
  if (!rest.empty()) {
    throw ScheduleError("too many motion choices in '" + std::string(literal) + "'");
  }
  return round;
}

SSynchSchedule SSynchSchedule::fromRounds(std::vector<SSynchRound> rounds) {
  SSynchSchedule s;
  s.rounds_ = std::move(rounds);
  return s;
}

SSynchSchedule SSynchSchedule::fromGenerator(Generator gen) {
  SSynchSchedule s;
  s.gen_ = std::move(gen);
  return s;
}

SSynchSchedule SSynchSchedule::lockstep() {
  return fromGenerator([](std::size_t, const WorldConfig&) {
    return std::optional<SSynchRound>(SSynchRound{});
  });
}

std::optional<SSynchRound> SSynchSchedule::next(std::size_t index,
                                                const WorldConfig& world) const {
  if (gen_) return gen_(index, world);
  if (index < rounds_.size()) return rounds_[index];
  return std::nullopt;
}

bool isFairSSynch(const std::vector<SSynchRound>& rounds, std::size_t window) {
  std::array<std::size_t, 2> idle{0, 0};
  for (const SSynchRound& r : rounds) {
    if (!r.active[0] && !r.active[1]) return false;
    for (RobotId id : kRobots) {
      idle[index(id)] = r.activates(id) ? 0 : idle[index(id)] + 1;
      if (idle[index(id)] >= window) return false;
    }
  }
  return true;
}

std::string_view toString(EventKind kind) {
  switch (kind) {
    case EventKind::Look: return "Look";
    case EventKind::ComputeDone: return "ComputeDone";
    case EventKind::CommitLight: return "CommitLight";
    case EventKind::MoveStart: return "MoveStart";
    case EventKind::MoveStep: return "MoveStep";
    case EventKind::MoveEnd: return "MoveEnd";
  }
  return "?";
}

std::string formatEvent(const AsynchEvent& e) {
  std::string out = std::string(toString(e.robot)) + "." + std::string(toString(e.kind));
  if (e.kind == EventKind::MoveStart && e.stop.kind != StopKind::Complete) {
    out += ":" + toString(e.stop);
  }
  if (e.kind == EventKind::MoveStep) out += ":" + e.fraction.str();
  return out;
}

AsynchEvent parseEvent(std::string_view literal) {
  auto dot = literal.find('.');
  if (dot == std::string_view::npos) {
    throw ScheduleError("bad event literal '" + std::string(literal) + "'");
  }
  AsynchEvent e;
  e.robot = parseRobotId(literal.substr(0, dot));
  std::string_view rest = literal.substr(dot + 1);
  auto colon = rest.find(':');
  std::string_view name = rest.substr(0, colon);
  std::optional<std::string_view> arg;
  if (colon != std::string_view::npos) arg = rest.substr(colon + 1);

  bool found = false;
  for (EventKind k : {EventKind::Look, EventKind::ComputeDone, EventKind::CommitLight,
                      EventKind::MoveStart, EventKind::MoveStep, EventKind::MoveEnd}) {
    if (toString(k) == name) {
      e.kind = k;
      found = true;
    }
  }
  if (!found) throw ScheduleError("unknown event '" + std::string(name) + "'");

  if (e.kind == EventKind::MoveStart) {
    if (arg) e.stop = parseMotionChoice(*arg);
  } else if (e.kind == EventKind::MoveStep) {
    if (!arg) throw ScheduleError("MoveStep needs a fraction");
    e.fraction = Scalar::parse(*arg);
    if (e.fraction < Scalar(0) || e.fraction > Scalar(1)) {
      throw ScheduleError("MoveStep fraction must lie in [0, 1]");
    }
  } else if (arg) {
    throw ScheduleError("event '" + std::string(name) + "' takes no argument");
  }
  return e;
}

std::vector<AsynchEvent> fullCycle(RobotId robot, MotionChoice stop,
                                   std::vector<Scalar> steps) {
  std::vector<AsynchEvent> out;
  out.push_back({robot, EventKind::Look, {}, {}});
  out.push_back({robot, EventKind::ComputeDone, {}, {}});
  out.push_back({robot, EventKind::CommitLight, {}, {}});
  out.push_back({robot, EventKind::MoveStart, std::move(stop), {}});
  for (Scalar& f : steps) out.push_back({robot, EventKind::MoveStep, {}, std::move(f)});
  out.push_back({robot, EventKind::MoveEnd, {}, {}});
  return out;
}

AsynchEventTimeline AsynchEventTimeline::fromEvents(std::vector<AsynchEvent> events) {
  AsynchEventTimeline t;
  t.events_ = std::move(events);
  return t;
}

AsynchEventTimeline AsynchEventTimeline::fromGenerator(Generator gen) {
  AsynchEventTimeline t;
  t.gen_ = std::move(gen);
  return t;
}

std::optional<AsynchEvent> AsynchEventTimeline::next(std::size_t index,
                                                     const WorldConfig& world) const {
  if (gen_) return gen_(index, world);
  if (index < events_.size()) return events_[index];
  return std::nullopt;
}

namespace {

// Position in the per-robot chain; MoveStep/MoveEnd share the Moving slot.
enum class Expect { Look, Compute, Commit, MoveStart, Moving };

bool accepts(Expect expect, EventKind kind) {
  switch (expect) {
    case Expect::Look: return kind == EventKind::Look;
    case Expect::Compute: return kind == EventKind::ComputeDone;
    case Expect::Commit: return kind == EventKind::CommitLight;
    case Expect::MoveStart: return kind == EventKind::MoveStart;
    case Expect::Moving:
      return kind == EventKind::MoveStep || kind == EventKind::MoveEnd;
  }
  return false;
}

Expect advance(Expect expect, EventKind kind) {
  switch (kind) {
    case EventKind::Look: return Expect::Compute;
    case EventKind::ComputeDone: return Expect::Commit;
    case EventKind::CommitLight: return Expect::MoveStart;
    case EventKind::MoveStart: return Expect::Moving;
    case EventKind::MoveStep: return Expect::Moving;
    case EventKind::MoveEnd: return Expect::Look;
  }
  return expect;
}

}  // namespace

std::optional<std::string> checkTimeline(const std::vector<AsynchEvent>& events,
                                         std::optional<std::size_t> window) {
  std::array<Expect, 2> expect{Expect::Look, Expect::Look};
  for (std::size_t i = 0; i < events.size(); ++i) {
    const AsynchEvent& e = events[i];
    Expect& ex = expect[index(e.robot)];
    if (!accepts(ex, e.kind)) {
      return "event " + std::to_string(i) + " (" + formatEvent(e) +
             ") breaks the per-robot cycle order";
    }
    ex = advance(ex, e.kind);
  }
  if (!window) return std::nullopt;
  // Every full window [k, k + W) must contain a MoveEnd of each robot, i.e.
  // the gap before the first MoveEnd and between consecutive ones is <= W.
  for (RobotId id : kRobots) {
    long last = -1;
    for (std::size_t i = 0; i <= events.size(); ++i) {
      bool end = i == events.size();
      if (end || (events[i].robot == id && events[i].kind == EventKind::MoveEnd)) {
        long next = end ? static_cast<long>(events.size()) : static_cast<long>(i);
        // Events strictly between `last` and `next` form a MoveEnd-free run;
        // at the tail the run only matters if it fills a whole window.
        long gap = next - last - 1;
        if (gap >= static_cast<long>(*window)) {
          return std::string("robot ") + std::string(toString(id)) +
                 " completes no cycle within a window of " +
                 std::to_string(*window) + " events";
        }
        last = next;
      }
    }
  }
  return std::nullopt;
}

}  // namespace rendezvous
