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

#include "rendezvous/core.hpp"

namespace rendezvous {

std::string_view toString(RobotId id) { return id == RobotId::R ? "R" : "S"; }

RobotId parseRobotId(std::string_view text) {
  if (text == "R" || text == "r") return RobotId::R;
  if (text == "S" || text == "s") return RobotId::S;
  throw Error("unknown robot '" + std::string(text) + "'");
}

std::string_view toString(Sense sense) {
  switch (sense) {
    case Sense::PosX: return "PosX";
    case Sense::NegX: return "NegX";
    case Sense::PosY: return "PosY";
    case Sense::NegY: return "NegY";
  }
  return "?";
}

Sense parseSense(std::string_view text) {
  for (Sense s : kAllSenses) {
    if (toString(s) == text) return s;
  }
  throw Error("unknown sense '" + std::string(text) + "'");
}

std::string_view toString(Visibility v) {
  return v == Visibility::FState ? "FState" : "FComm";
}

Visibility parseVisibility(std::string_view text) {
  if (text == "FState" || text == "fstate") return Visibility::FState;
  if (text == "FComm" || text == "fcomm") return Visibility::FComm;
  throw Error("unknown visibility '" + std::string(text) + "'");
}

LocalPoint operator*(const Scalar& lambda, const LocalPoint& p) {
  return {lambda * p.x, lambda * p.y};
}

MotionChoice MotionChoice::atFraction(Scalar f) {
  if (f <= Scalar(0) || f >= Scalar(1)) {
    throw Error("stop fraction must lie in (0, 1), got " + f.str());
  }
  return {StopKind::AtFraction, std::move(f)};
}

std::string toString(const MotionChoice& c) {
  switch (c.kind) {
    case StopKind::Complete: return "complete";
    case StopKind::AtDelta: return "delta";
    case StopKind::AtMid: return "mid";
    case StopKind::AtFraction: return c.fraction.str();
  }
  return "?";
}

MotionChoice parseMotionChoice(std::string_view text) {
  if (text == "complete") return MotionChoice::complete();
  if (text == "delta") return MotionChoice::atDelta();
  if (text == "mid") return MotionChoice::atMid();
  return MotionChoice::atFraction(Scalar::parse(text));
}

WorldConfig makeWorld(const RobotSetup& r, const RobotSetup& s,
                      Visibility visibility, std::optional<Scalar> delta) {
  if (delta && *delta <= Scalar(0)) throw Error("delta must be positive");
  WorldConfig w;
  w.visibility = visibility;
  w.delta = std::move(delta);
  const RobotSetup* setups[2] = {&r, &s};
  for (RobotId id : kRobots) {
    const RobotSetup& setup = *setups[index(id)];
    if (setup.frame.unit <= Scalar(0)) throw Error("frame unit must be positive");
    RobotBody& body = w.robot(id);
    body.id = id;
    body.position = setup.position;
    body.frame = setup.frame;
    body.light = setup.light;
  }
  return w;
}

Snapshot observe(const WorldConfig& world, RobotId observer,
                 const Scalar& observedOtherPosition) {
  const RobotBody& me = world.robot(observer);
  const RobotBody& other = world.robot(otherRobot(observer));
  Scalar coord = (observedOtherPosition - me.position) / me.frame.unit;
  if (senseSign(me.frame.sense) < 0) coord = -coord;

  Snapshot snap;
  if (onXAxis(me.frame.sense)) {
    snap.otherLocal.x = coord;
  } else {
    snap.otherLocal.y = coord;
  }
  snap.dist = abs(coord);
  snap.visibleLight =
      world.visibility == Visibility::FState ? me.light : other.light;
  return snap;
}

Scalar toGlobal(const RobotBody& observer, const LocalPoint& local) {
  const bool xAxis = onXAxis(observer.frame.sense);
  const Scalar& offAxis = xAxis ? local.y : local.x;
  if (!offAxis.isZero()) {
    throw InvariantViolation("destination (" + local.x.str() + ", " +
                             local.y.str() +
                             ") leaves the line through the robots");
  }
  Scalar along = (xAxis ? local.x : local.y) * observer.frame.unit;
  if (senseSign(observer.frame.sense) < 0) along = -along;
  return observer.position + along;
}

MotionChoice normalizeChoice(const Scalar& start, const Scalar& dest,
                             const std::optional<Scalar>& delta,
                             const MotionChoice& choice) {
  if (choice.kind == StopKind::Complete) return choice;
  if (!delta) throw Error("interrupted move requested in a rigid world");
  if (abs(dest - start) <= *delta) return MotionChoice::complete();
  return choice;
}

Scalar stopPoint(const Scalar& start, const Scalar& dest,
                 const std::optional<Scalar>& delta, const MotionChoice& choice) {
  MotionChoice c = normalizeChoice(start, dest, delta, choice);
  if (c.kind == StopKind::Complete) return dest;

  Scalar length = abs(dest - start);
  Scalar progress;
  switch (c.kind) {
    case StopKind::AtDelta: progress = *delta; break;
    case StopKind::AtMid: progress = (length + *delta) / Scalar(2); break;
    case StopKind::AtFraction:
      progress = *delta + c.fraction * (length - *delta);
      break;
    case StopKind::Complete: break;
  }
  return dest > start ? start + progress : start - progress;
}

WorldConfig applyMove(const WorldConfig& world, RobotId mover,
                      const Scalar& destGlobal, const MotionChoice& stopChoice) {
  WorldConfig next = world;
  RobotBody& body = next.robot(mover);
  Scalar start = body.position;
  body.position = stopPoint(start, destGlobal, world.delta, stopChoice);
  if (body.position != destGlobal && abs(body.position - start) < *world.delta) {
    throw InvariantViolation("move advanced less than delta");
  }
  return next;
}

void checkCanonical(const WorldConfig& world) {
  auto check = [](const Scalar& s) {
    if (!s.isCanonical()) {
      throw InvariantViolation("non-canonical scalar " + s.str());
    }
  };
  for (const RobotBody& b : world.robots) {
    check(b.position);
    check(b.frame.unit);
    if (b.pending) {
      check(b.pending->snapshot.dist);
      check(b.pending->destGlobal);
      check(b.pending->moveStart);
      check(b.pending->moveEnd);
    }
  }
  if (world.delta) check(*world.delta);
}

}  // namespace rendezvous
