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

#ifndef RENDEZVOUS_CORE_HPP_
#define RENDEZVOUS_CORE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rendezvous/scalar.hpp"

namespace rendezvous {

/**
 * Geometry substrate.
 *
 * Both robots live on a single global line. Every destination any of the
 * implemented protocols can compute is a multiple of the vector towards the
 * other robot, so motion never leaves the line through the two robots and a
 * one-dimensional embedding is exact. A robot's frame maps that line either
 * onto its local x axis (PosX/NegX) or onto its local y axis (PosY/NegY);
 * the latter exists to drive the y tie-break of the six-state protocol.
 */

enum class RobotId : std::uint8_t { R = 0, S = 1 };

constexpr std::size_t index(RobotId id) { return static_cast<std::size_t>(id); }
constexpr RobotId otherRobot(RobotId id) {
  return id == RobotId::R ? RobotId::S : RobotId::R;
}
constexpr std::array<RobotId, 2> kRobots = {RobotId::R, RobotId::S};

std::string_view toString(RobotId id);
RobotId parseRobotId(std::string_view text);

enum class Sense : std::uint8_t { PosX, NegX, PosY, NegY };

constexpr std::array<Sense, 4> kAllSenses = {Sense::PosX, Sense::NegX,
                                             Sense::PosY, Sense::NegY};

std::string_view toString(Sense sense);
Sense parseSense(std::string_view text);

/// +1 when the local axis points along the global line, -1 otherwise.
constexpr int senseSign(Sense s) {
  return (s == Sense::PosX || s == Sense::PosY) ? 1 : -1;
}
constexpr bool onXAxis(Sense s) { return s == Sense::PosX || s == Sense::NegX; }

struct Frame {
  Scalar unit{1};  // global length of one local unit, > 0
  Sense sense = Sense::PosX;

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Opaque member of a protocol's light alphabet.
struct LightId {
  std::uint8_t value = 0;

  friend auto operator<=>(const LightId&, const LightId&) = default;
};

enum class Visibility : std::uint8_t { FState, FComm };

std::string_view toString(Visibility v);
Visibility parseVisibility(std::string_view text);

struct LocalPoint {
  Scalar x;
  Scalar y;

  friend bool operator==(const LocalPoint&, const LocalPoint&) = default;
};

LocalPoint operator*(const Scalar& lambda, const LocalPoint& p);
inline bool isOrigin(const LocalPoint& p) { return p.x.isZero() && p.y.isZero(); }

struct Snapshot {
  LocalPoint otherLocal;
  Scalar dist;
  /// The light the protocol reads: its own under FState, the other's under FComm.
  std::optional<LightId> visibleLight;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

/// Where an interrupted move may stop. AtFraction is the fuzzing extension:
/// progress = delta + fraction * (length - delta), fraction in (0, 1).
enum class StopKind : std::uint8_t { Complete, AtDelta, AtMid, AtFraction };

struct MotionChoice {
  StopKind kind = StopKind::Complete;
  Scalar fraction;

  static MotionChoice complete() { return {}; }
  static MotionChoice atDelta() { return {StopKind::AtDelta, Scalar()}; }
  static MotionChoice atMid() { return {StopKind::AtMid, Scalar()}; }
  static MotionChoice atFraction(Scalar f);

  friend bool operator==(const MotionChoice&, const MotionChoice&) = default;
};

/// "complete", "delta", "mid" or a rational fraction literal.
std::string toString(const MotionChoice& c);
MotionChoice parseMotionChoice(std::string_view text);

enum class CyclePhase : std::uint8_t { Looked, Computed, Committed, Moving };

/// An asynchronous cycle that has started but not finished.
struct PendingCycle {
  CyclePhase phase = CyclePhase::Looked;
  Snapshot snapshot;
  LightId nextLight;
  Scalar destGlobal;
  bool terminate = false;
  Scalar moveStart;
  Scalar moveEnd;  // stop point fixed at MoveStart

  friend bool operator==(const PendingCycle&, const PendingCycle&) = default;
};

struct RobotBody {
  RobotId id = RobotId::R;
  Scalar position;
  Frame frame;
  LightId light;
  std::optional<PendingCycle> pending;
  bool terminated = false;

  friend bool operator==(const RobotBody&, const RobotBody&) = default;
};

struct WorldConfig {
  std::array<RobotBody, 2> robots;
  std::optional<Scalar> delta;  // absent: rigid motion
  Visibility visibility = Visibility::FState;

  RobotBody& robot(RobotId id) { return robots[index(id)]; }
  const RobotBody& robot(RobotId id) const { return robots[index(id)]; }
  bool rigid() const { return !delta.has_value(); }
  Scalar separation() const { return abs(robots[1].position - robots[0].position); }
  bool idle() const { return !robots[0].pending && !robots[1].pending; }

  friend bool operator==(const WorldConfig&, const WorldConfig&) = default;
};

struct RobotSetup {
  Scalar position;
  Frame frame;
  LightId light;
};

/// Validates unit > 0 and delta > 0.
WorldConfig makeWorld(const RobotSetup& r, const RobotSetup& s,
                      Visibility visibility,
                      std::optional<Scalar> delta = std::nullopt);

/// Look: maps `observedOtherPosition` through the observer's frame.
Snapshot observe(const WorldConfig& world, RobotId observer,
                 const Scalar& observedOtherPosition);

/// Inverse of observe's frame map. Throws InvariantViolation when the point
/// is off the observer's active axis (it would leave the global line).
Scalar toGlobal(const RobotBody& observer, const LocalPoint& local);

/// Point at which a move from `start` towards `dest` ends.
Scalar stopPoint(const Scalar& start, const Scalar& dest,
                 const std::optional<Scalar>& delta, const MotionChoice& choice);

/// Interruptions of a move no longer than delta become Complete. Throws
/// Error for an interruption in a rigid world.
MotionChoice normalizeChoice(const Scalar& start, const Scalar& dest,
                             const std::optional<Scalar>& delta,
                             const MotionChoice& choice);

WorldConfig applyMove(const WorldConfig& world, RobotId mover,
                      const Scalar& destGlobal, const MotionChoice& stopChoice);

/// Throws InvariantViolation unless every Scalar in the world is canonical.
void checkCanonical(const WorldConfig& world);

}  // namespace rendezvous

#endif  // RENDEZVOUS_CORE_HPP_
