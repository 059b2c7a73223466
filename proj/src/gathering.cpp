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

#include <set>
#include <tuple>
#include <vector>

#include "rendezvous/verification.hpp"

namespace rendezvous {

namespace {

// Per-robot state at distance zero: the committed light, a computed light
// not yet committed, and whether the robot is (or will be) terminated.
struct Agent {
  LightId light;
  std::optional<LightId> uncommitted;
  bool terminateOnCommit = false;
  bool terminated = false;

  auto key() const {
    return std::make_tuple(light.value,
                           uncommitted ? int(uncommitted->value) : -1,
                           terminateOnCommit, terminated);
  }
};

using Node = std::array<Agent, 2>;

ProtocolOutput stayOrThrow(const Protocol& protocol, const Snapshot& snap,
                           const std::optional<Scalar>& deltaLocal) {
  ProtocolOutput po = protocol.compute(snap, deltaLocal);
  if (!isOrigin(po.destLocal)) {
    throw Error(protocol.name() +
                " computes a nonzero destination at distance zero");
  }
  return po;
}

}  // namespace

bool isGatheredStable(const WorldConfig& world, const Protocol& protocol) {
  if (world.robots[0].position != world.robots[1].position) return false;
  const Scalar& here = world.robots[0].position;

  auto deltaLocal = [&](RobotId id) -> std::optional<Scalar> {
    if (!world.delta) return std::nullopt;
    return *world.delta / world.robot(id).frame.unit;
  };

  Node start;
  for (RobotId id : kRobots) {
    const RobotBody& b = world.robot(id);
    Agent& a = start[index(id)];
    a.light = b.light;
    a.terminated = b.terminated;
    if (!b.pending) continue;
    const PendingCycle& c = b.pending.value();
    switch (c.phase) {
      case CyclePhase::Looked: {
        // the snapshot may predate the meeting; its destination must be here
        ProtocolOutput po = protocol.compute(c.snapshot, deltaLocal(id));
        if (toGlobal(b, po.destLocal) != here) return false;
        a.uncommitted = po.nextLight;
        a.terminateOnCommit = po.terminate;
        break;
      }
      case CyclePhase::Computed:
        if (c.destGlobal != here) return false;
        a.uncommitted = c.nextLight;
        a.terminateOnCommit = c.terminate;
        break;
      case CyclePhase::Committed:
      case CyclePhase::Moving:
        if (c.destGlobal != here) return false;
        if (c.phase == CyclePhase::Moving && c.moveEnd != here) return false;
        a.terminated = a.terminated || c.terminate;
        break;
    }
  }

  // Moves at distance zero are null, so a cycle reduces to look+compute
  // followed later by commit. Exploring both steps independently for both
  // robots covers every asynchronous interleaving.
  auto nodeKey = [](const Node& n) { return std::make_pair(n[0].key(), n[1].key()); };
  std::set<decltype(nodeKey(start))> seen{nodeKey(start)};
  std::vector<Node> stack{start};
  while (!stack.empty()) {
    Node n = stack.back();
    stack.pop_back();
    for (RobotId id : kRobots) {
      const Agent& a = n[index(id)];
      if (a.terminated) continue;
      Node next = n;
      Agent& b = next[index(id)];
      if (a.uncommitted) {
        b.light = *a.uncommitted;
        b.uncommitted.reset();
        b.terminated = a.terminateOnCommit;
        b.terminateOnCommit = false;
      } else {
        Snapshot snap;
        snap.visibleLight = world.visibility == Visibility::FState
                                ? a.light
                                : n[index(otherRobot(id))].light;
        ProtocolOutput po = stayOrThrow(protocol, snap, deltaLocal(id));
        b.uncommitted = po.nextLight;
        b.terminateOnCommit = po.terminate;
      }
      if (seen.insert(nodeKey(next)).second) stack.push_back(next);
    }
  }
  return true;
}

}  // namespace rendezvous
