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

#include "rendezvous/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>

#include "rendezvous/schedulers.hpp"
#include "rendezvous/verification.hpp"

namespace rendezvous {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Node {
  WorldConfig world;  // translated so that R sits at 0
  std::array<std::uint8_t, 2> idle{0, 0};
  bool marked = false;
  bool gathered = false;
  bool expanded = false;
  std::size_t depth = 0;
  std::uint32_t root = 0;
  std::uint32_t parent = kNone;
  std::string via;  // round literal from the parent
};

WorldConfig normalized(WorldConfig w) {
  Scalar shift = w.robots[0].position;
  for (RobotBody& b : w.robots) b.position = b.position - shift;
  return w;
}

std::string keyOf(const Node& n) {
  std::string k = n.world.robots[1].position.str();
  for (const RobotBody& b : n.world.robots) {
    k += '|';
    k += std::to_string(b.light.value);
    k += b.terminated ? 't' : '-';
  }
  k += '|';
  k += std::to_string(n.idle[0]) + "," + std::to_string(n.idle[1]);
  k += n.marked ? "|m" : "|-";
  return k;
}

std::vector<MotionChoice> stopsFor(const WorldConfig& w, RobotId id,
                                   const Scalar& dest) {
  const Scalar& from = w.robot(id).position;
  if (w.rigid() || abs(dest - from) <= *w.delta) return {MotionChoice::complete()};
  return {MotionChoice::complete(), MotionChoice::atDelta(), MotionChoice::atMid()};
}

// Iterative Tarjan over the non-gathered expanded subgraph. Returns the
// component index of every node (kNone for nodes outside the subgraph) in
// reverse topological order of discovery.
struct Sccs {
  std::vector<std::uint32_t> comp;
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<bool> cyclic;
};

Sccs tarjan(const std::vector<Node>& nodes,
            const std::vector<std::vector<std::uint32_t>>& succ) {
  const std::size_t n = nodes.size();
  Sccs out;
  out.comp.assign(n, kNone);
  std::vector<std::uint32_t> indexOf(n, kNone), low(n, 0);
  std::vector<bool> onStack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0;
  struct Frame {
    std::uint32_t v;
    std::size_t next;
  };
  for (std::uint32_t s = 0; s < n; ++s) {
    if (indexOf[s] != kNone || nodes[s].gathered) continue;
    std::vector<Frame> call{{s, 0}};
    indexOf[s] = low[s] = counter++;
    stack.push_back(s);
    onStack[s] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < succ[f.v].size()) {
        std::uint32_t w = succ[f.v][f.next++];
        if (nodes[w].gathered) continue;
        if (indexOf[w] == kNone) {
          indexOf[w] = low[w] = counter++;
          stack.push_back(w);
          onStack[w] = true;
          call.push_back({w, 0});
        } else if (onStack[w]) {
          low[f.v] = std::min(low[f.v], indexOf[w]);
        }
        continue;
      }
      std::uint32_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] != indexOf[v]) continue;
      std::vector<std::uint32_t> members;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        out.comp[w] = static_cast<std::uint32_t>(out.members.size());
        members.push_back(w);
      } while (w != v);
      bool cyclic = members.size() > 1 ||
                    std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
      out.members.push_back(std::move(members));
      out.cyclic.push_back(cyclic);
    }
  }
  return out;
}

}  // namespace

EnumerationReport enumerateSSynch(const std::vector<WorldConfig>& roots,
                                  const Protocol& protocol,
                                  const EnumerationOptions& options) {
  if (options.fairnessWindow == 0 || options.fairnessWindow > 255) {
    throw Error("fairness window must be in [1, 255]");
  }
  EnumerationReport report;
  report.roots = roots.size();

  std::vector<Node> nodes;
  std::vector<std::vector<std::uint32_t>> succ;
  // first round literal seen for each edge, for counterexamples
  std::vector<std::vector<std::pair<std::uint32_t, std::string>>> labels;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::deque<std::uint32_t> queue;

  auto intern = [&](Node n) -> std::uint32_t {
    if (options.mark && !n.marked) n.marked = options.mark(n.world);
    std::string key = keyOf(n);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (nodes.size() >= options.maxStates) {
      report.stateCapHit = true;
      return kNone;
    }
    n.gathered = isGatheredStable(n.world, protocol);
    auto id = static_cast<std::uint32_t>(nodes.size());
    ids.emplace(std::move(key), id);
    nodes.push_back(std::move(n));
    succ.emplace_back();
    labels.emplace_back();
    queue.push_back(id);
    return id;
  };

  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (protocol.visibilityRequired() != roots[r].visibility) {
      throw Error(protocol.name() + " requires " +
                  std::string(toString(protocol.visibilityRequired())) + " visibility");
    }
    if (!roots[r].idle()) throw Error("enumeration roots must be idle");
    Node n;
    n.world = normalized(roots[r]);
    n.root = static_cast<std::uint32_t>(r);
    intern(std::move(n));
  }

  const std::array<std::array<bool, 2>, 3> subsets{
      {{true, false}, {false, true}, {true, true}}};

  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    if (nodes[id].gathered) continue;
    if (options.depth != 0 && nodes[id].depth >= options.depth) {
      ++report.frontier;
      continue;
    }
    nodes[id].expanded = true;
    const WorldConfig from = nodes[id].world;
    const auto idle = nodes[id].idle;

    for (const auto& active : subsets) {
      std::array<std::uint8_t, 2> nextIdle{};
      bool fair = true;
      for (RobotId r : kRobots) {
        nextIdle[index(r)] =
            active[index(r)] ? 0 : static_cast<std::uint8_t>(idle[index(r)] + 1);
        if (nextIdle[index(r)] >= options.fairnessWindow) fair = false;
      }
      if (!fair) continue;

      SSynchRound base;
      base.active = active;
      RoundOutcome rigid = executeRound(from, protocol, base);
      std::array<std::vector<MotionChoice>, 2> menus{
          std::vector<MotionChoice>{MotionChoice::complete()},
          std::vector<MotionChoice>{MotionChoice::complete()}};
      for (const StepRecord& s : rigid.steps) {
        menus[index(s.actor)] = stopsFor(from, s.actor, rigid.world.robot(s.actor).position);
      }
      for (const MotionChoice& mr : menus[0]) {
        for (const MotionChoice& ms : menus[1]) {
          SSynchRound round = base;
          round.motion = {mr, ms};
          WorldConfig to = executeRound(from, protocol, round).world;
          ++report.edges;
          if (options.check) {
            if (auto v = options.check(from, round, to)) {
              if (report.violations++ == 0) report.firstViolation = *v;
            }
          }
          Node n;
          n.world = normalized(to);
          n.idle = nextIdle;
          n.marked = nodes[id].marked;
          n.depth = nodes[id].depth + 1;
          n.root = nodes[id].root;
          n.parent = id;
          n.via = formatRound(round);
          std::uint32_t target = intern(std::move(n));
          if (target == kNone) continue;
          auto& out = succ[id];
          if (std::find(out.begin(), out.end(), target) == out.end()) {
            out.push_back(target);
            labels[id].emplace_back(target, formatRound(round));
          }
        }
      }
    }
  }

  report.states = nodes.size();
  bool firstGather = true;
  for (const Node& n : nodes) {
    if (!n.gathered) continue;
    ++report.gathered;
    ++(n.marked ? report.gatheredMarked : report.gatheredUnmarked);
    if (firstGather || n.depth < report.firstGatherRound) {
      report.firstGatherRound = n.depth;
      firstGather = false;
    }
  }

  Sccs sccs = tarjan(nodes, succ);
  std::optional<std::uint32_t> cycleNode;
  for (std::size_t c = 0; c < sccs.members.size(); ++c) {
    if (!sccs.cyclic[c]) continue;
    ++report.fairCycles;
    if (!cycleNode) cycleNode = sccs.members[c].front();
  }

  if (cycleNode) {
    // lasso: parent chain to the cycle node, then a cycle inside its SCC
    std::vector<std::string> literals;
    for (std::uint32_t v = *cycleNode; nodes[v].parent != kNone; v = nodes[v].parent) {
      literals.push_back(nodes[v].via);
    }
    std::reverse(literals.begin(), literals.end());
    const std::uint32_t comp = sccs.comp[*cycleNode];
    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::string>> prev;
    std::deque<std::uint32_t> bfs{*cycleNode};
    std::optional<std::pair<std::uint32_t, std::string>> closing;
    while (!bfs.empty() && !closing) {
      std::uint32_t v = bfs.front();
      bfs.pop_front();
      for (const auto& [w, literal] : labels[v]) {
        if (sccs.comp[w] != comp) continue;
        if (w == *cycleNode) {
          closing = std::make_pair(v, literal);
          break;
        }
        if (!prev.count(w)) {
          prev[w] = {v, literal};
          bfs.push_back(w);
        }
      }
    }
    std::vector<std::string> loop{closing->second};
    for (std::uint32_t v = closing->first; v != *cycleNode; v = prev[v].first) {
      loop.push_back(prev[v].second);
    }
    literals.insert(literals.end(), loop.rbegin(), loop.rend());
    std::vector<SSynchRound> rounds;
    for (const std::string& l : literals) rounds.push_back(parseRound(l));
    RunOptions run;
    run.stopWhenGathered = false;
    run.stopOnWitness = true;
    const WorldConfig& root = roots[nodes[*cycleNode].root];
    report.counterexample = runSSynch(root, protocol, SSynchSchedule::fromRounds(rounds),
                                      rounds.size(), run);
  }

  if (report.fairCycles == 0 && report.frontier == 0 && !report.stateCapHit) {
    // Tarjan emits components in reverse topological order, so successors
    // are final before their predecessors.
    std::vector<std::size_t> longest(nodes.size(), 0);
    for (const auto& members : sccs.members) {
      std::uint32_t v = members.front();
      for (std::uint32_t w : succ[v]) longest[v] = std::max(longest[v], longest[w] + 1);
    }
    std::size_t worst = 0;
    for (std::uint32_t v = 0; v < nodes.size(); ++v) {
      if (nodes[v].parent == kNone) worst = std::max(worst, longest[v]);
    }
    report.worstCaseRounds = worst;
  }
  return report;
}

}  // namespace rendezvous
