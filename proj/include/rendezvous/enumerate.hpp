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

#ifndef RENDEZVOUS_ENUMERATE_HPP_
#define RENDEZVOUS_ENUMERATE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rendezvous/core.hpp"
#include "rendezvous/protocols.hpp"
#include "rendezvous/schedule.hpp"
#include "rendezvous/trace.hpp"

namespace rendezvous {

struct EnumerationOptions {
  /// Rounds explored from each root; 0 explores until no new state appears.
  std::size_t depth = 25;
  std::size_t fairnessWindow = 3;
  std::size_t maxStates = 2'000'000;

  /// Per-round invariant; returns a description of the violation.
  std::function<std::optional<std::string>(const WorldConfig& from,
                                           const SSynchRound& round,
                                           const WorldConfig& to)>
      check;
  /// Sticky per-branch mark, set once a world on the branch satisfies it.
  std::function<bool(const WorldConfig&)> mark;
};

/**
 * Exhaustive SSynch exploration: every activation subset the fairness
 * window allows, and for non-rigid worlds every stop in {complete, delta,
 * mid} for each move longer than delta. States are worlds up to translation
 * plus the per-robot idle counters and the mark, so every cycle of the state
 * graph is a fair infinite execution. Gathered states are absorbing.
 */
struct EnumerationReport {
  std::size_t roots = 0;
  std::size_t states = 0;
  std::size_t edges = 0;
  std::size_t gathered = 0;
  /// Non-gathered states left unexpanded at the depth bound.
  std::size_t frontier = 0;
  bool stateCapHit = false;
  /// Cyclic strongly connected components among non-gathered states.
  std::size_t fairCycles = 0;
  std::size_t violations = 0;
  std::string firstViolation;
  std::size_t gatheredMarked = 0;
  std::size_t gatheredUnmarked = 0;
  std::size_t firstGatherRound = 0;
  /// Longest path from a root to a gathered state; set when the explored
  /// graph is complete and acyclic.
  std::optional<std::size_t> worstCaseRounds;
  /// Replayable lasso reaching a non-gathering cycle, if any.
  std::optional<Trace> counterexample;

  /// Complete exploration with every fair branch ending gathered.
  bool allFairBranchesGather() const {
    return frontier == 0 && !stateCapHit && fairCycles == 0;
  }
};

EnumerationReport enumerateSSynch(const std::vector<WorldConfig>& roots,
                                  const Protocol& protocol,
                                  const EnumerationOptions& options);

}  // namespace rendezvous

#endif  // RENDEZVOUS_ENUMERATE_HPP_
