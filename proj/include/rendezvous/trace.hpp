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

#ifndef RENDEZVOUS_TRACE_HPP_
#define RENDEZVOUS_TRACE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rendezvous/core.hpp"
#include "rendezvous/protocols.hpp"

namespace rendezvous {

enum class Verdict : std::uint8_t {
  GatheredStable,
  BudgetExhausted,
  NonGatheringWitness
};

std::string_view toString(Verdict v);
Verdict parseVerdict(std::string_view text);

enum class EngineKind : std::uint8_t { SSynch, ASynch };

std::string_view toString(EngineKind k);
EngineKind parseEngineKind(std::string_view text);

/// A period of a non-gathering execution: the configuration class at entry
/// `end` equals the one at entry `start` (entry 0 is the initial world), the
/// distance stays positive throughout, and both robots act in between.
struct CycleWitness {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string classDescription;

  std::size_t period() const { return end - start; }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// One robot's part in a round or event.
struct StepRecord {
  RobotId actor = RobotId::R;
  std::optional<Snapshot> snapshot;
  std::optional<ProtocolOutput> output;
  std::optional<MotionChoice> motion;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct TraceEntry {
  std::size_t ordinal = 0;  // 1-based
  std::string schedule;     // round or event literal
  std::vector<StepRecord> steps;
  WorldConfig world;        // after the round/event

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Trace {
  std::string protocol;
  EngineKind engine = EngineKind::SSynch;
  WorldConfig initial;
  std::vector<TraceEntry> entries;
  Verdict verdict = Verdict::BudgetExhausted;
  std::optional<CycleWitness> witness;
  std::optional<std::uint64_t> frameSeed;  // per-cycle frame re-randomization
  bool stopWhenGathered = true;
  bool stopOnWitness = false;

  /// World at entry i, where entry 0 is the initial world.
  const WorldConfig& worldAt(std::size_t i) const {
    return i == 0 ? initial : entries[i - 1].world;
  }
  const WorldConfig& finalWorld() const { return worldAt(entries.size()); }
  std::vector<std::string> scheduleLiterals() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

}  // namespace rendezvous

#endif  // RENDEZVOUS_TRACE_HPP_
