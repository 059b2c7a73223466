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

#ifndef RENDEZVOUS_VERIFICATION_HPP_
#define RENDEZVOUS_VERIFICATION_HPP_

#include <optional>
#include <string>

#include "rendezvous/core.hpp"
#include "rendezvous/protocols.hpp"
#include "rendezvous/trace.hpp"

namespace rendezvous {

/**
 * True iff the robots coincide and can never separate again.
 *
 * At distance zero the only thing that can still change is the light pair,
 * so the check enumerates every light pair (plus uncommitted lights of
 * in-flight cycles) reachable under any interleaving of cycles and requires
 * every compute along the way to stay put. In-flight moves must already end
 * at the meeting point. The enumeration covers asynchronous interleavings,
 * which include all semi-synchronous ones.
 *
 * Throws Error if the protocol computes a nonzero destination at distance
 * zero.
 */
bool isGatheredStable(const WorldConfig& world, const Protocol& protocol);

/// Configuration class used for cycle detection, or nullopt for worlds that
/// are not quiescent (an asynchronous cycle in flight). Class-L dynamics are
/// equivariant under every affine map of the line, so for them the class is
/// the light pair alone; otherwise it is the exact world up to translation.
std::optional<std::string> configurationClass(const WorldConfig& world,
                                              bool classL);

/// First repetition of a configuration class with positive distance at every
/// entry in between and both robots acting in the period.
std::optional<CycleWitness> detectNonGatheringCycle(const Trace& trace,
                                                    bool classL);
std::optional<CycleWitness> detectNonGatheringCycle(const Trace& trace);

struct WitnessReplay {
  bool ok = false;
  std::string failure;
};

/// Replays the witness period `periods` times from the end of the period and
/// checks that the distance stays positive and the class sequence repeats.
WitnessReplay replayWitness(const Trace& trace, const Protocol& protocol,
                            std::size_t periods = 10);

}  // namespace rendezvous

#endif  // RENDEZVOUS_VERIFICATION_HPP_
