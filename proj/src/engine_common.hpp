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

#ifndef RENDEZVOUS_SRC_ENGINE_COMMON_HPP_
#define RENDEZVOUS_SRC_ENGINE_COMMON_HPP_

#include <optional>

#include "rendezvous/schedulers.hpp"

namespace rendezvous::detail {

void checkCompatible(const WorldConfig& world, const Protocol& protocol,
                     const RunOptions& options);

/// Look at the other's current position, asserting the frame round-trip.
Snapshot lookAt(const WorldConfig& world, RobotId id);

std::optional<Scalar> localDelta(const WorldConfig& world, RobotId id);

Verdict finalVerdict(Trace& trace, const Protocol& protocol,
                     const RunOptions& options);

}  // namespace rendezvous::detail

#endif  // RENDEZVOUS_SRC_ENGINE_COMMON_HPP_
