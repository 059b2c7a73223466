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

#ifndef RENDEZVOUS_RNG_HPP_
#define RENDEZVOUS_RNG_HPP_

#include <cstdint>
#include <random>

#include "rendezvous/scalar.hpp"

namespace rendezvous {

/// Seeded generator with platform-independent draws (the std distributions
/// are implementation-defined, mt19937_64's raw output is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return below(2) == 1; }

  /// Uniform on the grid {k / den : 0 < k < den}, i.e. strictly inside (0, 1).
  Scalar interiorFraction(long den = 1024) {
    return Scalar(static_cast<long>(below(static_cast<std::uint64_t>(den - 1))) + 1, den);
  }

  /// Uniform on the grid lo + k * (hi - lo) / steps, k in [0, steps].
  Scalar gridPoint(const Scalar& lo, const Scalar& hi, long steps = 4096) {
    long k = static_cast<long>(below(static_cast<std::uint64_t>(steps) + 1));
    return lo + (hi - lo) * Scalar(k, steps);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rendezvous

#endif  // RENDEZVOUS_RNG_HPP_
