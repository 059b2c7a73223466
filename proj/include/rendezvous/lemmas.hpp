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

#ifndef RENDEZVOUS_LEMMAS_HPP_
#define RENDEZVOUS_LEMMAS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rendezvous/core.hpp"
#include "rendezvous/protocols.hpp"
#include "rendezvous/rng.hpp"
#include "rendezvous/trace.hpp"

namespace rendezvous {

/// Subset of [0, +inf) with open or closed rational endpoints.
struct Interval {
  Scalar lo;
  bool loClosed = true;
  std::optional<Scalar> hi;  // absent: +inf
  bool hiClosed = false;

  bool contains(const Scalar& x) const;
  bool empty() const;
  bool subsetOf(const Interval& other) const;
  /// `[0,1]`, `[1/4,1/2)`, `(1,+inf)`.
  std::string str() const;
  static Interval parse(std::string_view text);

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Lights of the six-state protocol plus the side-relative forms of S_2.
enum class AbstractLight : std::uint8_t {
  Start, One, TwoLeft, TwoRight, TwoSame, TwoOpposite, Three, Finish
};

std::string_view toString(AbstractLight l);
AbstractLight parseAbstractLight(std::string_view text);

/// (light_r, light_s, I_r, I_s): lights plus the interval containing each
/// robot's perceived distance, in its own unit.
struct AbstractConfig {
  AbstractLight lightR = AbstractLight::Start;
  AbstractLight lightS = AbstractLight::Start;
  Interval intervalR;
  Interval intervalS;

  bool matches(const WorldConfig& world) const;
  AbstractConfig swapped() const { return {lightS, lightR, intervalS, intervalR}; }
  std::string str() const;
};

enum class ClaimKind : std::uint8_t { Claim, Symmetry, Monotone };

struct LemmaClaim {
  std::string id;
  ClaimKind kind = ClaimKind::Claim;
  AbstractConfig config;
  std::size_t depthBound = 8;
  std::vector<std::string> sinks;
};

/// Samples of an interval: closed endpoints, points 1/1000 and 1/10^6 inside
/// each endpoint, the midpoint and `randomInterior` seeded interior points.
/// An unbounded interval is sampled on [lo, 2 max(lo, 1) + 8] plus one far
/// point 1000 max(lo, 1).
std::vector<Scalar> sampleInterval(const Interval& interval, Rng& rng,
                                   std::size_t randomInterior = 3);

/// Concrete worlds realizing a configuration: robots one global unit apart,
/// units chosen so each perceives its sampled distance, every sense pair.
struct Instantiations {
  std::vector<WorldConfig> worlds;
  std::size_t unrealizable = 0;  // sample pairs with exactly one zero distance
};

Instantiations instantiate(const AbstractConfig& config, Rng& rng,
                           std::size_t randomInterior = 3);

enum class LemmaVerdict : std::uint8_t {
  Verified, Counterexample, Inconclusive, Unrealizable
};

std::string_view toString(LemmaVerdict v);

struct LemmaResult {
  std::string id;
  LemmaVerdict verdict = LemmaVerdict::Inconclusive;
  std::size_t depth = 0;  // deepest round at which a branch was accepted
  std::size_t samples = 0;
  std::size_t branches = 0;
  std::string detail;
  std::optional<Trace> counterexample;
  std::string counterexamplePath;
};

struct LemmaContext {
  /// Verified claims usable as sinks.
  std::map<std::string, AbstractConfig> verified;
  /// Role-swapped sinks are usable once symmetry has been verified.
  bool symmetryVerified = false;
  std::uint64_t seed = 0;
  std::size_t randomInterior = 3;
  std::size_t fairnessWindow = 3;
};

/// Bounded exhaustive search over all fair SSynch activation sequences from
/// every instantiation. A branch is accepted when it gathers, reaches a sink
/// configuration, or re-enters the claim's own configuration at a strictly
/// smaller distance. A repeated world on a branch is a counterexample;
/// running out of depth is inconclusive.
LemmaResult checkLemma(const LemmaClaim& claim, const Protocol& protocol,
                       const LemmaContext& context);

/// Role-swapped worlds under role-swapped schedules stay role-swapped, for
/// every schedule of `depth` rounds from every instantiation of `claims`.
LemmaResult checkSymmetry(const std::string& id, const std::vector<LemmaClaim>& claims,
                          const Protocol& protocol, const LemmaContext& context,
                          std::size_t depth);

/// Every sample of an interval lies in each interval of the manifest that
/// contains it.
LemmaResult checkMonotonicity(const std::string& id,
                              const std::vector<LemmaClaim>& claims,
                              const LemmaContext& context);

/// Whitespace-separated lines `id kind lightR lightS intervalR intervalS
/// depth sinks`, `#` comments. Symmetry and monotone lines use `-` for the
/// configuration fields; sinks are comma-separated or `-`.
std::vector<LemmaClaim> parseManifest(std::istream& in);
std::vector<LemmaClaim> loadManifest(const std::string& path);

/// Claims in dependency order (symmetry and monotonicity first). Throws
/// Error on unknown sinks or cycles.
std::vector<LemmaClaim> orderClaims(const std::vector<LemmaClaim>& claims);

struct SuiteOptions {
  std::vector<std::uint64_t> seeds{0, 1, 2};
  std::size_t randomInterior = 3;
  /// Directory for counterexample traces; empty keeps them in memory only.
  std::string counterexampleDir;
};

struct SuiteReport {
  std::vector<LemmaResult> results;
  bool allVerified() const;
  bool anyCounterexample() const;
};

SuiteReport runLemmaSuite(const std::vector<LemmaClaim>& claims,
                          const Protocol& protocol, const SuiteOptions& options);

std::string suiteReportJson(const SuiteReport& report);

}  // namespace rendezvous

#endif  // RENDEZVOUS_LEMMAS_HPP_
