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

#ifndef RENDEZVOUS_PROTOCOLS_HPP_
#define RENDEZVOUS_PROTOCOLS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rendezvous/core.hpp"

namespace rendezvous {

class LightAlphabet {
 public:
  LightAlphabet() = default;
  LightAlphabet(std::string name, std::vector<std::string> lights,
                LightId start = LightId{0});

  const std::string& name() const { return name_; }
  std::size_t size() const { return lights_.size(); }
  LightId start() const { return start_; }
  bool contains(LightId id) const { return id.value < lights_.size(); }
  const std::string& nameOf(LightId id) const;
  /// Throws Error for an unknown name.
  LightId lookup(std::string_view name) const;
  std::vector<LightId> all() const;

 private:
  std::string name_;
  std::vector<std::string> lights_;
  LightId start_;
};

struct ProtocolOutput {
  LightId nextLight;
  LocalPoint destLocal;  // origin = stay
  bool terminate = false;

  friend bool operator==(const ProtocolOutput&, const ProtocolOutput&) = default;
};

struct ClassLEntry {
  Scalar lambda;
  LightId next;
};

/// A protocol whose destination is lambda * other.position with lambda and
/// the next light a function of the visible light only.
struct ClassLTable {
  LightAlphabet alphabet;
  std::vector<ClassLEntry> entries;  // indexed by LightId::value

  const ClassLEntry& entry(LightId id) const;
};

/// Grammar: `light=lambda,next;light=lambda,next;...`. The first light
/// listed is the start light; every referenced light must have an entry.
ClassLTable parseClassLTable(std::string_view spec);
std::string formatClassLTable(const ClassLTable& table);

ProtocolOutput classLStep(const ClassLTable& table, LightId visibleLight,
                          const LocalPoint& otherLocal);

/**
 * A Compute function plus the metadata the engines need. Computes are pure:
 * the output depends only on the snapshot and the (locally scaled) delta.
 */
class Protocol {
 public:
  using ComputeFn = std::function<ProtocolOutput(
      const Snapshot&, const std::optional<Scalar>& deltaLocal)>;

  Protocol(std::string name, LightAlphabet alphabet, Visibility visibility,
           bool needsDelta, ComputeFn compute,
           std::optional<ClassLTable> classL = std::nullopt);

  const std::string& name() const { return name_; }
  const LightAlphabet& alphabet() const { return alphabet_; }
  Visibility visibilityRequired() const { return visibility_; }
  bool needsDelta() const { return needsDelta_; }
  bool isClassL() const { return classL_.has_value(); }
  const std::optional<ClassLTable>& classLTable() const { return classL_; }

  /// Runs the compute and checks alphabet closure and collinearity of the
  /// destination (it must be on the snapshot's active axis or the origin).
  ProtocolOutput compute(const Snapshot& snapshot,
                         const std::optional<Scalar>& deltaLocal) const;

 private:
  std::string name_;
  LightAlphabet alphabet_;
  Visibility visibility_;
  bool needsDelta_;
  ComputeFn compute_;
  std::optional<ClassLTable> classL_;
};

// Light identifiers, in alphabet order.
namespace alg1 {
inline constexpr LightId kStart{0}, kOne{1}, kTwoLeft{2}, kTwoRight{3},
    kThree{4}, kFinish{5};
}
namespace alg2 {
inline constexpr LightId kTest{0}, kMeAtLeast1{1}, kMeBelow1{2},
    kApproaching{3}, kBothBelow1{4}, kMovingAway{5}, kYouMoved{6}, kComing{7},
    kWaiting{8}, kBothEqual2{9}, kStay{10}, kHalted{11};
}
namespace alg3 {
inline constexpr LightId kA{0}, kB{1}, kC{2};
}
namespace alg4 {
inline constexpr LightId kA{0}, kB{1}, kC{2};
}
namespace alg5 {
inline constexpr LightId kStart{0}, kReady{1}, kCome{2};
}

LightAlphabet alg1Alphabet();
LightAlphabet alg2Alphabet();
LightAlphabet alg3Alphabet();
LightAlphabet alg4Alphabet();
LightAlphabet alg5Alphabet();

enum class Side : std::uint8_t { Left, Right };
/// x sign first, then y sign when x = 0. Undefined for the origin.
Side sideOf(const LocalPoint& otherLocal);
/// Process-wide count of sideOf calls decided by the y coordinate.
std::uint64_t yTieBreakCount();

/// Six internal states, FState, rigid SSynch, no unit agreement.
ProtocolOutput alg1Step(const Snapshot& snapshot);
/// Twelve visible states, FComm, rigid ASynch, no unit agreement.
ProtocolOutput alg2Step(const Snapshot& snapshot);
/// Three visible states, FComm, non-rigid SSynch, class L.
ProtocolOutput alg3Step(const Snapshot& snapshot);
/// Three internal states, FState, non-rigid SSynch, knows delta.
ProtocolOutput alg4Step(const Snapshot& snapshot, const Scalar& deltaLocal);
/// Three visible states, FComm, non-rigid ASynch, knows delta.
ProtocolOutput alg5Step(const Snapshot& snapshot, const Scalar& deltaLocal);

ClassLTable alg3Table();

Protocol makeAlg1();
Protocol makeAlg2();
Protocol makeAlg3();
Protocol makeAlg4();
Protocol makeAlg5();
Protocol makeClassL(const ClassLTable& table, Visibility visibility);

inline constexpr std::string_view kAlg1Name = "alg1-fstate-6";
inline constexpr std::string_view kAlg2Name = "alg2-fcomm-12";
inline constexpr std::string_view kAlg3Name = "alg3-fcomm-3";
inline constexpr std::string_view kAlg4Name = "alg4-fstate-delta-3";
inline constexpr std::string_view kAlg5Name = "alg5-fcomm-delta-3";

/// Registry lookup. `classL:<table>` names build a class-L protocol with the
/// given visibility (FState when unspecified).
Protocol protocolByName(std::string_view name,
                        std::optional<Visibility> classLVisibility = std::nullopt);
std::vector<std::string> registeredProtocolNames();

}  // namespace rendezvous

#endif  // RENDEZVOUS_PROTOCOLS_HPP_
