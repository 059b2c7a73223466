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

#include "rendezvous/protocols.hpp"

#include <atomic>
#include <sstream>
#include <unordered_map>

namespace rendezvous {

LightAlphabet::LightAlphabet(std::string name, std::vector<std::string> lights,
                             LightId start)
    : name_(std::move(name)), lights_(std::move(lights)), start_(start) {
  if (lights_.empty() || lights_.size() > 255) {
    throw Error("alphabet '" + name_ + "' must have 1..255 lights");
  }
  if (!contains(start_)) throw Error("start light outside alphabet");
}

const std::string& LightAlphabet::nameOf(LightId id) const {
  if (!contains(id)) throw Error("light outside alphabet '" + name_ + "'");
  return lights_[id.value];
}

LightId LightAlphabet::lookup(std::string_view name) const {
  for (std::size_t i = 0; i < lights_.size(); ++i) {
    if (lights_[i] == name) return LightId{static_cast<std::uint8_t>(i)};
  }
  throw Error("unknown light '" + std::string(name) + "' in alphabet '" +
              name_ + "'");
}

std::vector<LightId> LightAlphabet::all() const {
  std::vector<LightId> out;
  for (std::size_t i = 0; i < lights_.size(); ++i) {
    out.push_back(LightId{static_cast<std::uint8_t>(i)});
  }
  return out;
}

const ClassLEntry& ClassLTable::entry(LightId id) const {
  if (id.value >= entries.size()) throw Error("light outside class-L table");
  return entries[id.value];
}

ClassLTable parseClassLTable(std::string_view spec) {
  struct Raw {
    std::string light;
    Scalar lambda;
    std::string next;
  };
  std::vector<Raw> raws;
  std::string item;
  std::stringstream in{std::string(spec)};
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    auto comma = item.find(',', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || comma == std::string::npos || eq == 0) {
      throw Error("bad class-L entry '" + item + "' (want light=lambda,next)");
    }
    raws.push_back({item.substr(0, eq),
                    Scalar::parse(item.substr(eq + 1, comma - eq - 1)),
                    item.substr(comma + 1)});
  }
  if (raws.empty()) throw Error("empty class-L table");

  std::vector<std::string> names;
  for (const Raw& r : raws) {
    for (const std::string& n : names) {
      if (n == r.light) throw Error("duplicate class-L light '" + r.light + "'");
    }
    names.push_back(r.light);
  }
  ClassLTable table;
  table.alphabet = LightAlphabet("classL", names);
  for (const Raw& r : raws) {
    table.entries.push_back({r.lambda, table.alphabet.lookup(r.next)});
  }
  return table;
}

std::string formatClassLTable(const ClassLTable& table) {
  std::string out;
  for (LightId id : table.alphabet.all()) {
    const ClassLEntry& e = table.entry(id);
    if (!out.empty()) out += ';';
    std::string lambda = e.lambda.str();
    if (lambda.size() > 2 && lambda.ends_with("/1")) lambda.resize(lambda.size() - 2);
    out += table.alphabet.nameOf(id) + "=" + lambda + "," +
           table.alphabet.nameOf(e.next);
  }
  return out;
}

ProtocolOutput classLStep(const ClassLTable& table, LightId visibleLight,
                          const LocalPoint& otherLocal) {
  const ClassLEntry& e = table.entry(visibleLight);
  return {e.next, e.lambda * otherLocal, false};
}

Protocol::Protocol(std::string name, LightAlphabet alphabet,
                   Visibility visibility, bool needsDelta, ComputeFn compute,
                   std::optional<ClassLTable> classL)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      visibility_(visibility),
      needsDelta_(needsDelta),
      compute_(std::move(compute)),
      classL_(std::move(classL)) {}

ProtocolOutput Protocol::compute(const Snapshot& snapshot,
                                 const std::optional<Scalar>& deltaLocal) const {
  if (!snapshot.visibleLight || !alphabet_.contains(*snapshot.visibleLight)) {
    throw Error(name_ + ": visible light outside alphabet");
  }
  if (needsDelta_ && !deltaLocal) throw Error(name_ + " needs delta");
  ProtocolOutput out = compute_(snapshot, deltaLocal);
  if (!alphabet_.contains(out.nextLight)) {
    throw InvariantViolation(name_ + ": next light outside alphabet");
  }
  // Collinearity: the destination is a multiple of the vector to the other.
  const LocalPoint& p = snapshot.otherLocal;
  const LocalPoint& d = out.destLocal;
  if (!isOrigin(d) && (p.x * d.y != p.y * d.x || isOrigin(p))) {
    throw InvariantViolation(name_ + ": destination off the robots' line");
  }
  if (out.terminate && !snapshot.dist.isZero()) {
    throw InvariantViolation(name_ + ": terminate at nonzero distance");
  }
  return out;
}

LightAlphabet alg1Alphabet() {
  return LightAlphabet("alg1", {"S_start", "S_1", "S_2^left", "S_2^right",
                                "S_3", "S_finish"});
}

LightAlphabet alg2Alphabet() {
  return LightAlphabet("alg2", {"Test", "Me>=1", "Me<1", "Approaching",
                                "Both<1", "MovingAway", "YouMoved", "Coming",
                                "Waiting", "Both=2", "Stay", "Halted"});
}

LightAlphabet alg3Alphabet() { return LightAlphabet("alg3", {"A", "B", "C"}); }
LightAlphabet alg4Alphabet() { return LightAlphabet("alg4", {"A", "B", "C"}); }
LightAlphabet alg5Alphabet() {
  return LightAlphabet("alg5", {"Start", "Ready", "Come"});
}

namespace {
std::atomic<std::uint64_t> yTieBreaks{0};
}  // namespace

std::uint64_t yTieBreakCount() { return yTieBreaks.load(); }

Side sideOf(const LocalPoint& p) {
  if (p.x.sign() > 0) return Side::Right;
  if (p.x.sign() < 0) return Side::Left;
  ++yTieBreaks;
  if (p.y.sign() > 0) return Side::Right;  // other.position.x = 0
  return Side::Left;
}

namespace {

const LocalPoint kOrigin{};

LocalPoint scaled(const LocalPoint& p, const Scalar& lambda) { return lambda * p; }

LightId alg1SideLight(Side side) {
  return side == Side::Left ? alg1::kTwoLeft : alg1::kTwoRight;
}

}  // namespace

ProtocolOutput alg1Step(const Snapshot& snap) {
  const LightId state = *snap.visibleLight;
  const Scalar& dist = snap.dist;
  const LocalPoint& other = snap.otherLocal;
  if (dist.isZero()) return {state, kOrigin, true};

  const Side dir = sideOf(other);
  const Scalar one(1), half(1, 2), quarter(1, 4);

  if (state == alg1::kStart) {
    if (dist < one) return {alg1::kOne, scaled(other, one - one / dist), false};
    return {alg1SideLight(dir), other, false};
  }
  if (state == alg1::kOne) {
    if (dist <= one) return {alg1::kFinish, kOrigin, false};
    return {alg1SideLight(dir), other, false};
  }
  if (state == alg1::kTwoLeft || state == alg1::kTwoRight) {
    const Side d = state == alg1::kTwoLeft ? Side::Left : Side::Right;
    if (dir == d) return {alg1::kFinish, other, false};
    if (dist < half) return {alg1::kFinish, kOrigin, false};  // side switch detected
    return {dist < one ? alg1::kThree : state, scaled(other, half), false};
  }
  if (state == alg1::kThree) {
    if (dist < quarter) return {alg1::kFinish, kOrigin, false};
    return {alg1::kFinish, other, false};
  }
  // S_finish
  if (dist <= one) return {alg1::kFinish, kOrigin, false};
  return {alg1::kFinish, other, false};
}

ProtocolOutput alg2Step(const Snapshot& snap) {
  using namespace alg2;
  const LightId seen = *snap.visibleLight;
  const Scalar& dist = snap.dist;
  const LocalPoint& other = snap.otherLocal;
  const Scalar one(1), two(2), half(1, 2);

  if (seen == kTest) {
    return {dist >= one ? kMeAtLeast1 : kMeBelow1, kOrigin, false};
  }
  if (seen == kMeAtLeast1) return {kApproaching, scaled(other, half), false};
  if (seen == kApproaching) return {kTest, kOrigin, false};
  if (seen == kMeBelow1) {
    return {dist >= one ? kMeAtLeast1 : kBothBelow1, kOrigin, false};
  }
  if (seen == kBothBelow1) {
    if (dist.isZero()) return {kHalted, kOrigin, false};
    if (dist < one) {
      // moving away by 1 - dist/2
      return {kMovingAway, scaled(other, half - one / dist), false};
    }
    return {kMovingAway, kOrigin, false};
  }
  if (seen == kMovingAway) return {kYouMoved, kOrigin, false};
  if (seen == kYouMoved) return {kComing, other, false};
  if (seen == kComing) return {kWaiting, kOrigin, false};
  if (seen == kWaiting) {
    if (dist > two) return {kStay, other, false};  // my unit is smaller
    if (dist == two) return {kBothEqual2, kOrigin, false};
    return {kHalted, kOrigin, false};
  }
  if (seen == kBothEqual2) {
    return {kStay, dist == two ? scaled(other, half) : kOrigin, false};
  }
  if (seen == kStay) return {kHalted, kOrigin, false};
  // Halted
  if (dist.isZero()) return {kHalted, kOrigin, true};
  return {kStay, other, false};
}

ClassLTable alg3Table() {
  ClassLTable t;
  t.alphabet = alg3Alphabet();
  t.entries = {{Scalar(1, 2), alg3::kB}, {Scalar(0), alg3::kC},
               {Scalar(1), alg3::kA}};
  return t;
}

ProtocolOutput alg3Step(const Snapshot& snap) {
  const LightId seen = *snap.visibleLight;
  const LocalPoint& other = snap.otherLocal;
  if (seen == alg3::kA) return {alg3::kB, scaled(other, Scalar(1, 2)), false};
  if (seen == alg3::kB) return {alg3::kC, kOrigin, false};
  return {alg3::kA, other, false};
}

ProtocolOutput alg4Step(const Snapshot& snap, const Scalar& delta) {
  const LightId state = *snap.visibleLight;
  const Scalar& dist = snap.dist;
  const LocalPoint& other = snap.otherLocal;
  if (dist.isZero()) return {state, kOrigin, true};

  const Scalar halfDelta = delta / Scalar(2);
  const bool inBand = halfDelta <= dist && dist < delta;
  if (state == alg4::kA) {
    if (dist < halfDelta) {
      // reach the point at distance delta/2 from the other
      return {alg4::kA, scaled(other, Scalar(1) - delta / (Scalar(2) * dist)), false};
    }
    if (inBand) return {alg4::kB, other, false};  // gather or switch positions
    return {alg4::kA,
            scaled(other, Scalar(1, 2) - delta / (Scalar(4) * dist)), false};
  }
  if (state == alg4::kB) {
    if (inBand) return {alg4::kC, scaled(other, Scalar(1, 2)), false};
    return {alg4::kB, kOrigin, false};
  }
  return {alg4::kC, other, false};
}

ProtocolOutput alg5Step(const Snapshot& snap, const Scalar& delta) {
  const LightId seen = *snap.visibleLight;
  const Scalar& dist = snap.dist;
  const LocalPoint& other = snap.otherLocal;
  const Scalar twoDelta = Scalar(2) * delta;

  if (seen == alg5::kStart) {
    if (dist.isZero()) return {alg5::kCome, kOrigin, false};
    if (dist <= delta) {
      // moving delta/2 away
      return {alg5::kStart, scaled(other, -delta / (Scalar(2) * dist)), false};
    }
    if (dist > twoDelta) {
      // moving delta/2 in
      return {alg5::kStart, scaled(other, delta / (Scalar(2) * dist)), false};
    }
    return {alg5::kReady, kOrigin, false};
  }
  if (seen == alg5::kReady) {
    const bool band = delta < dist && dist <= twoDelta;
    return {alg5::kCome, band ? scaled(other, Scalar(1, 2)) : kOrigin, false};
  }
  if (dist.isZero()) return {alg5::kCome, kOrigin, true};
  return {alg5::kReady, other, false};
}

Protocol makeAlg1() {
  return Protocol(std::string(kAlg1Name), alg1Alphabet(), Visibility::FState,
                  false, [](const Snapshot& s, const std::optional<Scalar>&) {
                    return alg1Step(s);
                  });
}

Protocol makeAlg2() {
  return Protocol(std::string(kAlg2Name), alg2Alphabet(), Visibility::FComm,
                  false, [](const Snapshot& s, const std::optional<Scalar>&) {
                    return alg2Step(s);
                  });
}

Protocol makeAlg3() {
  return Protocol(std::string(kAlg3Name), alg3Alphabet(), Visibility::FComm,
                  false,
                  [](const Snapshot& s, const std::optional<Scalar>&) {
                    return alg3Step(s);
                  },
                  alg3Table());
}

Protocol makeAlg4() {
  return Protocol(std::string(kAlg4Name), alg4Alphabet(), Visibility::FState,
                  true, [](const Snapshot& s, const std::optional<Scalar>& d) {
                    return alg4Step(s, *d);
                  });
}

Protocol makeAlg5() {
  return Protocol(std::string(kAlg5Name), alg5Alphabet(), Visibility::FComm,
                  true, [](const Snapshot& s, const std::optional<Scalar>& d) {
                    return alg5Step(s, *d);
                  });
}

Protocol makeClassL(const ClassLTable& table, Visibility visibility) {
  if (table.entries.size() != table.alphabet.size()) {
    throw Error("class-L table must be total over its alphabet");
  }
  return Protocol("classL:" + formatClassLTable(table), table.alphabet,
                  visibility, false,
                  [table](const Snapshot& s, const std::optional<Scalar>&) {
                    return classLStep(table, *s.visibleLight, s.otherLocal);
                  },
                  table);
}

Protocol protocolByName(std::string_view name,
                        std::optional<Visibility> classLVisibility) {
  if (name == kAlg1Name) return makeAlg1();
  if (name == kAlg2Name) return makeAlg2();
  if (name == kAlg3Name) return makeAlg3();
  if (name == kAlg4Name) return makeAlg4();
  if (name == kAlg5Name) return makeAlg5();
  if (name.starts_with("classL:")) {
    return makeClassL(parseClassLTable(name.substr(7)),
                      classLVisibility.value_or(Visibility::FState));
  }
  throw Error("unknown protocol '" + std::string(name) + "'");
}

std::vector<std::string> registeredProtocolNames() {
  return {std::string(kAlg1Name), std::string(kAlg2Name), std::string(kAlg3Name),
          std::string(kAlg4Name), std::string(kAlg5Name)};
}

}  // namespace rendezvous
