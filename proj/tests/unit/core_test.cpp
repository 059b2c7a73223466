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

#include <doctest.h>

#include "rendezvous/core.hpp"
#include "rendezvous/rng.hpp"

using namespace rendezvous;

namespace {

RobotBody body(Scalar position, Scalar unit, Sense sense) {
  RobotBody b;
  b.position = position;
  b.frame = {unit, sense};
  return b;
}

WorldConfig pair(Scalar r, Scalar s, std::optional<Scalar> delta = std::nullopt) {
  return makeWorld({r, {}, {}}, {s, {}, {}}, Visibility::FState, delta);
}

}  // namespace

TEST_CASE("scalar parses integers and fractions and rejects decimals") {
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar::parse("-6/4") == Scalar(-3, 2));
  CHECK(Scalar::parse("6/4").str() == "3/2");
  CHECK(Scalar(5).str() == "5/1");
  CHECK_THROWS_AS(Scalar::parse("0.5"), Error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(""), Error);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("scalar arithmetic stays canonical") {
  Scalar x = Scalar(1, 3) + Scalar(1, 6);
  CHECK(x == Scalar(1, 2));
  CHECK(x.isCanonical());
  CHECK(abs(Scalar(-2, 7)) == Scalar(2, 7));
  CHECK(min(Scalar(1), Scalar(1, 2)) == Scalar(1, 2));
  CHECK(Scalar(2, 4).hash() == Scalar(1, 2).hash());
}

TEST_CASE("observe maps the other robot through the observer frame") {
  WorldConfig w = pair(Scalar(0), Scalar(3));
  w.robot(RobotId::R).frame = {Scalar(2), Sense::NegX};
  Snapshot s = observe(w, RobotId::R, Scalar(3));
  CHECK(s.otherLocal == LocalPoint{Scalar(-3, 2), Scalar(0)});
  CHECK(s.dist == Scalar(3, 2));

  Snapshot same = observe(w, RobotId::R, Scalar(0));
  CHECK(isOrigin(same.otherLocal));
  CHECK(same.dist.isZero());

  w.robot(RobotId::R).frame = {Scalar(1), Sense::PosY};
  Snapshot y = observe(w, RobotId::R, Scalar(5));
  CHECK(y.otherLocal == LocalPoint{Scalar(0), Scalar(5)});
  CHECK(y.dist == Scalar(5));
}

TEST_CASE("observe reads the own light under FState and the other's under FComm") {
  WorldConfig w = pair(Scalar(0), Scalar(1));
  w.robot(RobotId::R).light = LightId{1};
  w.robot(RobotId::S).light = LightId{2};
  CHECK(observe(w, RobotId::R, Scalar(1)).visibleLight == LightId{1});
  w.visibility = Visibility::FComm;
  CHECK(observe(w, RobotId::R, Scalar(1)).visibleLight == LightId{2});
}

TEST_CASE("toGlobal inverts observe") {
  CHECK(toGlobal(body(Scalar(0), Scalar(2), Sense::NegX), {Scalar(-3, 2), Scalar(0)}) ==
        Scalar(3));
  CHECK(toGlobal(body(Scalar(4), Scalar(2), Sense::PosX), {Scalar(0), Scalar(0)}) == Scalar(4));
  CHECK(toGlobal(body(Scalar(7), Scalar(1, 3), Sense::PosX), {Scalar(6), Scalar(0)}) ==
        Scalar(9));
  CHECK_THROWS_AS(toGlobal(body(Scalar(0), Scalar(1), Sense::PosX), {Scalar(1), Scalar(1)}),
                  InvariantViolation);
  CHECK_THROWS_AS(toGlobal(body(Scalar(0), Scalar(1), Sense::PosY), {Scalar(1), Scalar(0)}),
                  InvariantViolation);
}

TEST_CASE("observe and toGlobal round-trip on random frames") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Scalar p = rng.gridPoint(Scalar(-10), Scalar(10), 977);
    const Scalar q = rng.gridPoint(Scalar(-10), Scalar(10), 983);
    WorldConfig w = pair(p, q);
    w.robot(RobotId::S).frame = {rng.gridPoint(Scalar(1, 4), Scalar(4), 991) + Scalar(1, 1000),
                                 kAllSenses[rng.below(4)]};
    Snapshot s = observe(w, RobotId::S, p);
    CHECK(toGlobal(w.robot(RobotId::S), s.otherLocal) == p);
    CHECK(s.dist * w.robot(RobotId::S).frame.unit == abs(p - q));
  }
}

TEST_CASE("applyMove follows the motion menu") {
  WorldConfig rigid = pair(Scalar(0), Scalar(20));
  CHECK(applyMove(rigid, RobotId::R, Scalar(5), MotionChoice::complete())
            .robot(RobotId::R).position == Scalar(5));
  CHECK_THROWS_AS(applyMove(rigid, RobotId::R, Scalar(5), MotionChoice::atDelta()), Error);

  WorldConfig loose = pair(Scalar(0), Scalar(20), Scalar(1));
  // moves no longer than delta always complete
  CHECK(applyMove(loose, RobotId::R, Scalar(1, 2), MotionChoice::atDelta())
            .robot(RobotId::R).position == Scalar(1, 2));
  CHECK(normalizeChoice(Scalar(0), Scalar(1, 2), Scalar(1), MotionChoice::atMid()) ==
        MotionChoice::complete());
  CHECK(applyMove(loose, RobotId::R, Scalar(10), MotionChoice::atDelta())
            .robot(RobotId::R).position == Scalar(1));
  CHECK(applyMove(loose, RobotId::R, Scalar(10), MotionChoice::atMid())
            .robot(RobotId::R).position == Scalar(11, 2));
  CHECK(applyMove(loose, RobotId::R, Scalar(-10), MotionChoice::atDelta())
            .robot(RobotId::R).position == Scalar(-1));
  // delta + f (length - delta) = 1 + 1/3 * 9
  CHECK(applyMove(loose, RobotId::R, Scalar(10), MotionChoice::atFraction(Scalar(1, 3)))
            .robot(RobotId::R).position == Scalar(4));
  CHECK_THROWS_AS(MotionChoice::atFraction(Scalar(1)), Error);
}

TEST_CASE("non-rigid moves make at least delta progress") {
  Rng rng(5);
  const Scalar delta(1, 10);
  for (int i = 0; i < 300; ++i) {
    const Scalar dest = rng.gridPoint(Scalar(-3), Scalar(3), 601);
    WorldConfig w = pair(Scalar(0), Scalar(50), delta);
    for (MotionChoice c : {MotionChoice::complete(), MotionChoice::atDelta(), MotionChoice::atMid(),
                           MotionChoice::atFraction(rng.interiorFraction())}) {
      const Scalar end = applyMove(w, RobotId::R, dest, c).robot(RobotId::R).position;
      CHECK(abs(end) >= min(delta, abs(dest)));
      CHECK(abs(end) <= abs(dest));
      CHECK(end * dest >= Scalar(0));
    }
  }
}

TEST_CASE("makeWorld validates frames and delta") {
  CHECK_THROWS_AS(makeWorld({Scalar(0), {Scalar(0), Sense::PosX}, {}}, {Scalar(1), {}, {}},
                            Visibility::FState),
                  Error);
  CHECK_THROWS_AS(makeWorld({Scalar(0), {}, {}}, {Scalar(1), {}, {}}, Visibility::FState,
                            Scalar(-1)),
                  Error);
}

TEST_CASE("senses and robot ids parse back from their names") {
  for (Sense s : kAllSenses) CHECK(parseSense(toString(s)) == s);
  CHECK(parseRobotId("S") == RobotId::S);
  CHECK_THROWS_AS(parseSense("Up"), Error);
}
