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

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rendezvous/lemmas.hpp"

namespace rendezvous {

bool Interval::contains(const Scalar& x) const {
  if (loClosed ? x < lo : x <= lo) return false;
  if (!hi) return true;
  return hiClosed ? x <= *hi : x < *hi;
}

bool Interval::empty() const {
  if (!hi) return false;
  if (*hi < lo) return true;
  return *hi == lo && !(loClosed && hiClosed);
}

bool Interval::subsetOf(const Interval& o) const {
  if (empty()) return true;
  // lower end
  if (lo < o.lo) return false;
  if (lo == o.lo && loClosed && !o.loClosed) return false;
  // upper end
  if (!hi) return !o.hi;
  if (!o.hi) return true;
  if (*hi > *o.hi) return false;
  if (*hi == *o.hi && hiClosed && !o.hiClosed) return false;
  return true;
}

std::string Interval::str() const {
  std::string out = loClosed ? "[" : "(";
  out += lo.raw().get_den() == 1 ? lo.raw().get_num().get_str() : lo.str();
  out += ",";
  if (hi) {
    out += hi->raw().get_den() == 1 ? hi->raw().get_num().get_str() : hi->str();
    out += hiClosed ? "]" : ")";
  } else {
    out += "+inf)";
  }
  return out;
}

Interval Interval::parse(std::string_view text) {
  auto fail = [&]() -> Interval {
    throw Error("malformed interval '" + std::string(text) + "'");
  };
  if (text.size() < 5) return fail();
  Interval iv;
  char open = text.front(), close = text.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) return fail();
  iv.loClosed = open == '[';
  iv.hiClosed = close == ']';
  std::string_view body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return fail();
  iv.lo = Scalar::parse(body.substr(0, comma));
  std::string_view upper = body.substr(comma + 1);
  if (upper == "+inf" || upper == "inf") {
    if (iv.hiClosed) return fail();
  } else {
    iv.hi = Scalar::parse(upper);
  }
  if (iv.lo < Scalar(0)) throw Error("interval '" + std::string(text) + "' is not within [0, +inf)");
  if (iv.empty()) throw Error("interval '" + std::string(text) + "' is empty");
  return iv;
}

namespace {

constexpr std::array<std::pair<AbstractLight, std::string_view>, 8> kLightNames{{
    {AbstractLight::Start, "S_start"},
    {AbstractLight::One, "S_1"},
    {AbstractLight::TwoLeft, "S_2^left"},
    {AbstractLight::TwoRight, "S_2^right"},
    {AbstractLight::TwoSame, "S_2^="},
    {AbstractLight::TwoOpposite, "S_2^!="},
    {AbstractLight::Three, "S_3"},
    {AbstractLight::Finish, "S_finish"},
}};

bool lightMatches(AbstractLight want, const WorldConfig& world, RobotId id) {
  const LightId l = world.robot(id).light;
  switch (want) {
    case AbstractLight::Start: return l == alg1::kStart;
    case AbstractLight::One: return l == alg1::kOne;
    case AbstractLight::TwoLeft: return l == alg1::kTwoLeft;
    case AbstractLight::TwoRight: return l == alg1::kTwoRight;
    case AbstractLight::Three: return l == alg1::kThree;
    case AbstractLight::Finish: return l == alg1::kFinish;
    case AbstractLight::TwoSame:
    case AbstractLight::TwoOpposite: {
      if (l != alg1::kTwoLeft && l != alg1::kTwoRight) return false;
      if (world.separation().isZero()) return false;
      Snapshot snap = observe(world, id, world.robot(otherRobot(id)).position);
      const LightId same =
          sideOf(snap.otherLocal) == Side::Left ? alg1::kTwoLeft : alg1::kTwoRight;
      return (l == same) == (want == AbstractLight::TwoSame);
    }
  }
  return false;
}

}  // namespace

std::string_view toString(AbstractLight l) {
  for (const auto& [light, name] : kLightNames) {
    if (light == l) return name;
  }
  return "?";
}

AbstractLight parseAbstractLight(std::string_view text) {
  for (const auto& [light, name] : kLightNames) {
    if (name == text) return light;
  }
  throw Error("unknown light '" + std::string(text) + "'");
}

bool AbstractConfig::matches(const WorldConfig& world) const {
  if (!world.idle()) return false;
  const Scalar d = world.separation();
  for (RobotId id : kRobots) {
    const RobotBody& b = world.robot(id);
    if (b.terminated) return false;
    const Interval& iv = id == RobotId::R ? intervalR : intervalS;
    if (!iv.contains(d / b.frame.unit)) return false;
    if (!lightMatches(id == RobotId::R ? lightR : lightS, world, id)) return false;
  }
  return true;
}

std::string AbstractConfig::str() const {
  return "(" + std::string(toString(lightR)) + ", " + std::string(toString(lightS)) +
         ", " + intervalR.str() + ", " + intervalS.str() + ")";
}

std::string_view toString(LemmaVerdict v) {
  switch (v) {
    case LemmaVerdict::Verified: return "Verified";
    case LemmaVerdict::Counterexample: return "Counterexample";
    case LemmaVerdict::Inconclusive: return "Inconclusive";
    case LemmaVerdict::Unrealizable: return "Unrealizable";
  }
  return "?";
}

std::vector<LemmaClaim> parseManifest(std::istream& in) {
  std::vector<LemmaClaim> claims;
  std::set<std::string> ids;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    auto where = [&] { return "manifest line " + std::to_string(lineNo) + ": "; };
    if (f.size() != 8) throw Error(where() + "expected 8 fields, got " + std::to_string(f.size()));
    LemmaClaim c;
    c.id = f[0];
    if (!ids.insert(c.id).second) throw Error(where() + "duplicate id " + c.id);
    try {
      if (f[1] == "claim") {
        c.kind = ClaimKind::Claim;
        c.config.lightR = parseAbstractLight(f[2]);
        c.config.lightS = parseAbstractLight(f[3]);
        c.config.intervalR = Interval::parse(f[4]);
        c.config.intervalS = Interval::parse(f[5]);
      } else if (f[1] == "symmetry" || f[1] == "monotone") {
        c.kind = f[1] == "symmetry" ? ClaimKind::Symmetry : ClaimKind::Monotone;
      } else {
        throw Error("unknown kind '" + f[1] + "'");
      }
      std::size_t used = 0;
      long depth = std::stol(f[6], &used);
      if (used != f[6].size() || depth < 0) throw Error("bad depth '" + f[6] + "'");
      c.depthBound = static_cast<std::size_t>(depth);
    } catch (const Error& e) {
      throw Error(where() + e.what());
    } catch (const std::exception&) {
      throw Error(where() + "bad depth '" + f[6] + "'");
    }
    if (f[7] != "-") {
      std::istringstream sinks(f[7]);
      for (std::string s; std::getline(sinks, s, ',');) {
        if (!s.empty()) c.sinks.push_back(s);
      }
    }
    claims.push_back(std::move(c));
  }
  return claims;
}

std::vector<LemmaClaim> loadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest " + path);
  return parseManifest(in);
}

std::vector<LemmaClaim> orderClaims(const std::vector<LemmaClaim>& claims) {
  std::map<std::string, const LemmaClaim*> byId;
  for (const LemmaClaim& c : claims) byId[c.id] = &c;
  std::vector<LemmaClaim> ordered;
  for (const LemmaClaim& c : claims) {
    if (c.kind != ClaimKind::Claim) ordered.push_back(c);
  }
  std::map<std::string, int> state;  // 1 visiting, 2 done
  std::function<void(const LemmaClaim&)> visit = [&](const LemmaClaim& c) {
    int& s = state[c.id];
    if (s == 2) return;
    if (s == 1) throw Error("lemma manifest has a dependency cycle through " + c.id);
    s = 1;
    for (const std::string& sink : c.sinks) {
      auto it = byId.find(sink);
      if (it == byId.end()) throw Error(c.id + " depends on unknown claim " + sink);
      if (it->second->kind != ClaimKind::Claim) {
        throw Error(c.id + " uses " + sink + " as a sink, which is not a claim");
      }
      visit(*it->second);
    }
    state[c.id] = 2;
    ordered.push_back(c);
  };
  for (const LemmaClaim& c : claims) {
    if (c.kind == ClaimKind::Claim) visit(c);
  }
  return ordered;
}

bool SuiteReport::allVerified() const {
  for (const LemmaResult& r : results) {
    if (r.verdict != LemmaVerdict::Verified) return false;
  }
  return true;
}

bool SuiteReport::anyCounterexample() const {
  for (const LemmaResult& r : results) {
    if (r.verdict == LemmaVerdict::Counterexample) return true;
  }
  return false;
}

std::string suiteReportJson(const SuiteReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const LemmaResult& r : report.results) {
    nlohmann::json j{{"id", r.id},
                     {"verdict", std::string(toString(r.verdict))},
                     {"depth", r.depth},
                     {"samples", r.samples},
                     {"branches", r.branches}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.counterexamplePath.empty()) j["counterexample"] = r.counterexamplePath;
    claims.push_back(j);
  }
  nlohmann::json out{{"claims", claims}, {"allVerified", report.allVerified()}};
  return out.dump(2);
}

}  // namespace rendezvous
