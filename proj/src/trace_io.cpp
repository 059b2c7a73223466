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

#include "rendezvous/trace_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace rendezvous {

using nlohmann::json;

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::GatheredStable: return "GatheredStable";
    case Verdict::BudgetExhausted: return "BudgetExhausted";
    case Verdict::NonGatheringWitness: return "NonGatheringWitness";
  }
  return "?";
}

Verdict parseVerdict(std::string_view text) {
  for (Verdict v : {Verdict::GatheredStable, Verdict::BudgetExhausted,
                    Verdict::NonGatheringWitness}) {
    if (toString(v) == text) return v;
  }
  throw Error("unknown verdict '" + std::string(text) + "'");
}

std::string_view toString(EngineKind k) {
  return k == EngineKind::SSynch ? "ssynch" : "asynch";
}

EngineKind parseEngineKind(std::string_view text) {
  if (text == "ssynch") return EngineKind::SSynch;
  if (text == "asynch") return EngineKind::ASynch;
  throw Error("unknown engine '" + std::string(text) + "'");
}

std::vector<std::string> Trace::scheduleLiterals() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const TraceEntry& e : entries) out.push_back(e.schedule);
  return out;
}

namespace {

json scalar(const Scalar& s) { return s.str(); }
Scalar scalar(const json& j) { return Scalar::parse(j.get<std::string>()); }

json point(const LocalPoint& p) { return {scalar(p.x), scalar(p.y)}; }
LocalPoint point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("point must be a pair");
  return {scalar(j[0]), scalar(j[1])};
}

class Codec {
 public:
  explicit Codec(const LightAlphabet& alphabet) : alphabet_(alphabet) {}

  json light(LightId id) const { return alphabet_.nameOf(id); }
  LightId light(const json& j) const { return alphabet_.lookup(j.get<std::string>()); }

  json snapshot(const Snapshot& s) const {
    json j{{"other", point(s.otherLocal)}, {"dist", scalar(s.dist)}};
    j["light"] = s.visibleLight ? light(*s.visibleLight) : json(nullptr);
    return j;
  }
  Snapshot snapshot(const json& j) const {
    Snapshot s;
    s.otherLocal = point(j.at("other"));
    s.dist = scalar(j.at("dist"));
    if (!j.at("light").is_null()) s.visibleLight = light(j.at("light"));
    return s;
  }

  json output(const ProtocolOutput& o) const {
    return {{"next", light(o.nextLight)},
            {"dest", point(o.destLocal)},
            {"terminate", o.terminate}};
  }
  ProtocolOutput output(const json& j) const {
    return {light(j.at("next")), point(j.at("dest")), j.at("terminate").get<bool>()};
  }

  json robot(const RobotBody& b) const {
    json j{{"id", std::string(toString(b.id))},
           {"position", scalar(b.position)},
           {"unit", scalar(b.frame.unit)},
           {"sense", std::string(toString(b.frame.sense))},
           {"light", light(b.light)},
           {"terminated", b.terminated}};
    if (b.pending) {
      const PendingCycle& c = *b.pending;
      j["pending"] = {{"phase", static_cast<int>(c.phase)},
                      {"snapshot", snapshot(c.snapshot)},
                      {"next", light(c.nextLight)},
                      {"dest", scalar(c.destGlobal)},
                      {"terminate", c.terminate},
                      {"moveStart", scalar(c.moveStart)},
                      {"moveEnd", scalar(c.moveEnd)}};
    }
    return j;
  }
  RobotBody robot(const json& j) const {
    RobotBody b;
    b.id = parseRobotId(j.at("id").get<std::string>());
    b.position = scalar(j.at("position"));
    b.frame.unit = scalar(j.at("unit"));
    b.frame.sense = parseSense(j.at("sense").get<std::string>());
    b.light = light(j.at("light"));
    b.terminated = j.at("terminated").get<bool>();
    if (j.contains("pending")) {
      const json& p = j["pending"];
      PendingCycle c;
      int phase = p.at("phase").get<int>();
      if (phase < 0 || phase > static_cast<int>(CyclePhase::Moving)) {
        throw Error("bad cycle phase");
      }
      c.phase = static_cast<CyclePhase>(phase);
      c.snapshot = snapshot(p.at("snapshot"));
      c.nextLight = light(p.at("next"));
      c.destGlobal = scalar(p.at("dest"));
      c.terminate = p.at("terminate").get<bool>();
      c.moveStart = scalar(p.at("moveStart"));
      c.moveEnd = scalar(p.at("moveEnd"));
      b.pending = c;
    }
    return b;
  }

  json world(const WorldConfig& w) const {
    json j{{"visibility", std::string(toString(w.visibility))},
           {"robots", {robot(w.robots[0]), robot(w.robots[1])}}};
    j["delta"] = w.delta ? scalar(*w.delta) : json(nullptr);
    return j;
  }
  WorldConfig world(const json& j) const {
    WorldConfig w;
    w.visibility = parseVisibility(j.at("visibility").get<std::string>());
    if (!j.at("delta").is_null()) w.delta = scalar(j.at("delta"));
    const json& rs = j.at("robots");
    if (!rs.is_array() || rs.size() != 2) throw Error("world needs two robots");
    w.robots = {robot(rs[0]), robot(rs[1])};
    return w;
  }

  json step(const StepRecord& s) const {
    json j{{"actor", std::string(toString(s.actor))}};
    if (s.snapshot) j["snapshot"] = snapshot(*s.snapshot);
    if (s.output) j["output"] = output(*s.output);
    if (s.motion) j["motion"] = toString(*s.motion);
    return j;
  }
  StepRecord step(const json& j) const {
    StepRecord s;
    s.actor = parseRobotId(j.at("actor").get<std::string>());
    if (j.contains("snapshot")) s.snapshot = snapshot(j["snapshot"]);
    if (j.contains("output")) s.output = output(j["output"]);
    if (j.contains("motion")) s.motion = parseMotionChoice(j["motion"].get<std::string>());
    return s;
  }

 private:
  const LightAlphabet& alphabet_;
};

json parseLine(const std::string& line, std::size_t lineNo) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw Error("trace line " + std::to_string(lineNo) + ": " + e.what());
  }
}

}  // namespace

void writeTrace(std::ostream& out, const Trace& trace, const LightAlphabet& alphabet) {
  Codec c(alphabet);
  json header{{"type", "header"},
              {"protocol", trace.protocol},
              {"engine", std::string(toString(trace.engine))},
              {"initial", c.world(trace.initial)},
              {"stopWhenGathered", trace.stopWhenGathered},
              {"stopOnWitness", trace.stopOnWitness}};
  header["frameSeed"] = trace.frameSeed ? json(*trace.frameSeed) : json(nullptr);
  out << header.dump() << '\n';
  for (const TraceEntry& e : trace.entries) {
    json steps = json::array();
    for (const StepRecord& s : e.steps) steps.push_back(c.step(s));
    json line{{"type", "entry"},
              {"ordinal", e.ordinal},
              {"schedule", e.schedule},
              {"steps", steps},
              {"world", c.world(e.world)}};
    out << line.dump() << '\n';
  }
  json verdict{{"type", "verdict"}, {"verdict", std::string(toString(trace.verdict))}};
  if (trace.witness) {
    verdict["witness"] = {{"start", trace.witness->start},
                          {"end", trace.witness->end},
                          {"class", trace.witness->classDescription}};
  }
  out << verdict.dump() << '\n';
}

std::string traceToString(const Trace& trace, const LightAlphabet& alphabet) {
  std::ostringstream os;
  writeTrace(os, trace, alphabet);
  return os.str();
}

Trace readTrace(std::istream& in, const LightAlphabet& alphabet) {
  Codec c(alphabet);
  Trace trace;
  std::string line;
  std::size_t lineNo = 0;
  bool haveHeader = false, haveVerdict = false;
  try {
    while (std::getline(in, line)) {
      ++lineNo;
      if (line.empty()) continue;
      if (haveVerdict) throw Error("content after the verdict line");
      json j = parseLine(line, lineNo);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (haveHeader) throw Error("duplicate header");
        haveHeader = true;
        trace.protocol = j.at("protocol").get<std::string>();
        trace.engine = parseEngineKind(j.at("engine").get<std::string>());
        trace.initial = c.world(j.at("initial"));
        trace.stopWhenGathered = j.at("stopWhenGathered").get<bool>();
        trace.stopOnWitness = j.at("stopOnWitness").get<bool>();
        if (!j.at("frameSeed").is_null()) {
          trace.frameSeed = j["frameSeed"].get<std::uint64_t>();
        }
      } else if (!haveHeader) {
        throw Error("trace does not start with a header");
      } else if (type == "entry") {
        TraceEntry e;
        e.ordinal = j.at("ordinal").get<std::size_t>();
        if (e.ordinal != trace.entries.size() + 1) throw Error("ordinal out of sequence");
        e.schedule = j.at("schedule").get<std::string>();
        for (const json& s : j.at("steps")) e.steps.push_back(c.step(s));
        e.world = c.world(j.at("world"));
        trace.entries.push_back(std::move(e));
      } else if (type == "verdict") {
        haveVerdict = true;
        trace.verdict = parseVerdict(j.at("verdict").get<std::string>());
        if (j.contains("witness")) {
          const json& w = j["witness"];
          trace.witness = CycleWitness{w.at("start").get<std::size_t>(),
                                       w.at("end").get<std::size_t>(),
                                       w.at("class").get<std::string>()};
        }
      } else {
        throw Error("unknown line type '" + type + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error("trace line " + std::to_string(lineNo) + ": " + e.what());
  }
  if (!haveHeader) throw Error("empty trace");
  if (!haveVerdict) throw Error("trace has no verdict line");
  return trace;
}

std::string readTraceProtocol(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = parseLine(line, 1);
    if (j.value("type", "") != "header") break;
    return j.at("protocol").get<std::string>();
  }
  throw Error("trace does not start with a header");
}

}  // namespace rendezvous
