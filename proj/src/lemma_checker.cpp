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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rendezvous/lemmas.hpp"
#include "rendezvous/schedulers.hpp"
#include "rendezvous/trace_io.hpp"
#include "rendezvous/verification.hpp"

namespace rendezvous {

std::vector<Scalar> sampleInterval(const Interval& iv, Rng& rng,
                                   std::size_t randomInterior) {
  const Scalar one(1);
  const Scalar top = iv.hi ? *iv.hi : Scalar(2) * max(iv.lo, one) + Scalar(8);
  std::vector<Scalar> c;
  c.push_back(iv.lo);
  if (iv.hi) c.push_back(*iv.hi);
  for (const Scalar& eps : {Scalar(1, 1000), Scalar(1, 1000000)}) {
    c.push_back(iv.lo + eps);
    c.push_back(top - eps);
  }
  c.push_back((iv.lo + top) / Scalar(2));
  for (std::size_t i = 0; i < randomInterior; ++i) {
    c.push_back(iv.lo + (top - iv.lo) * rng.interiorFraction());
  }
  if (!iv.hi) c.push_back(Scalar(1000) * max(iv.lo, one));

  std::vector<Scalar> out;
  for (const Scalar& x : c) {
    if (iv.contains(x) && std::find(out.begin(), out.end(), x) == out.end()) {
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

LightId concreteLight(AbstractLight l, Side perceived) {
  const LightId same = perceived == Side::Left ? alg1::kTwoLeft : alg1::kTwoRight;
  const LightId opposite = perceived == Side::Left ? alg1::kTwoRight : alg1::kTwoLeft;
  switch (l) {
    case AbstractLight::Start: return alg1::kStart;
    case AbstractLight::One: return alg1::kOne;
    case AbstractLight::TwoLeft: return alg1::kTwoLeft;
    case AbstractLight::TwoRight: return alg1::kTwoRight;
    case AbstractLight::TwoSame: return same;
    case AbstractLight::TwoOpposite: return opposite;
    case AbstractLight::Three: return alg1::kThree;
    case AbstractLight::Finish: return alg1::kFinish;
  }
  return alg1::kStart;
}

WorldConfig swapRoles(const WorldConfig& w) {
  WorldConfig s = w;
  s.robots = {w.robots[1], w.robots[0]};
  s.robots[0].id = RobotId::R;
  s.robots[1].id = RobotId::S;
  return s;
}

std::string stateKey(const WorldConfig& w, const std::array<std::uint8_t, 2>& idle) {
  std::string k = (w.robots[1].position - w.robots[0].position).str();
  for (const RobotBody& b : w.robots) {
    k += '|' + std::to_string(b.light.value) + (b.terminated ? "t" : "-") +
         b.frame.unit.str() + std::string(toString(b.frame.sense));
  }
  return k + '|' + std::to_string(idle[0]) + ',' + std::to_string(idle[1]);
}

constexpr std::array<std::array<bool, 2>, 3> kSubsets{
    {{true, false}, {false, true}, {true, true}}};

enum class Outcome { Accepted, Lasso, Cutoff };

class Search {
 public:
  Search(const LemmaClaim& claim, const Protocol& protocol,
         std::vector<AbstractConfig> sinks, std::size_t window)
      : claim_(claim), protocol_(protocol), sinks_(std::move(sinks)), window_(window) {}

  Outcome run(const WorldConfig& root) {
    rootDist_ = root.separation();
    memo_.clear();
    onPath_.clear();
    path_.clear();
    return dfs(root, {0, 0}, 0);
  }

  std::size_t acceptedDepth() const { return acceptedDepth_; }
  std::size_t branches() const { return branches_; }
  const std::vector<SSynchRound>& failingPath() const { return failing_; }
  const WorldConfig& failingWorld() const { return failingWorld_; }

 private:
  bool accepted(const WorldConfig& w, std::size_t depth) const {
    if (isGatheredStable(w, protocol_)) return true;
    for (const AbstractConfig& s : sinks_) {
      if (s.matches(w)) return true;
    }
    // progress: back in the claim's own configuration, strictly closer
    return depth > 0 && w.separation() < rootDist_ && claim_.config.matches(w);
  }

  Outcome fail(Outcome o, const WorldConfig& w) {
    failing_ = path_;
    failingWorld_ = w;
    return o;
  }

  Outcome dfs(const WorldConfig& w, std::array<std::uint8_t, 2> idle, std::size_t depth) {
    if (accepted(w, depth)) {
      ++branches_;
      acceptedDepth_ = std::max(acceptedDepth_, depth);
      return Outcome::Accepted;
    }
    const std::string key = stateKey(w, idle);
    if (onPath_.count(key)) return fail(Outcome::Lasso, w);
    const std::size_t remaining = claim_.depthBound - depth;
    if (auto it = memo_.find(key); it != memo_.end() && it->second >= remaining) {
      ++branches_;
      return Outcome::Accepted;
    }
    if (depth >= claim_.depthBound) return fail(Outcome::Cutoff, w);

    onPath_.insert(key);
    for (const auto& active : kSubsets) {
      std::array<std::uint8_t, 2> next{};
      bool fair = true;
      for (RobotId r : kRobots) {
        next[index(r)] = active[index(r)] ? 0 : idle[index(r)] + 1;
        fair = fair && next[index(r)] < window_;
      }
      if (!fair) continue;
      SSynchRound round;
      round.active = active;
      path_.push_back(round);
      Outcome o = dfs(executeRound(w, protocol_, round).world, next, depth + 1);
      path_.pop_back();
      if (o != Outcome::Accepted) return o;
    }
    onPath_.erase(key);
    std::size_t& m = memo_[key];
    m = std::max(m, remaining);
    return Outcome::Accepted;
  }

  const LemmaClaim& claim_;
  const Protocol& protocol_;
  std::vector<AbstractConfig> sinks_;
  std::size_t window_;
  Scalar rootDist_;
  std::unordered_map<std::string, std::size_t> memo_;
  std::unordered_set<std::string> onPath_;
  std::vector<SSynchRound> path_;
  std::vector<SSynchRound> failing_;
  WorldConfig failingWorld_;
  std::size_t acceptedDepth_ = 0;
  std::size_t branches_ = 0;
};

std::string describe(const WorldConfig& w) {
  std::string out = "dist " + w.separation().str();
  for (const RobotBody& b : w.robots) {
    out += ", " + std::string(toString(b.id)) + " light " +
           alg1Alphabet().nameOf(b.light) + " perceives " +
           (w.separation() / b.frame.unit).str();
  }
  return out;
}

}  // namespace

Instantiations instantiate(const AbstractConfig& config, Rng& rng,
                           std::size_t randomInterior) {
  Instantiations out;
  const std::vector<Scalar> xr = sampleInterval(config.intervalR, rng, randomInterior);
  const std::vector<Scalar> xs = sampleInterval(config.intervalS, rng, randomInterior);
  for (const Scalar& a : xr) {
    for (const Scalar& b : xs) {
      if (a.isZero() != b.isZero()) {
        ++out.unrealizable;
        continue;
      }
      for (Sense sr : {Sense::PosX, Sense::NegX}) {
        for (Sense ss : {Sense::PosX, Sense::NegX}) {
          const bool met = a.isZero();
          RobotSetup r{Scalar(0), {met ? Scalar(1) : Scalar(1) / a, sr}, alg1::kStart};
          RobotSetup s{Scalar(met ? 0 : 1), {met ? Scalar(1) : Scalar(1) / b, ss},
                       alg1::kStart};
          WorldConfig w = makeWorld(r, s, Visibility::FState);
          for (RobotId id : kRobots) {
            Side side = Side::Left;
            if (!met) side = sideOf(observe(w, id, w.robot(otherRobot(id)).position).otherLocal);
            w.robot(id).light = concreteLight(
                id == RobotId::R ? config.lightR : config.lightS, side);
          }
          if (std::find(out.worlds.begin(), out.worlds.end(), w) == out.worlds.end()) {
            out.worlds.push_back(w);
          }
        }
      }
    }
  }
  return out;
}

LemmaResult checkLemma(const LemmaClaim& claim, const Protocol& protocol,
                       const LemmaContext& context) {
  LemmaResult result;
  result.id = claim.id;
  if (claim.kind != ClaimKind::Claim) throw Error(claim.id + " is not a lemma claim");

  std::vector<AbstractConfig> sinks;
  for (const std::string& id : claim.sinks) {
    auto it = context.verified.find(id);
    if (it == context.verified.end()) {
      result.verdict = LemmaVerdict::Inconclusive;
      result.detail = "sink " + id + " has not been verified";
      return result;
    }
    sinks.push_back(it->second);
    if (context.symmetryVerified) sinks.push_back(it->second.swapped());
  }

  Rng rng(context.seed);
  Instantiations inst = instantiate(claim.config, rng, context.randomInterior);
  result.samples = inst.worlds.size();
  if (inst.worlds.empty()) {
    result.verdict = LemmaVerdict::Unrealizable;
    result.detail = "no sampled distance pair is realizable (" +
                    std::to_string(inst.unrealizable) + " rejected)";
    return result;
  }

  Search search(claim, protocol, sinks, context.fairnessWindow);
  for (const WorldConfig& root : inst.worlds) {
    Outcome o = search.run(root);
    if (o == Outcome::Accepted) continue;
    const WorldConfig& end = search.failingWorld();
    if (o == Outcome::Lasso) {
      result.verdict = LemmaVerdict::Counterexample;
      result.detail = "branch repeats a configuration without gathering: " + describe(end);
      RunOptions run;
      run.stopWhenGathered = true;
      run.stopOnWitness = true;
      std::vector<SSynchRound> rounds = search.failingPath();
      result.counterexample = runSSynch(root, protocol, SSynchSchedule::fromRounds(rounds),
                                        rounds.size(), run);
    } else {
      result.verdict = LemmaVerdict::Inconclusive;
      result.detail = "depth bound " + std::to_string(claim.depthBound) +
                      " reached at " + describe(end);
    }
    result.branches = search.branches();
    return result;
  }
  result.verdict = LemmaVerdict::Verified;
  result.depth = search.acceptedDepth();
  result.branches = search.branches();
  if (inst.unrealizable > 0) {
    result.detail = std::to_string(inst.unrealizable) + " unrealizable sample pairs skipped";
  }
  return result;
}

LemmaResult checkSymmetry(const std::string& id, const std::vector<LemmaClaim>& claims,
                          const Protocol& protocol, const LemmaContext& context,
                          std::size_t depth) {
  LemmaResult result;
  result.id = id;
  Rng rng(context.seed);
  std::function<bool(const WorldConfig&, const WorldConfig&, std::size_t)> walk =
      [&](const WorldConfig& w, const WorldConfig& mirror, std::size_t left) {
        if (swapRoles(w) != mirror) return false;
        if (left == 0) {
          ++result.branches;
          return true;
        }
        for (const auto& active : kSubsets) {
          SSynchRound round, swapped;
          round.active = active;
          swapped.active = {active[1], active[0]};
          if (!walk(executeRound(w, protocol, round).world,
                    executeRound(mirror, protocol, swapped).world, left - 1)) {
            return false;
          }
        }
        return true;
      };
  for (const LemmaClaim& c : claims) {
    if (c.kind != ClaimKind::Claim) continue;
    Instantiations inst = instantiate(c.config, rng, context.randomInterior);
    for (const WorldConfig& w : inst.worlds) {
      ++result.samples;
      if (!walk(w, swapRoles(w), depth)) {
        result.verdict = LemmaVerdict::Counterexample;
        result.detail = "role swap breaks from an instantiation of " + c.id;
        return result;
      }
    }
  }
  result.verdict = LemmaVerdict::Verified;
  result.depth = depth;
  return result;
}

LemmaResult checkMonotonicity(const std::string& id,
                              const std::vector<LemmaClaim>& claims,
                              const LemmaContext& context) {
  LemmaResult result;
  result.id = id;
  Rng rng(context.seed);
  std::vector<Interval> intervals;
  for (const LemmaClaim& c : claims) {
    if (c.kind != ClaimKind::Claim) continue;
    for (const Interval& iv : {c.config.intervalR, c.config.intervalS}) {
      if (std::find(intervals.begin(), intervals.end(), iv) == intervals.end()) {
        intervals.push_back(iv);
      }
    }
  }
  for (const Interval& inner : intervals) {
    std::vector<Scalar> samples = sampleInterval(inner, rng, context.randomInterior);
    for (const Interval& outer : intervals) {
      if (!inner.subsetOf(outer)) continue;
      ++result.branches;
      for (const Scalar& x : samples) {
        ++result.samples;
        if (!outer.contains(x)) {
          result.verdict = LemmaVerdict::Counterexample;
          result.detail = "sample " + x.str() + " of " + inner.str() +
                          " falls outside " + outer.str();
          return result;
        }
      }
    }
  }
  result.verdict = LemmaVerdict::Verified;
  return result;
}

SuiteReport runLemmaSuite(const std::vector<LemmaClaim>& claims,
                          const Protocol& protocol, const SuiteOptions& options) {
  if (options.seeds.empty()) throw Error("lemma suite needs at least one seed");
  SuiteReport report;
  LemmaContext context;
  context.randomInterior = options.randomInterior;

  for (const LemmaClaim& claim : orderClaims(claims)) {
    LemmaResult combined;
    combined.id = claim.id;
    combined.verdict = LemmaVerdict::Verified;
    for (std::uint64_t seed : options.seeds) {
      context.seed = seed;
      LemmaResult r;
      switch (claim.kind) {
        case ClaimKind::Claim: r = checkLemma(claim, protocol, context); break;
        case ClaimKind::Symmetry:
          r = checkSymmetry(claim.id, claims, protocol, context, claim.depthBound);
          break;
        case ClaimKind::Monotone: r = checkMonotonicity(claim.id, claims, context); break;
      }
      combined.samples += r.samples;
      combined.branches += r.branches;
      combined.depth = std::max(combined.depth, r.depth);
      if (r.verdict != LemmaVerdict::Verified) {
        combined.verdict = r.verdict;
        combined.detail = "seed " + std::to_string(seed) + ": " + r.detail;
        combined.counterexample = std::move(r.counterexample);
        break;
      }
      if (!r.detail.empty()) combined.detail = r.detail;
    }
    if (combined.counterexample && !options.counterexampleDir.empty()) {
      std::filesystem::create_directories(options.counterexampleDir);
      std::string path = (std::filesystem::path(options.counterexampleDir) /
                          (claim.id + ".trace.jsonl")).string();
      std::ofstream out(path);
      if (!out) throw Error("cannot write " + path);
      writeTrace(out, *combined.counterexample, protocol.alphabet());
      combined.counterexamplePath = path;
    }
    if (combined.verdict == LemmaVerdict::Verified) {
      if (claim.kind == ClaimKind::Claim) context.verified[claim.id] = claim.config;
      if (claim.kind == ClaimKind::Symmetry) context.symmetryVerified = true;
    }
    report.results.push_back(std::move(combined));
  }
  return report;
}

}  // namespace rendezvous
