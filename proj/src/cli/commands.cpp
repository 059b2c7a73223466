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

#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rendezvous/enumerate.hpp"
#include "rendezvous/lemmas.hpp"
#include "rendezvous/schedulers.hpp"
#include "rendezvous/trace_io.hpp"
#include "rendezvous/verification.hpp"

#ifndef RENDEZVOUS_DEFAULT_MANIFEST
#define RENDEZVOUS_DEFAULT_MANIFEST "data/lemmas.manifest"
#endif

namespace rendezvous::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

bool isAsynch(SchedulerKind k) {
  return k == SchedulerKind::AsynchRandom || k == SchedulerKind::AsynchScript ||
         k == SchedulerKind::Thm4;
}

bool isRandom(SchedulerKind k) {
  return k == SchedulerKind::SSynchRandom || k == SchedulerKind::AsynchRandom;
}

int exitFor(Verdict v) {
  switch (v) {
    case Verdict::GatheredStable: return kGathered;
    case Verdict::BudgetExhausted: return kBudget;
    case Verdict::NonGatheringWitness: return kWitness;
  }
  return kUsage;
}

std::string outputDir() {
  const char* env = std::getenv("RENDEZVOUS_OUTPUT_DIR");
  return env && *env ? env : ".";
}

std::string defaultPath(const std::string& stem) {
  std::string safe;
  for (char c : stem) safe += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
  std::filesystem::create_directories(outputDir());
  return (std::filesystem::path(outputDir()) / (safe + ".trace.jsonl")).string();
}

void writeTraceFile(const std::string& path, const Trace& trace, const Protocol& protocol) {
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  writeTrace(f, trace, protocol.alphabet());
}

Protocol resolveProtocol(const std::string& name, const std::optional<std::string>& visibility,
                         bool asynch) {
  std::optional<Visibility> v;
  if (visibility) v = parseVisibility(*visibility);
  if (!v) v = asynch ? Visibility::FComm : Visibility::FState;
  return protocolByName(name, v);
}

std::optional<Scalar> resolveDelta(const Protocol& protocol, bool nonRigid,
                                   const std::optional<std::string>& delta) {
  if (delta) {
    Scalar d = Scalar::parse(*delta);
    if (d <= Scalar(0)) throw UsageError("--delta must be positive");
    return d;
  }
  if (nonRigid || protocol.needsDelta()) {
    throw UsageError(protocol.name() + ": non-rigid motion needs --delta");
  }
  return std::nullopt;
}

std::string summary(const Trace& trace) {
  std::ostringstream os;
  os << toString(trace.verdict) << " after " << trace.entries.size()
     << (trace.engine == EngineKind::SSynch ? " rounds" : " events");
  if (trace.witness) {
    os << " (period " << trace.witness->period() << " from entry "
       << trace.witness->start << ", " << trace.witness->classDescription << ")";
  }
  return os.str();
}

std::vector<std::string> readLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.erase(0, 1);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ScheduleError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int cmdRun(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const bool asynch = isAsynch(spec.scheduler);
    Protocol protocol = resolveProtocol(spec.protocol, spec.visibility, asynch);
    if (asynch && protocol.visibilityRequired() == Visibility::FState) {
      throw UsageError(protocol.name() + " is an FState protocol; asynchronous schedulers are not supported");
    }
    if (isRandom(spec.scheduler) && !spec.seed) {
      throw UsageError("--seed is required for randomized schedulers");
    }
    if (spec.positions.size() != 2 || spec.units.size() != 2 || spec.senses.size() != 2) {
      throw UsageError("--pos, --units and --senses take two values");
    }
    std::optional<Scalar> delta = resolveDelta(protocol, spec.nonRigid, spec.delta);

    std::array<RobotSetup, 2> setup;
    for (std::size_t i = 0; i < 2; ++i) {
      setup[i].position = Scalar::parse(spec.positions[i]);
      setup[i].frame.unit = Scalar::parse(spec.units[i]);
      setup[i].frame.sense = parseSense(spec.senses[i]);
      setup[i].light = protocol.alphabet().start();
      if (!spec.lights.empty()) {
        if (spec.lights.size() != 2) throw UsageError("--lights takes two values");
        setup[i].light = protocol.alphabet().lookup(spec.lights[i]);
      }
    }

    Trace trace;
    if (spec.scheduler == SchedulerKind::Thm1 || spec.scheduler == SchedulerKind::Thm4) {
      const auto& table = protocol.classLTable();
      if (!table) throw UsageError("adversaries apply to classL:<table> protocols only");
      AdversaryOptions opts;
      opts.separation = abs(setup[1].position - setup[0].position);
      opts.budget = spec.budget;
      opts.frameR = setup[0].frame;
      opts.frameS = setup[1].frame;
      trace = spec.scheduler == SchedulerKind::Thm1 ? thm1Adversary(*table, opts)
                                                    : thm4Adversary(*table, opts);
      protocol = makeClassL(*table, spec.scheduler == SchedulerKind::Thm1
                                        ? Visibility::FState
                                        : Visibility::FComm);
    } else {
      WorldConfig world =
          makeWorld(setup[0], setup[1], protocol.visibilityRequired(), delta);
      RunOptions run;
      run.stopWhenGathered = spec.earlyExit;
      run.frameSeed = spec.frameSeed;
      AsynchRandomOptions aopts{spec.nonRigid, spec.moveSteps};
      switch (spec.scheduler) {
        case SchedulerKind::SSynchRandom: {
          std::size_t w = spec.window ? spec.window : 3;
          run.fairnessWindow = w;
          trace = runSSynch(world, protocol,
                            fairRandomSSynch(*spec.seed, spec.budget, w, spec.nonRigid),
                            spec.budget, run);
          break;
        }
        case SchedulerKind::SSynchLockstep:
          trace = runSSynch(world, protocol, SSynchSchedule::lockstep(), spec.budget, run);
          break;
        case SchedulerKind::SSynchScript: {
          std::vector<SSynchRound> rounds;
          for (const std::string& l : readLines(spec.script)) rounds.push_back(parseRound(l));
          if (spec.window) run.fairnessWindow = spec.window;
          trace = runSSynch(world, protocol, SSynchSchedule::fromRounds(rounds),
                            spec.budget, run);
          break;
        }
        case SchedulerKind::AsynchRandom: {
          std::size_t w = spec.window ? spec.window : 2 * maxCycleLength(aopts);
          run.fairnessWindow = w;
          trace = runAsynch(world, protocol,
                            fairRandomAsynch(*spec.seed, spec.budget, w, aopts),
                            spec.budget, run);
          break;
        }
        case SchedulerKind::AsynchScript: {
          std::vector<AsynchEvent> events;
          for (const std::string& l : readLines(spec.script)) events.push_back(parseEvent(l));
          if (spec.window) run.fairnessWindow = spec.window;
          trace = runAsynch(world, protocol, AsynchEventTimeline::fromEvents(events),
                            spec.budget, run);
          break;
        }
        default: break;
      }
    }

    const std::string path = spec.out.empty() ? defaultPath("run-" + protocol.name()) : spec.out;
    writeTraceFile(path, trace, protocol);
    out << summary(trace) << "\n";
    out << "trace: " << path << "\n";
    return exitFor(trace.verdict);
  });
}

int cmdReplay(const std::string& tracePath, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::ifstream head(tracePath);
    if (!head) throw UsageError("cannot open " + tracePath);
    const std::string name = readTraceProtocol(head);
    std::ifstream in(tracePath);
    Trace recorded = readTrace(in, protocolByName(name).alphabet());
    Protocol protocol = protocolByName(name, recorded.initial.visibility);
    Trace replayed = replayTrace(recorded, protocol);
    // adversary traces were produced by generators; their logged literals
    // are replayed verbatim
    if (!(replayed == recorded)) {
      std::size_t i = 0;
      while (i < std::min(replayed.entries.size(), recorded.entries.size()) &&
             replayed.entries[i] == recorded.entries[i]) {
        ++i;
      }
      err << "replay diverges at entry " << i + 1 << " (recorded "
          << toString(recorded.verdict) << ", replayed " << toString(replayed.verdict)
          << ")\n";
      return kReplayMismatch;
    }
    out << summary(replayed) << "\n";
    out << "replay identical (" << replayed.entries.size() << " entries)\n";
    return exitFor(replayed.verdict);
  });
}

int cmdFuzz(const FuzzSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (spec.trials == 0) throw UsageError("--trials must be at least 1");
    const bool asynch = isAsynch(spec.scheduler);
    if (!isRandom(spec.scheduler)) {
      throw UsageError("fuzz supports ssynch-random and asynch-random only");
    }
    Protocol protocol = resolveProtocol(spec.protocol, spec.visibility, asynch);
    if (asynch && protocol.visibilityRequired() == Visibility::FState) {
      throw UsageError(protocol.name() + " is an FState protocol; asynchronous schedulers are not supported");
    }
    std::optional<Scalar> delta = resolveDelta(protocol, spec.nonRigid, spec.delta);
    const Scalar maxDist = Scalar::parse(spec.maxDist);
    if (maxDist <= Scalar(0)) throw UsageError("--max-dist must be positive");
    if (spec.unitRange.size() != 2) throw UsageError("--unit-range takes two values");
    const Scalar uLo = Scalar::parse(spec.unitRange[0]);
    const Scalar uHi = Scalar::parse(spec.unitRange[1]);
    if (uLo <= Scalar(0) || uHi < uLo) throw UsageError("bad --unit-range");

    std::ofstream file;
    if (!spec.csv.empty()) {
      auto parent = std::filesystem::path(spec.csv).parent_path();
      if (!parent.empty()) std::filesystem::create_directories(parent);
      file.open(spec.csv);
      if (!file) throw UsageError("cannot write " + spec.csv);
    }
    std::ostream& csv = spec.csv.empty() ? out : file;
    csv << "seed,initial_dist," << (asynch ? "events" : "rounds") << "_to_gather,verdict\n";

    std::size_t gathered = 0;
    AsynchRandomOptions aopts{spec.nonRigid, 3};
    for (std::size_t t = 0; t < spec.trials; ++t) {
      const std::uint64_t seed = spec.seed + t;
      Rng rng(seed);
      const Scalar dist = maxDist * Scalar(static_cast<long>(rng.below(1024)) + 1, 1024);
      RobotSetup r{Scalar(0), {rng.gridPoint(uLo, uHi), kAllSenses[rng.below(4)]},
                   protocol.alphabet().start()};
      RobotSetup s{dist, {rng.gridPoint(uLo, uHi), kAllSenses[rng.below(4)]},
                   protocol.alphabet().start()};
      if (spec.equalUnits) s.frame.unit = r.frame.unit;
      WorldConfig world = makeWorld(r, s, protocol.visibilityRequired(), delta);
      RunOptions run;
      Trace trace;
      if (asynch) {
        std::size_t w = spec.window ? spec.window : 2 * maxCycleLength(aopts);
        run.fairnessWindow = w;
        trace = runAsynch(world, protocol, fairRandomAsynch(seed, spec.budget, w, aopts),
                          spec.budget, run);
      } else {
        std::size_t w = spec.window ? spec.window : 3;
        run.fairnessWindow = w;
        trace = runSSynch(world, protocol,
                          fairRandomSSynch(seed, spec.budget, w, spec.nonRigid),
                          spec.budget, run);
      }
      const bool ok = trace.verdict == Verdict::GatheredStable;
      gathered += ok ? 1 : 0;
      csv << seed << "," << dist << ","
          << (ok ? std::to_string(trace.entries.size()) : std::string()) << ","
          << toString(trace.verdict) << "\n";
    }
    err << gathered << "/" << spec.trials << " trials gathered\n";
    return gathered == spec.trials ? kGathered : kBudget;
  });
}

int cmdLemmaSuite(const LemmaSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::vector<LemmaClaim> claims =
        loadManifest(spec.manifest.empty() ? RENDEZVOUS_DEFAULT_MANIFEST : spec.manifest);
    SuiteOptions opts;
    opts.seeds = spec.seeds;
    opts.randomInterior = spec.randomInterior;
    opts.counterexampleDir = spec.counterexamples.empty()
                                 ? (std::filesystem::path(outputDir()) / "counterexamples").string()
                                 : spec.counterexamples;
    SuiteReport report = runLemmaSuite(claims, makeAlg1(), opts);
    const std::string json = suiteReportJson(report);
    if (spec.report.empty()) {
      out << json << "\n";
    } else {
      std::ofstream f(spec.report);
      if (!f) throw UsageError("cannot write " + spec.report);
      f << json << "\n";
    }
    for (const LemmaResult& r : report.results) {
      err << r.id << ": " << toString(r.verdict);
      if (r.verdict == LemmaVerdict::Verified) err << " (depth " << r.depth << ")";
      if (!r.counterexamplePath.empty()) err << " -> " << r.counterexamplePath;
      if (r.verdict != LemmaVerdict::Verified && !r.detail.empty()) err << ": " << r.detail;
      err << "\n";
    }
    if (report.allVerified()) return kGathered;
    return report.anyCounterexample() ? kWitness : kBudget;
  });
}

int cmdEnumerate(const EnumerateSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    Protocol protocol = resolveProtocol(spec.protocol, spec.visibility, false);
    std::optional<Scalar> delta = resolveDelta(protocol, false, spec.delta);
    std::vector<std::pair<LightId, LightId>> pairs;
    if (spec.lights.empty()) {
      for (LightId a : protocol.alphabet().all()) {
        for (LightId b : protocol.alphabet().all()) pairs.emplace_back(a, b);
      }
    } else {
      for (const std::string& p : spec.lights) {
        auto comma = p.find(',');
        if (comma == std::string::npos) throw UsageError("--lights pairs look like A,B");
        pairs.emplace_back(protocol.alphabet().lookup(p.substr(0, comma)),
                           protocol.alphabet().lookup(p.substr(comma + 1)));
      }
    }
    std::vector<WorldConfig> roots;
    for (const std::string& d : spec.distances) {
      for (const auto& [a, b] : pairs) {
        roots.push_back(makeWorld({Scalar(0), {}, a}, {Scalar::parse(d), {}, b},
                                  protocol.visibilityRequired(), delta));
      }
    }
    EnumerationOptions opts;
    opts.depth = spec.depth;
    opts.fairnessWindow = spec.window;
    opts.maxStates = spec.maxStates;
    EnumerationReport r = enumerateSSynch(roots, protocol, opts);
    out << "roots " << r.roots << "\nstates " << r.states << "\nedges " << r.edges
        << "\ngathered " << r.gathered << "\nfrontier " << r.frontier
        << "\nfair_cycles " << r.fairCycles << "\nstate_cap_hit "
        << (r.stateCapHit ? "yes" : "no") << "\nfirst_gather_round " << r.firstGatherRound
        << "\n";
    if (r.worstCaseRounds) out << "worst_case_rounds " << *r.worstCaseRounds << "\n";
    if (r.counterexample) {
      const std::string path = defaultPath("enumerate-" + protocol.name());
      writeTraceFile(path, *r.counterexample, protocol);
      out << "counterexample: " << path << "\n";
      return kWitness;
    }
    return r.allFairBranchesGather() ? kGathered : kBudget;
  });
}

int cmdAdversary(const AdversarySpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (spec.kind != "thm1" && spec.kind != "thm4") {
      throw UsageError("adversary kind must be thm1 or thm4");
    }
    ClassLTable table = parseClassLTable(spec.table);
    AdversaryOptions opts;
    opts.separation = Scalar::parse(spec.separation);
    opts.budget = spec.budget;
    const bool first = spec.kind == "thm1";
    Trace trace = first ? thm1Adversary(table, opts) : thm4Adversary(table, opts);
    Protocol protocol =
        makeClassL(table, first ? Visibility::FState : Visibility::FComm);
    if (trace.witness) {
      WitnessReplay check = replayWitness(trace, protocol);
      out << "witness replay: " << (check.ok ? "ok" : check.failure) << "\n";
    }
    const std::string path =
        spec.out.empty() ? defaultPath("adversary-" + spec.kind) : spec.out;
    writeTraceFile(path, trace, protocol);
    out << summary(trace) << "\n";
    out << "trace: " << path << "\n";
    return exitFor(trace.verdict);
  });
}

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-robot rendezvous simulator and verifier"};
  app.require_subcommand(1);

  RunSpec run;
  auto* runCmd = app.add_subcommand("run", "Execute one run and write its trace");
  runCmd->add_option("protocol", run.protocol, "Protocol name or classL:<table>")->required();
  runCmd->add_option("--pos", run.positions, "Initial positions of R and S")->expected(2);
  runCmd->add_option("--units", run.units, "Units of R and S")->expected(2);
  runCmd->add_option("--senses", run.senses, "Senses of R and S (PosX, NegX, PosY, NegY)")
      ->expected(2);
  runCmd->add_option("--lights", run.lights, "Initial lights of R and S")->expected(2);
  auto* sched = runCmd->add_option_group("scheduler");
  bool ssRandom = false, ssLockstep = false, asRandom = false, thm1 = false, thm4 = false;
  std::string ssScript, asScript;
  sched->add_flag("--ssynch-random", ssRandom, "Fair random semi-synchronous rounds");
  sched->add_flag("--lockstep", ssLockstep, "Both robots every round");
  sched->add_option("--ssynch-script", ssScript, "File of round literals");
  sched->add_flag("--asynch-random", asRandom, "Fair random asynchronous events");
  sched->add_option("--asynch-script", asScript, "File of event literals");
  sched->add_flag("--thm1", thm1, "Semi-synchronous class-L adversary");
  sched->add_flag("--thm4", thm4, "Asynchronous class-L adversary");
  sched->require_option(0, 1);
  runCmd->add_option("--visibility", run.visibility, "FState or FComm (class-L only)");
  runCmd->add_flag("--nonrigid", run.nonRigid, "Let the scheduler interrupt moves");
  runCmd->add_option("--delta", run.delta, "Minimum progress of an interrupted move");
  runCmd->add_option("--rounds,--events,--budget", run.budget, "Round or event budget");
  runCmd->add_option("--window", run.window, "Fairness window");
  runCmd->add_option("--move-steps", run.moveSteps, "Max MoveSteps per asynchronous move");
  runCmd->add_option("--seed", run.seed, "Seed for randomized schedulers");
  runCmd->add_option("--frame-seed", run.frameSeed, "Re-draw frames every cycle (class-L)");
  bool noEarlyExit = false;
  runCmd->add_flag("--no-early-exit", noEarlyExit, "Keep running after gathering");
  runCmd->add_option("--out", run.out, "Trace file");

  std::string replayPath;
  auto* replayCmd = app.add_subcommand("replay", "Re-execute a trace and compare");
  replayCmd->add_option("trace", replayPath, "Trace file")->required();

  FuzzSpec fuzz;
  auto* fuzzCmd = app.add_subcommand("fuzz", "Seeded campaign of random fair runs");
  fuzzCmd->add_option("protocol", fuzz.protocol)->required();
  bool fzAsynch = false;
  fuzzCmd->add_flag("--asynch-random,--asynch", fzAsynch,
                   "Asynchronous timelines (default semi-synchronous)");
  bool fzSsynch = false;
  fuzzCmd->add_flag("--ssynch-random", fzSsynch, "Semi-synchronous rounds")->excludes("--asynch-random");
  fuzzCmd->add_option("--trials", fuzz.trials);
  std::optional<std::uint64_t> fuzzSeed;
  fuzzCmd->add_option("--seed", fuzzSeed, "First seed");
  fuzzCmd->add_option("--rounds,--events,--budget", fuzz.budget);
  fuzzCmd->add_option("--window", fuzz.window);
  fuzzCmd->add_flag("--nonrigid", fuzz.nonRigid);
  fuzzCmd->add_option("--delta", fuzz.delta);
  fuzzCmd->add_option("--visibility", fuzz.visibility);
  fuzzCmd->add_option("--max-dist", fuzz.maxDist);
  fuzzCmd->add_option("--unit-range", fuzz.unitRange)->expected(2);
  fuzzCmd->add_flag("--equal-units", fuzz.equalUnits);
  fuzzCmd->add_option("--csv", fuzz.csv);

  LemmaSpec lemmas;
  auto* lemmaCmd = app.add_subcommand("lemmas", "Check the lemma manifest");
  lemmaCmd->add_option("--manifest", lemmas.manifest);
  lemmaCmd->add_option("--seeds", lemmas.seeds);
  lemmaCmd->add_option("--random-samples", lemmas.randomInterior);
  lemmaCmd->add_option("--report", lemmas.report);
  lemmaCmd->add_option("--counterexamples", lemmas.counterexamples);

  EnumerateSpec en;
  auto* enCmd = app.add_subcommand("enumerate", "Exhaustive semi-synchronous exploration");
  enCmd->add_option("protocol", en.protocol)->required();
  enCmd->add_option("--dist", en.distances);
  enCmd->add_option("--lights", en.lights, "Initial light pairs A,B");
  enCmd->add_option("--delta", en.delta);
  enCmd->add_option("--visibility", en.visibility);
  enCmd->add_option("--depth", en.depth, "Round bound, 0 for a full fixpoint");
  enCmd->add_option("--window", en.window);
  enCmd->add_option("--max-states", en.maxStates);

  AdversarySpec adv;
  auto* advCmd = app.add_subcommand("adversary", "Class-L impossibility adversaries");
  advCmd->add_option("kind", adv.kind, "thm1 or thm4")->required();
  advCmd->add_option("table", adv.table, "Class-L table")->required();
  advCmd->add_option("--separation", adv.separation);
  advCmd->add_option("--budget", adv.budget);
  advCmd->add_option("--out", adv.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kGathered;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (*runCmd) {
    run.scheduler = SchedulerKind::SSynchRandom;
    if (ssLockstep) run.scheduler = SchedulerKind::SSynchLockstep;
    if (!ssScript.empty()) {
      run.scheduler = SchedulerKind::SSynchScript;
      run.script = ssScript;
    }
    if (asRandom) run.scheduler = SchedulerKind::AsynchRandom;
    if (!asScript.empty()) {
      run.scheduler = SchedulerKind::AsynchScript;
      run.script = asScript;
    }
    if (thm1) run.scheduler = SchedulerKind::Thm1;
    if (thm4) run.scheduler = SchedulerKind::Thm4;
    if ((thm1 || thm4) && !runCmd->count("--budget")) run.budget = 100;
    run.earlyExit = !noEarlyExit;
    return cmdRun(run, out, err);
  }
  if (*replayCmd) return cmdReplay(replayPath, out, err);
  if (*fuzzCmd) {
    if (!fuzzSeed) {
      err << "error: --seed is required for fuzz campaigns\n";
      return kUsage;
    }
    fuzz.seed = *fuzzSeed;
    fuzz.scheduler = fzAsynch ? SchedulerKind::AsynchRandom : SchedulerKind::SSynchRandom;
    return cmdFuzz(fuzz, out, err);
  }
  if (*lemmaCmd) return cmdLemmaSuite(lemmas, out, err);
  if (*enCmd) return cmdEnumerate(en, out, err);
  if (*advCmd) return cmdAdversary(adv, out, err);
  return kUsage;
}

}  // namespace rendezvous::cli
