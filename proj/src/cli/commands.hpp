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

#ifndef RENDEZVOUS_CLI_COMMANDS_HPP_
#define RENDEZVOUS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rendezvous::cli {

enum ExitCode : int {
  kGathered = 0,
  kUsage = 1,
  kBudget = 2,
  kWitness = 3,
  kReplayMismatch = 4,
};

enum class SchedulerKind {
  SSynchRandom,
  SSynchLockstep,
  SSynchScript,
  AsynchRandom,
  AsynchScript,
  Thm1,
  Thm4
};

struct RunSpec {
  std::string protocol;
  std::vector<std::string> positions{"0", "1"};
  std::vector<std::string> units{"1", "1"};
  std::vector<std::string> senses{"PosX", "PosX"};
  std::vector<std::string> lights;  // empty: start light
  SchedulerKind scheduler = SchedulerKind::SSynchRandom;
  std::string script;               // schedule file for the script kinds
  std::optional<std::string> visibility;
  bool nonRigid = false;
  std::optional<std::string> delta;
  std::size_t budget = 1000;
  std::size_t window = 0;           // 0: scheduler default
  std::size_t moveSteps = 3;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> frameSeed;
  bool earlyExit = true;
  std::string out;                  // trace path; empty: default location
};

int cmdRun(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmdReplay(const std::string& tracePath, std::ostream& out, std::ostream& err);

struct FuzzSpec {
  std::string protocol;
  SchedulerKind scheduler = SchedulerKind::SSynchRandom;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t budget = 1000;
  std::size_t window = 0;
  bool nonRigid = false;
  std::optional<std::string> delta;
  std::optional<std::string> visibility;
  std::string maxDist = "10";
  std::vector<std::string> unitRange{"1/4", "4"};
  bool equalUnits = false;
  std::string csv;  // empty: standard output
};

int cmdFuzz(const FuzzSpec& spec, std::ostream& out, std::ostream& err);

struct LemmaSpec {
  std::string manifest;
  std::vector<std::uint64_t> seeds{0, 1, 2};
  std::size_t randomInterior = 3;
  std::string report;         // empty: standard output
  std::string counterexamples;  // empty: output directory
};

int cmdLemmaSuite(const LemmaSpec& spec, std::ostream& out, std::ostream& err);

struct EnumerateSpec {
  std::string protocol;
  std::vector<std::string> distances{"1"};
  std::vector<std::string> lights;  // pairs "X,Y"; empty: every pair
  std::optional<std::string> delta;
  std::optional<std::string> visibility;
  std::size_t depth = 25;
  std::size_t window = 3;
  std::size_t maxStates = 2'000'000;
};

int cmdEnumerate(const EnumerateSpec& spec, std::ostream& out, std::ostream& err);

struct AdversarySpec {
  std::string kind;  // thm1 | thm4
  std::string table;
  std::string separation = "1";
  std::size_t budget = 100;
  std::string out;
};

int cmdAdversary(const AdversarySpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv with the subcommand grammar and dispatches.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rendezvous::cli

#endif  // RENDEZVOUS_CLI_COMMANDS_HPP_
