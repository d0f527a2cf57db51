// Copyright 2026 The Islanders Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "islanders/dsl.h"
#include "islanders/errors.h"

#ifndef ISLANDERS_CORPUS_DIR
#define ISLANDERS_CORPUS_DIR "corpus"
#endif

namespace islanders::cli {

namespace fs = std::filesystem;

namespace {

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json Names(const Puzzle& puzzle, const std::vector<PersonId>& people) {
  Json arr = Json::array();
  for (PersonId p : people) arr.push_back(puzzle.suspects[p]);
  return arr;
}

std::string JoinNames(const Puzzle& puzzle,
                      const std::vector<PersonId>& people) {
  if (people.empty()) return "(none)";
  std::string out;
  for (PersonId p : people) {
    if (!out.empty()) out += ", ";
    out += puzzle.suspects[p];
  }
  return out;
}

std::string JoinIds(const std::vector<PersonId>& people) {
  std::string out = "{";
  for (std::size_t i = 0; i < people.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(people[i]);
  }
  return out + "}";
}

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("ISLANDER_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t seed = std::stoull(env, &used, 10);
      if (used == std::string_view(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("ISLANDER_SEED is not an integer: ") + env);
  }
  return kDefaultSeed;
}

// "3" or "1-4".
std::pair<int, int> ParseCriminals(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw ConfigError("--criminals expects <int> or <int>-<int>, got '" +
                        text + "'");
    }
    return v;
  };
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const int k = parse_int(text);
    return {k, k};
  }
  return {parse_int(text.substr(0, dash)), parse_int(text.substr(dash + 1))};
}

int CmdSolve(const std::string& path, bool json, std::ostream& out,
             std::ostream& err) {
  Puzzle puzzle;
  try {
    puzzle = ParsePuzzle(ReadFile(path));
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
    return kExitError;
  }
  const SolveReport report = Solve(puzzle);
  if (json) {
    out << ReportToJson(report, puzzle).dump(2) << "\n";
  } else {
    out << ReportToText(report, puzzle);
  }
  return ExitCodeFor(report.verdict);
}

int CmdCorpus(const std::string& dir, bool json, std::ostream& out,
              std::ostream& err) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".puz") files.push_back(entry.path());
  }
  if (ec) {
    err << "cannot list corpus directory " << dir << ": " << ec.message()
        << "\n";
    return kExitError;
  }
  std::sort(files.begin(), files.end());

  Json results = Json::array();
  int passed = 0;
  std::ostringstream text;
  for (const fs::path& file : files) {
    const std::string stem = file.stem().string();
    Json row;
    row["puzzle"] = stem;
    std::string problem;
    try {
      const Puzzle puzzle = ParsePuzzle(ReadFile(file));
      const SolveReport report = Solve(puzzle);
      const Json actual = ReportToJson(report, puzzle);
      row["verdict"] = actual["verdict"];
      const fs::path expected_path =
          file.parent_path() / (stem + ".expected.json");
      if (!fs::exists(expected_path)) {
        problem = "missing " + expected_path.filename().string();
      } else {
        // Key order and whitespace do not matter.
        const nlohmann::json expected =
            nlohmann::json::parse(ReadFile(expected_path));
        if (expected != nlohmann::json::parse(actual.dump())) {
          problem = "report differs from expected";
        }
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    const bool ok = problem.empty();
    row["pass"] = ok;
    if (!ok) row["error"] = problem;
    results.push_back(row);
    if (ok) ++passed;
    text << (ok ? "PASS  " : "FAIL  ") << stem;
    if (row.contains("verdict")) {
      text << "  " << row["verdict"].get<std::string>();
    }
    if (!ok) text << "  (" << problem << ")";
    text << "\n";
  }
  const int failed = static_cast<int>(files.size()) - passed;
  if (json) {
    Json doc;
    doc["results"] = results;
    doc["passed"] = passed;
    doc["failed"] = failed;
    out << doc.dump(2) << "\n";
  } else {
    out << text.str() << passed << "/" << files.size() << " puzzles match\n";
  }
  return failed == 0 && !files.empty() ? kExitOk : kExitError;
}

}  // namespace

Json ReportToJson(const SolveReport& report, const Puzzle& puzzle) {
  Json j;
  j["puzzle"] = report.puzzle_name;
  j["verdict"] = std::string(VerdictName(report.verdict));
  j["consistent_worlds"] = report.consistent_world_count;
  j["forced_guilty"] = Names(puzzle, report.forced_guilty);
  j["forced_innocent"] = Names(puzzle, report.forced_innocent);
  Json types = Json::object();
  for (const auto& [p, t] : report.forced_types) {
    types[puzzle.suspects[p]] = std::string(ShortName(t));
  }
  j["forced_types"] = types;
  if (report.forced_type_set) {
    Json set = Json::array();
    for (SpeakerType t : report.forced_type_set->Members()) {
      set.push_back(std::string(ShortName(t)));
    }
    j["forced_type_set"] = set;
  } else {
    j["forced_type_set"] = nullptr;
  }
  j["unresolved"] = Names(puzzle, report.unresolved);
  j["warnings"] = report.warnings;
  return j;
}

std::string ReportToText(const SolveReport& report, const Puzzle& puzzle) {
  std::ostringstream out;
  out << "puzzle: " << report.puzzle_name << "\n";
  out << "verdict: " << VerdictName(report.verdict) << " ("
      << report.consistent_world_count << " consistent world"
      << (report.consistent_world_count == 1 ? "" : "s") << ")\n";
  out << "guilty: " << JoinNames(puzzle, report.forced_guilty) << "\n";
  out << "innocent: " << JoinNames(puzzle, report.forced_innocent) << "\n";
  if (!report.forced_types.empty()) {
    out << "types:";
    for (const auto& [p, t] : report.forced_types) {
      out << " " << puzzle.suspects[p] << "=" << ShortName(t);
    }
    out << "\n";
  }
  if (report.forced_type_set) {
    out << "types present: " << ToString(*report.forced_type_set) << "\n";
  }
  if (!report.unresolved.empty()) {
    out << "unresolved: " << JoinNames(puzzle, report.unresolved) << "\n";
  }
  for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

int ExitCodeFor(Verdict verdict) {
  switch (verdict) {
    case Verdict::kUniqueWorld:
    case Verdict::kUniqueGuilt:
      return kExitOk;
    case Verdict::kMultiple:
      return kExitMultiple;
    case Verdict::kInconsistent:
      return kExitInconsistent;
  }
  return kExitError;
}

Json SimulationToJson(const SimulationConfig& config,
                      const SimulationSummary& summary) {
  Json j;
  j["strategy"] = std::string(StrategyName(config.strategy));
  if (config.strategy == Strategy::kSolveLiars) {
    j["mode"] = config.liars_mode == LiarsMode::kRobust ? "robust"
                                                        : "paper-literal";
  }
  j["island"] = std::string(IslandModeName(config.world.island));
  j["n"] = config.world.n;
  j["criminals"] = {config.world.min_criminals, config.world.max_criminals};
  j["knowledge_density"] = config.world.knowledge_density;
  j["count_public"] = config.world.count_public;
  j["seed"] = config.world.seed;
  j["trials"] = summary.trials;
  j["successes"] = summary.successes;
  Json failures = Json::array();
  for (const TrialFailure& f : summary.failures) {
    Json fj;
    fj["trial"] = f.trial;
    fj["world_seed"] = f.world_seed;
    fj["guilty"] = f.guilty;
    fj["expected"] = f.expected;
    fj["accused"] = f.result.accused;
    Json transcript = Json::array();
    for (const TranscriptEntry& e : f.result.transcript) {
      transcript.push_back({{"person", e.person},
                            {"question", ToString(e.question)},
                            {"answer", ToString(e.answer)}});
    }
    fj["transcript"] = transcript;
    failures.push_back(fj);
  }
  j["failures"] = failures;
  Json questions;
  questions["min"] = summary.min_questions;
  questions["max"] = summary.max_questions;
  questions["total"] = summary.total_questions;
  j["questions"] = questions;
  return j;
}

std::string SimulationToText(const SimulationConfig& config,
                             const SimulationSummary& summary) {
  std::ostringstream out;
  out << "strategy: " << StrategyName(config.strategy);
  if (config.strategy == Strategy::kSolveLiars) {
    out << " ("
        << (config.liars_mode == LiarsMode::kRobust ? "robust"
                                                    : "paper-literal")
        << ")";
  }
  out << "\nisland: " << IslandModeName(config.world.island)
      << "  n: " << config.world.n << "  criminals: "
      << config.world.min_criminals;
  if (config.world.max_criminals != config.world.min_criminals) {
    out << "-" << config.world.max_criminals;
  }
  out << "  seed: " << config.world.seed << "\n";
  out << "solved: " << summary.successes << "/" << summary.trials << "\n";
  if (summary.trials > 0) {
    out << "questions: min " << summary.min_questions << ", max "
        << summary.max_questions << ", mean "
        << static_cast<double>(summary.total_questions) / summary.trials
        << "\n";
  }
  for (const TrialFailure& f : summary.failures) {
    out << "failure in trial " << f.trial << " (world seed " << f.world_seed
        << "): guilty " << JoinIds(f.guilty) << ", expected "
        << JoinIds(f.expected) << ", accused " << JoinIds(f.result.accused)
        << "\n";
    for (const TranscriptEntry& e : f.result.transcript) {
      out << "  " << e.person << ": " << ToString(e.question) << " -> "
          << ToString(e.answer) << "\n";
    }
  }
  return out.str();
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Solve islander guilt puzzles and simulate interrogations",
               "islanders"};
  app.require_subcommand(1);

  bool json = false;

  std::string solve_path;
  CLI::App* solve = app.add_subcommand("solve", "Solve a puzzle file");
  solve->add_option("file", solve_path, "Puzzle file")->required();
  solve->add_flag("--json", json, "Print the report as JSON");

  std::string corpus_dir = ISLANDERS_CORPUS_DIR;
  CLI::App* corpus =
      app.add_subcommand("corpus", "Check the bundled puzzles against "
                                   "their expected reports");
  corpus->add_option("--dir", corpus_dir, "Corpus directory");
  corpus->add_flag("--json", json, "Print the results as JSON");

  std::string strategy_name;
  std::string island_name;
  std::string criminals = "1";
  std::string mode_name = "robust";
  int n = 5;
  int trials = 1000;
  std::uint64_t seed = 0;
  double density = 0.0;
  bool count_public = false;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a strategy on random worlds");
  simulate->add_option("--strategy", strategy_name, "Strategy name")
      ->required();
  simulate->add_option("--island", island_name, "tt, liars or mixed");
  simulate->add_option("--n", n, "Number of persons");
  simulate->add_option("--criminals", criminals, "Count or range a-b");
  simulate->add_option("--trials", trials, "Number of worlds");
  CLI::Option* seed_opt = simulate->add_option("--seed", seed, "Base seed");
  simulate->add_option("--knowledge-density", density,
                       "Chance that a person knows about another");
  simulate->add_flag("--count-public", count_public,
                     "Make the number of criminals public");
  simulate->add_option("--mode", mode_name,
                       "Liars strategy: robust or paper-literal");
  simulate->add_flag("--json", json, "Print the summary as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return CmdSolve(solve_path, json, out, err);
    if (corpus->parsed()) return CmdCorpus(corpus_dir, json, out, err);

    SimulationConfig config;
    const auto strategy = ParseStrategy(strategy_name);
    if (!strategy) {
      std::string names;
      for (Strategy s : AllStrategies()) {
        names += names.empty() ? "" : ", ";
        names += StrategyName(s);
      }
      err << "error: unknown strategy '" << strategy_name
          << "' (expected one of " << names << ")\n";
      return kExitError;
    }
    config.strategy = *strategy;
    config.world.island = DefaultIsland(*strategy);
    if (!island_name.empty()) {
      const auto island = ParseIslandMode(island_name);
      if (!island) {
        err << "error: unknown island '" << island_name
            << "' (expected tt, liars or mixed)\n";
        return kExitError;
      }
      config.world.island = *island;
    }
    if (mode_name == "robust") {
      config.liars_mode = LiarsMode::kRobust;
    } else if (mode_name == "paper-literal") {
      config.liars_mode = LiarsMode::kPaperLiteral;
    } else {
      err << "error: unknown mode '" << mode_name
          << "' (expected robust or paper-literal)\n";
      return kExitError;
    }
    if (trials < 1) {
      err << "error: --trials must be at least 1\n";
      return kExitError;
    }
    config.trials = trials;
    config.world.n = n;
    std::tie(config.world.min_criminals, config.world.max_criminals) =
        ParseCriminals(criminals);
    config.world.knowledge_density = density;
    config.world.count_public = count_public;
    config.world.secret = *strategy == Strategy::kSecretAttribute;
    config.world.seed = seed_opt->count() > 0 ? seed : DefaultSeed();

    const SimulationSummary summary = RunSimulation(config);
    if (json) {
      out << SimulationToJson(config, summary).dump(2) << "\n";
    } else {
      out << SimulationToText(config, summary);
    }
    return summary.failures.empty() ? kExitOk : kExitMultiple;
  } catch (const PreconditionError& e) {
    err << "precondition refused: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace islanders::cli
