// Copyright 2026 The Beatpath Authors
//
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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "beatpath/election.hpp"
#include "beatpath/election_io.hpp"
#include "beatpath/errors.hpp"
#include "beatpath/homogenize.hpp"
#include "beatpath/oracle.hpp"
#include "beatpath/schulze.hpp"
#include "beatpath/ucm.hpp"
#include "json.hpp"

namespace beatpath::cli {
namespace {

using nlohmann::json;

struct ManipulateOptions {
  std::string file;
  std::string prefer;
  std::optional<Weight> manipulators;
  std::string mode = "co-winner";
  bool unique = false;
  std::vector<Weight> weights;
  bool json_output = false;
  bool explain = false;
  std::string search = "identical";
};

// What a manipulation-style command found, ready for printing.
struct ManipulationReport {
  bool found = false;
  std::optional<std::vector<CandidateId>> lambda;
  std::vector<Ballot> votes;
  std::vector<RuleFiring> trace;
  bool verified = false;
};

std::string join_names(const std::vector<CandidateId>& ids,
                       const CandidateRegistry& registry) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ',';
    out += registry.name(ids[i]);
  }
  return out;
}

json names_json(const std::vector<CandidateId>& ids,
                const CandidateRegistry& registry) {
  json out = json::array();
  for (CandidateId id : ids) out.push_back(registry.name(id));
  return out;
}

json strengths_json(const StrengthMatrix& s) {
  json rows = json::array();
  for (CandidateId x = 0; x < s.size(); ++x) {
    json row = json::array();
    for (CandidateId y = 0; y < s.size(); ++y) {
      row.push_back(x == y ? json(nullptr) : json(s(x, y)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json trace_json(const std::vector<RuleFiring>& trace,
                const CandidateRegistry& registry) {
  json out = json::array();
  for (const RuleFiring& f : trace) {
    out.push_back({{"pass", f.pass},
                   {"rule", static_cast<int>(f.rule)},
                   {"target", registry.name(f.target)},
                   {"old", f.old_bound},
                   {"new", f.new_bound}});
  }
  return out;
}

// Recomputes the election with the manipulators' ballots through the Schulze
// engine.
bool verify(const WeightedMajorityGraph& g, const std::vector<Ballot>& votes,
            CandidateId c, WinGoal goal) {
  WeightedMajorityGraph combined = g;
  for (const Ballot& vote : votes) combined.add_ballot(vote.order, vote.weight);
  const WinningSet winners = winning_set(combined);
  return goal == WinGoal::kCoWinner ? winners.contains(c)
                                    : winners.is_unique_winner(c);
}

WinGoal parse_goal(const ManipulateOptions& opts) {
  if (opts.unique) return WinGoal::kUnique;
  if (opts.mode == "co-winner") return WinGoal::kCoWinner;
  if (opts.mode == "unique") return WinGoal::kUnique;
  throw ValidationError("--mode must be co-winner or unique");
}

Weight manipulator_count(const ManipulateOptions& opts) {
  if (!opts.weights.empty()) {
    const auto count = static_cast<Weight>(opts.weights.size());
    if (opts.manipulators && *opts.manipulators != count) {
      throw ValidationError("--manipulators disagrees with the number of --weights");
    }
    return count;
  }
  if (!opts.manipulators) {
    throw ValidationError("--manipulators is required without --weights");
  }
  if (*opts.manipulators < 0) {
    throw ValidationError("--manipulators must be non-negative");
  }
  return *opts.manipulators;
}

ManipulationReport solve(const WeightedMajorityGraph& g, CandidateId c,
                         const ManipulateOptions& opts, WinGoal goal) {
  ManipulationReport report;
  const Weight k = manipulator_count(opts);
  if (!opts.weights.empty()) {
    if (goal != WinGoal::kCoWinner) {
      throw ValidationError("weighted manipulation supports co-winner mode only");
    }
    if (auto lambda = solve_wcm_bounded(g, opts.weights, c)) {
      report.found = true;
      report.lambda = lambda->order;
      for (Weight w : opts.weights) report.votes.push_back({lambda->order, w});
    }
  } else if (goal == WinGoal::kUnique && k == 0) {
    report.found = winning_set(g).is_unique_winner(c);
  } else {
    UcmOutcome outcome = goal == WinGoal::kCoWinner
                             ? solve_ucm_cowinner(g, c, k)
                             : solve_ucm_unique(g, c, k);
    report.found = outcome.found;
    if (outcome.lambda) report.lambda = outcome.lambda->order;
    report.votes = std::move(outcome.manipulator_ballots);
    report.trace = std::move(outcome.trace);
  }
  if (report.found) report.verified = verify(g, report.votes, c, goal);
  return report;
}

ManipulationReport search(const WeightedMajorityGraph& g, CandidateId c,
                          const ManipulateOptions& opts, WinGoal goal) {
  ManipulationReport report;
  const Weight k = manipulator_count(opts);
  if (!opts.weights.empty()) {
    if (goal != WinGoal::kCoWinner) {
      throw ValidationError("weighted manipulation supports co-winner mode only");
    }
    if (auto order = oracle::brute_wcm(g, opts.weights, c)) {
      report.found = true;
      report.lambda = *order;
      for (Weight w : opts.weights) report.votes.push_back({*order, w});
    }
  } else {
    oracle::SearchSpace space;
    if (opts.search == "identical") {
      space = oracle::SearchSpace::kIdentical;
    } else if (opts.search == "independent") {
      space = oracle::SearchSpace::kIndependent;
    } else {
      throw ValidationError("--search must be identical or independent");
    }
    const oracle::BruteOutcome outcome = oracle::brute_ucm(g, c, k, goal, space);
    report.found = outcome.found;
    for (const auto& order : outcome.votes) report.votes.push_back({order, 1});
  }
  if (report.found) report.verified = verify(g, report.votes, c, goal);
  return report;
}

void print_report(const ManipulationReport& report, const Election& election,
                  const WeightedMajorityGraph& g, CandidateId c,
                  const ManipulateOptions& opts, WinGoal goal,
                  std::ostream& out) {
  const CandidateRegistry& registry = election.registry;
  const StrengthMatrix s = strength_matrix(g);
  if (opts.json_output) {
    json doc = {
        {"candidates", registry.names()},
        {"preferred", registry.name(c)},
        {"mode", goal == WinGoal::kCoWinner ? "co-winner" : "unique"},
        {"winners", names_json(winning_set(s).winners(), registry)},
        {"strengths", strengths_json(s)},
        {"outcome", report.found ? "FOUND" : "IMPOSSIBLE"},
        {"lambda", report.lambda ? names_json(*report.lambda, registry)
                                 : json(nullptr)},
        {"trace", trace_json(report.trace, registry)},
    };
    json votes = json::array();
    for (const Ballot& vote : report.votes) {
      votes.push_back(
          {{"weight", vote.weight}, {"order", names_json(vote.order, registry)}});
    }
    doc["votes"] = std::move(votes);
    doc["verified"] = report.found ? json(report.verified) : json(nullptr);
    out << doc.dump(2) << '\n';
    return;
  }
  if (opts.explain) {
    out << "strengths:\n" << render_strength_table(s, registry);
    out << "trace:\n" << format_trace(report.trace, registry);
  }
  if (!report.found) {
    out << "IMPOSSIBLE\n";
    return;
  }
  out << "FOUND\n";
  if (report.lambda) {
    out << "lambda: " << format_order(*report.lambda, registry) << '\n';
  }
  for (const Ballot& vote : report.votes) {
    out << "vote: " << vote.weight << ": " << format_order(vote.order, registry)
        << '\n';
  }
  out << "verified: " << (report.verified ? "true" : "false") << '\n';
}

void add_manipulate_flags(CLI::App* cmd, ManipulateOptions& opts) {
  cmd->add_option("file", opts.file, "Election file")->required();
  cmd->add_option("--prefer", opts.prefer, "Preferred candidate")->required();
  cmd->add_option("--manipulators", opts.manipulators, "Number of manipulators");
  cmd->add_option("--mode", opts.mode, "co-winner or unique");
  cmd->add_flag("--unique", opts.unique, "Same as --mode unique");
  cmd->add_option("--weights", opts.weights, "Manipulator weights w1,..,wk")
      ->delimiter(',');
  cmd->add_flag("--json", opts.json_output, "Machine-readable report");
}

int manipulate(const ManipulateOptions& opts, bool brute, std::ostream& out) {
  const Election election = read_election_file(opts.file);
  const WeightedMajorityGraph g = election.graph();
  const CandidateId c = election.registry.id(opts.prefer);
  const WinGoal goal = parse_goal(opts);
  const ManipulationReport report =
      brute ? search(g, c, opts, goal) : solve(g, c, opts, goal);
  print_report(report, election, g, c, opts, goal, out);
  return report.found && !report.verified ? kExitInternal : kExitOk;
}

int winner(const std::string& file, bool strengths, bool json_output,
           std::ostream& out) {
  const Election election = read_election_file(file);
  const StrengthMatrix s = strength_matrix(election.graph());
  const WinningSet winners = winning_set(s);
  if (json_output) {
    json doc = {{"candidates", election.registry.names()},
                {"winners", names_json(winners.winners(), election.registry)},
                {"strengths", strengths_json(s)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "winners: " << join_names(winners.winners(), election.registry) << '\n';
  if (strengths) {
    out << "strengths:\n" << render_strength_table(s, election.registry);
  }
  return kExitOk;
}

int resolvability(const std::string& file, const std::string& prefer,
                  std::ostream& out) {
  const Election election = read_election_file(file);
  const WeightedMajorityGraph g = election.graph();
  const CandidateId c = election.registry.id(prefer);
  const Ballot vote = resolvability_vote(g, c);
  out << "vote: " << format_order(vote.order, election.registry) << '\n';
  out << "winners: "
      << join_names(winning_set(g.with_ballot(vote.order, 1)).winners(),
                    election.registry)
      << '\n';
  return kExitOk;
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    throw ValidationError("cannot write '" + path + "'");
  }
}

int mcgarvey(const std::string& file, const std::string& output,
             std::ostream& out) {
  const Election election = read_election_file(file);
  const Profile profile = mcgarvey_profile(election.graph(), election.registry);
  write_text(output, serialize_election(profile), out);
  return kExitOk;
}

struct GenOptions {
  std::size_t candidates = 0;
  std::size_t votes = 0;
  std::uint64_t seed = 0;
  bool wmg = false;
  Weight max_weight = 9;
  std::string output;
};

int gen(const GenOptions& opts, std::ostream& out) {
  if (opts.candidates < 1) throw ValidationError("--candidates must be >= 1");
  oracle::GeneratorConfig config;
  config.seed = opts.seed;
  config.min_candidates = config.max_candidates = opts.candidates;
  config.min_voters = config.max_voters = opts.votes;
  config.max_weight = opts.wmg ? opts.max_weight : 1;
  config.culture =
      opts.wmg ? oracle::Culture::kWmgDirect : oracle::Culture::kImpartial;
  if (opts.wmg && opts.max_weight < 0) {
    throw ValidationError("--max-weight must be non-negative");
  }
  oracle::InstanceGenerator generator(config);
  std::string text;
  if (opts.wmg) {
    text = serialize_election(
        CandidateRegistry::with_default_names(opts.candidates),
        generator.next_wmg());
  } else {
    text = serialize_election(generator.next_profile());
  }
  write_text(opts.output, text, out);
  return kExitOk;
}

int explain(const ManipulateOptions& opts, std::ostream& out) {
  if (opts.prefer.empty()) {
    const Election election = read_election_file(opts.file);
    const StrengthMatrix s = strength_matrix(election.graph());
    out << "strengths:\n" << render_strength_table(s, election.registry);
    out << "winners: "
        << join_names(winning_set(s).winners(), election.registry) << '\n';
    return kExitOk;
  }
  ManipulateOptions with_trace = opts;
  with_trace.explain = true;
  return manipulate(with_trace, false, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Schulze winners and coalitional manipulation", "beatpath"};
  app.require_subcommand(1);

  std::string file;
  bool show_strengths = false;
  bool json_output = false;
  auto* winner_cmd = app.add_subcommand("winner", "Print the Schulze winners");
  winner_cmd->add_option("file", file, "Election file")->required();
  winner_cmd->add_flag("--strengths", show_strengths, "Print the strength table");
  winner_cmd->add_flag("--json", json_output, "Machine-readable report");

  ManipulateOptions manip;
  auto* manipulate_cmd = app.add_subcommand(
      "manipulate", "Find manipulator ballots making a candidate win");
  add_manipulate_flags(manipulate_cmd, manip);
  manipulate_cmd->add_flag("--explain", manip.explain,
                           "Print strengths and the bound-tightening trace");

  ManipulateOptions brute;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive manipulation search");
  add_manipulate_flags(oracle_cmd, brute);
  oracle_cmd->add_option("--search", brute.search, "identical or independent");

  std::string prefer;
  auto* resolvability_cmd = app.add_subcommand(
      "resolvability", "One extra ballot making a co-winner the unique winner");
  resolvability_cmd->add_option("file", file, "Election file")->required();
  resolvability_cmd->add_option("--prefer", prefer, "Co-winner to promote")
      ->required();

  std::string output;
  auto* mcgarvey_cmd =
      app.add_subcommand("mcgarvey", "Profile realising a WMG file");
  mcgarvey_cmd->add_option("file", file, "WMG election file")->required();
  mcgarvey_cmd->add_option("-o,--output", output, "Output election file")
      ->required();

  GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random election");
  gen_cmd->add_option("--candidates", gen_opts.candidates)->required();
  gen_cmd->add_option("--votes", gen_opts.votes, "Ballots (profile mode)");
  gen_cmd->add_option("--seed", gen_opts.seed)->required();
  gen_cmd->add_flag("--wmg", gen_opts.wmg, "Emit a random WMG instead");
  gen_cmd->add_option("--max-weight", gen_opts.max_weight,
                      "WMG arc bound (default 9)");
  gen_cmd->add_option("-o,--output", gen_opts.output, "Output file");

  ManipulateOptions explain_opts;
  auto* explain_cmd = app.add_subcommand(
      "explain", "Strength table and, with --prefer, the manipulation trace");
  explain_cmd->add_option("file", explain_opts.file, "Election file")
      ->required();
  explain_cmd->add_option("--prefer", explain_opts.prefer);
  explain_cmd->add_option("--manipulators", explain_opts.manipulators);
  explain_cmd->add_option("--mode", explain_opts.mode);
  explain_cmd->add_flag("--unique", explain_opts.unique);

  std::vector<std::string> argv_storage{"beatpath"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& arg : argv_storage) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*winner_cmd) return winner(file, show_strengths, json_output, out);
    if (*manipulate_cmd) return manipulate(manip, false, out);
    if (*oracle_cmd) return manipulate(brute, true, out);
    if (*resolvability_cmd) return resolvability(file, prefer, out);
    if (*mcgarvey_cmd) return mcgarvey(file, output, out);
    if (*gen_cmd) return gen(gen_opts, out);
    if (*explain_cmd) return explain(explain_opts, out);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RejectedInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace beatpath::cli
