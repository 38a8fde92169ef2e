// Command-line interface: decide / complex / simulate / verify.
//
// Exit codes: 0 solvable (or command succeeded), 1 usage/parse/budget error,
// 2 unsolvable, 3 undecided at the oracle cap, 4 trivially unsolvable because
// a graph is not rooted, 5 verification found a violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "matopo/errors.hpp"
#include "matopo/harness.hpp"
#include "matopo/io.hpp"
#include "matopo/render.hpp"

namespace {

using namespace matopo;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

int run_decide(const std::string& input, const std::string& method_name, int cap,
               const std::string& trace_prefix) {
  NamedAdversary na = load_input(input);
  Method method = method_from_string(method_name);
  DecideResult res = decide(na.adv, method, cap);

  if (res.trivially_impossible) {
    std::cout << "verdict: unsolvable (trivially: the adversary contains a graph "
                 "with more than one root component)\n";
    return 4;
  }
  if (!trace_prefix.empty() && method == Method::Nerve) {
    NerveVerdict v = nerve_decide(na.adv);
    for (const NerveGraph& ng : v.trace)
      write_file(trace_prefix + "_nerve_" + std::to_string(ng.iteration) + ".dot",
                 nerve_to_dot(ng, na.adv));
  }
  if (!trace_prefix.empty() && method == Method::Rrg) {
    RrgVerdict v = rrg_decide(na.adv);
    for (const Rrg& rrg : v.trace)
      write_file(trace_prefix + "_rrg_" + std::to_string(rrg.iteration) + ".dot",
                 rrg_to_dot(rrg, na.adv));
  }

  if (!res.solvable.has_value()) {
    std::cout << "verdict: undecided at cap " << cap << " (oracle method)\n";
    return 3;
  }
  std::cout << "verdict: " << (*res.solvable ? "solvable" : "unsolvable") << "\n";
  if (method != Method::Oracle) std::cout << "iterations: " << res.iterations << "\n";
  if (res.k_round_bound) std::cout << "k-round bound: " << *res.k_round_bound << "\n";
  if (res.min_rounds) std::cout << "minimal rounds: " << *res.min_rounds << "\n";
  return *res.solvable ? 0 : 2;
}

int run_complex(const std::string& input, int rounds, const std::string& dot_path,
                const std::string& json_path) {
  NamedAdversary na = load_input(input);
  BuildOptions opts;
  opts.allow_non_rooted = true;
  ProtocolComplex pc = ProtocolComplex::build(na.adv, rounds, opts);
  if (!dot_path.empty()) write_file(dot_path, export_dot(pc));
  if (!json_path.empty()) write_file(json_path, complex_to_json(pc));
  std::cout << "facets: " << pc.facet_count() << "\n";
  std::cout << "vertices: " << pc.vertex_count() << "\n";
  std::cout << "edges: " << pc.count_edges() << "\n";
  std::cout << "components: " << pc.component_count() << "\n";
  return 0;
}

int run_simulate(const std::string& input, const std::string& rounds_arg, bool exhaustive,
                 int random_count, std::uint64_t seed, int cap,
                 const std::string& transcript_path, const std::string& json_path) {
  NamedAdversary na = load_input(input);
  if (!na.adv.all_rooted()) {
    std::cout << "verdict: unsolvable (trivially: the adversary contains a graph "
                 "with more than one root component)\n";
    return 4;
  }
  int rounds;
  if (rounds_arg == "auto") {
    MinRoundsResult r = min_termination_rounds(na.adv, cap);
    if (!r.rounds) {
      std::cout << "not strictly solvable within cap " << cap << "; nothing to simulate\n";
      return 3;
    }
    rounds = *r.rounds;
  } else {
    rounds = std::stoi(rounds_arg);
  }
  DecisionMap dm = extract_decision_map(na.adv, rounds);
  SimulateOptions opts;
  opts.exhaustive = exhaustive;
  opts.samples = random_count;
  opts.seed = seed;
  SimulationResult res = simulate(na.adv, dm, opts);
  std::cout << "rounds: " << rounds << "\n";
  std::cout << "sequences: " << res.sequences << "\n";
  std::cout << "result: " << (res.passed ? "pass" : "FAIL (" + res.failure + ")") << "\n";
  if (!transcript_path.empty()) {
    write_file(transcript_path, transcripts_to_text(res, na.adv));
    std::cout << "transcript: " << transcript_path << "\n";
  }
  if (!json_path.empty()) {
    write_file(json_path, simulation_to_json(res, na.adv, opts));
    std::cout << "transcript-json: " << json_path << "\n";
  }
  return res.passed ? 0 : 5;
}

int run_verify(int n_max, int max_graphs, int count, std::uint64_t seed, int cap,
               bool exhaustive) {
  VerifyConfig cfg;
  cfg.n_max = n_max;
  cfg.n_min = exhaustive ? n_max : 2;
  cfg.max_graphs = max_graphs;
  cfg.count = count;
  cfg.seed = seed;
  cfg.cap = cap;
  cfg.exhaustive = exhaustive;
  VerifyReport report = run_verification(cfg);
  std::cout << "adversaries checked: " << report.checked << "\n";
  std::cout << "solvable: " << report.solvable << ", unsolvable: " << report.unsolvable << "\n";
  std::cout << "decision/termination gap instances: " << report.gaps.size() << "\n";
  for (const GapInstance& gap : report.gaps)
    std::cout << "  " << gap.description << ": nerve iterations " << gap.nerve_iterations
              << " < minimal rounds " << gap.min_rounds << "\n";
  std::cout << "rrg bound covers oracle rounds: " << (report.rrg_bound_covers_all ? "yes" : "NO")
            << "\n";
  for (const std::string& finding : report.findings) std::cout << "finding: " << finding << "\n";
  if (!report.ok()) {
    std::cout << "violations: " << report.violations.size() << "\n";
    for (const std::string& v : report.violations) std::cout << "VIOLATION " << v << "\n";
    return 5;
  }
  std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consensus solvability under oblivious message adversaries"};
  app.require_subcommand(1);

  std::string input, method = "nerve", trace_prefix;
  int cap = 6;
  auto* decide_cmd = app.add_subcommand("decide", "decide consensus solvability");
  decide_cmd->add_option("input", input, "adversary file or example name")->required();
  decide_cmd->add_option("--method", method, "nerve | rrg | oracle")
      ->check(CLI::IsMember({"nerve", "rrg", "oracle"}));
  decide_cmd->add_option("--cap", cap, "round cap for the oracle method");
  decide_cmd->add_option("--trace", trace_prefix, "write per-iteration DOT files");

  int rounds = 1;
  std::string dot_path, json_path;
  auto* complex_cmd = app.add_subcommand("complex", "build and export a protocol complex");
  complex_cmd->add_option("input", input, "adversary file or example name")->required();
  complex_cmd->add_option("--rounds", rounds, "number of rounds")->required();
  complex_cmd->add_option("--dot", dot_path, "write DOT here");
  complex_cmd->add_option("--json", json_path, "write JSON here");

  std::string sim_rounds = "auto", transcript_path, sim_json_path;
  bool exhaustive = false;
  int random_count = 100;
  std::uint64_t seed = 1;
  auto* sim_cmd = app.add_subcommand("simulate", "run consensus executions end to end");
  sim_cmd->add_option("input", input, "adversary file or example name")->required();
  sim_cmd->add_option("--rounds", sim_rounds, "round count or 'auto'");
  sim_cmd->add_flag("--exhaustive", exhaustive, "run every graph sequence");
  sim_cmd->add_option("--random", random_count, "number of random sequences");
  sim_cmd->add_option("--seed", seed, "seed for random mode");
  sim_cmd->add_option("--cap", cap, "round cap for 'auto'");
  sim_cmd->add_option("--transcript", transcript_path, "write the text transcript here");
  sim_cmd->add_option("--json", sim_json_path, "write the JSON transcript here");

  int v_n = 4, v_graphs = 4, v_count = 200;
  std::uint64_t v_seed = 1;
  int v_cap = 6;
  bool v_exhaustive = false;
  auto* verify_cmd = app.add_subcommand("verify", "cross-validate procedures on a corpus");
  verify_cmd->add_option("--n", v_n, "maximum process count (minimum is 2)");
  verify_cmd->add_option("--graphs", v_graphs, "maximum graphs per adversary");
  verify_cmd->add_option("--count", v_count, "number of random adversaries");
  verify_cmd->add_option("--seed", v_seed, "corpus seed");
  verify_cmd->add_option("--cap", v_cap, "oracle round cap");
  verify_cmd->add_flag("--exhaustive", v_exhaustive,
                       "enumerate all adversaries with n = --n instead of sampling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide_cmd->parsed()) return run_decide(input, method, cap, trace_prefix);
    if (complex_cmd->parsed()) return run_complex(input, rounds, dot_path, json_path);
    if (sim_cmd->parsed())
      return run_simulate(input, sim_rounds, exhaustive, random_count, seed, cap,
                          transcript_path, sim_json_path);
    if (verify_cmd->parsed())
      return run_verify(v_n, v_graphs, v_count, v_seed, v_cap, v_exhaustive);
  } catch (const NonRootedError& e) {
    std::cout << "verdict: unsolvable (trivially: " << e.what() << ")\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
