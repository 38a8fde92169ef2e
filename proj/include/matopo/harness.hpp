#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matopo/digraph.hpp"
#include "matopo/nerve.hpp"
#include "matopo/oracle.hpp"
#include "matopo/rrg.hpp"

namespace matopo {

enum class Method { Nerve, Rrg, Oracle };

Method method_from_string(const std::string& s);

struct DecideResult {
  Method method = Method::Nerve;
  // empty = undecided at the cap (oracle method only)
  std::optional<bool> solvable;
  bool trivially_impossible = false;  // adversary contains a non-rooted graph
  int iterations = 0;
  std::optional<int> k_round_bound;
  std::optional<int> min_rounds;
  int cap = 0;
};

// Front door used by the CLI and the bindings. Non-rooted adversaries yield
// the trivial unsolvability verdict instead of an exception.
DecideResult decide(const Adversary& adv, Method method, int cap = 6);

struct VerifyConfig {
  int n_min = 2;
  int n_max = 4;
  int max_graphs = 4;
  int count = 200;
  std::uint64_t seed = 1;
  int cap = 6;
  bool exhaustive = false;  // enumerate all adversaries with n = n_max instead
  bool log_progress = false;
};

struct GapInstance {
  std::string description;
  int nerve_iterations = 0;
  int min_rounds = 0;
};

struct VerifyReport {
  int checked = 0;
  int solvable = 0;
  int unsolvable = 0;
  // Hard check failures; each entry carries a printable counterexample.
  std::vector<std::string> violations;
  // Corpus-property observations that are reported but tolerated.
  std::vector<std::string> findings;
  std::vector<GapInstance> gaps;  // nerve iterations < oracle minimal rounds
  bool rrg_bound_covers_all = true;
  bool ok() const { return violations.empty(); }
};

// Cross-validates the decision procedures against the oracle and checks the
// structural invariants on a deterministic corpus.
VerifyReport run_verification(const VerifyConfig& cfg, std::string* log = nullptr);

}  // namespace matopo
