#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matopo/border.hpp"
#include "matopo/complex.hpp"

namespace matopo {

struct ComponentReport {
  int label = 0;
  std::vector<int> facets;
  // Intersection of heard-of sets over every vertex of the component.
  ProcSet kernel_vertex;
  // Intersection of border component carriers over the proper border facets.
  ProcSet kernel_border;
};

struct SolvabilityReport {
  int rounds = 0;
  int facet_count = 0;
  std::vector<ComponentReport> components;
  bool strict_solvable = false;  // all vertex kernels nonempty
  bool border_solvable = false;  // all border kernels nonempty
};

struct AnalyzeOptions {
  bool allow_non_rooted = false;
  std::size_t facet_budget = default_facet_budget();
};

SolvabilityReport analyze(const Adversary& adv, int rounds, const AnalyzeOptions& opts = {});
SolvabilityReport analyze(const ProtocolComplex& pc);

struct MinRoundsResult {
  std::optional<int> rounds;      // empty when the cap was exhausted
  int cap = 0;
  SolvabilityReport last_report;  // at the solution round, or at the cap
};

// Smallest r <= cap with strict solvability; linear scan from r = 0.
MinRoundsResult min_termination_rounds(const Adversary& adv, int cap,
                                       const AnalyzeOptions& opts = {});

struct DecisionMap {
  int rounds = 0;
  std::vector<int> decider_of_component;  // minimum-index member of each vertex kernel
};

// Requires strict solvability at the given round.
DecisionMap extract_decision_map(const Adversary& adv, int rounds,
                                 const AnalyzeOptions& opts = {});

struct SimulateOptions {
  bool exhaustive = true;
  int samples = 0;
  std::uint64_t seed = 0;
  std::size_t facet_budget = default_facet_budget();
};

struct Transcript {
  std::vector<int> sequence;
  std::vector<int> decisions;  // per process
};

struct SimulationResult {
  bool passed = false;
  std::size_t sequences = 0;
  std::string failure;  // nonempty iff a property was violated
  std::vector<Transcript> transcripts;
};

// Runs the full-information evolution for each graph sequence, decides through
// the decision map, and checks Termination, Agreement and Strong Validity.
SimulationResult simulate(const Adversary& adv, const DecisionMap& dm,
                          const SimulateOptions& opts = {});

std::string transcripts_to_text(const SimulationResult& res, const Adversary& adv);

}  // namespace matopo
