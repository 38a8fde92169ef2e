#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matopo/procset.hpp"

namespace matopo {

struct ProcessId {
  int index = 0;
  std::string display_name;
};

// Default display names: the usual small palettes (r, g, w, ...), then p1, p2, ...
std::vector<std::string> default_process_names(int n);

// A directed communication graph for one round. Edge j -> i means process i
// hears process j. Self-loops are mandatory and inserted by every constructor.
class CommGraph {
 public:
  CommGraph(int n, std::vector<ProcSet> in_sets);
  static CommGraph identity(int n);
  static CommGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  bool edge(int from, int to) const { return in_[to].contains(from); }
  ProcSet in_set(int p) const { return in_[p]; }
  const std::vector<ProcSet>& in_sets() const { return in_; }

  // Off-diagonal edges (from, to), sorted; the wire representation.
  std::vector<std::pair<int, int>> edges_without_self_loops() const;

  bool operator==(const CommGraph& o) const = default;
  auto operator<=>(const CommGraph& o) const = default;

 private:
  int n_;
  std::vector<ProcSet> in_;  // in_[i] = in-neighbors of i, always contains i
};

// Strongly connected components plus the condensation DAG.
// Components are sorted by their smallest member.
struct SccDecomposition {
  std::vector<ProcSet> components;
  std::vector<int> component_of;                  // process -> component id
  std::vector<std::pair<int, int>> condensation;  // edges between component ids
};

SccDecomposition sccs(const CommGraph& g);

// Components of the condensation with no incoming edge; never empty.
std::vector<ProcSet> root_components(const CommGraph& g);
bool is_rooted(const CommGraph& g);

// (a,b),(b,c) in E  =>  (a,c) in E.
bool is_transitively_closed(const CommGraph& g);
// For every a != b there is a directed path a->b or b->a.
bool is_unilaterally_connected(const CommGraph& g);

// A nonempty, duplicate-free set of communication graphs on the same n
// processes, stored in canonical order (lexicographic in-set bits).
class Adversary {
 public:
  Adversary(std::vector<CommGraph> graphs, std::vector<std::string> names = {});

  int n() const { return n_; }
  int size() const { return static_cast<int>(graphs_.size()); }
  const CommGraph& graph(int i) const { return graphs_[i]; }
  const std::vector<CommGraph>& graphs() const { return graphs_; }
  const std::vector<std::string>& process_names() const { return names_; }

  bool all_rooted() const;
  // Index of some non-rooted graph, if any.
  std::optional<int> first_non_rooted() const;

  bool operator==(const Adversary& o) const {
    return n_ == o.n_ && graphs_ == o.graphs_;
  }

 private:
  int n_;
  std::vector<CommGraph> graphs_;
  std::vector<std::string> names_;
};

// All 2^(n(n-1)) reflexive digraphs on n processes. Capped at n <= 4.
Adversary enumerate_all_graphs(int n);

// All unilaterally connected, transitively closed reflexive digraphs.
Adversary enumerate_iis_adversary(int n, int cap = 4);

// Number of rooted reflexive digraphs on n processes (n <= 4, enumerated).
int rooted_graph_count(int n);

// k distinct rooted graphs, sampled deterministically from the seed.
Adversary random_rooted_adversary(int n, int k, std::uint64_t seed);

}  // namespace matopo
