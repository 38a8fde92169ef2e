#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matopo/digraph.hpp"
#include "matopo/views.hpp"

namespace matopo {

// One maximal simplex of the r-round protocol complex, indexed by the graph
// sequence that generated it.
struct Facet {
  std::vector<int> sequence;    // indices into the adversary, length r
  std::vector<ViewRef> verts;   // verts[i] owned by process i
  int carrier = -1;             // facet index in the (r-1)-round complex, -1 for r=0
  int last_graph() const { return sequence.empty() ? -1 : sequence.back(); }
};

std::size_t default_facet_budget();  // MATOPO_FACET_BUDGET env, else 200000

struct BuildOptions {
  bool allow_non_rooted = false;
  std::size_t facet_budget = default_facet_budget();
};

// The uninterpreted r-round protocol complex. Facets correspond one-to-one to
// graph sequences in D^r (asserted at build time); vertices are shared across
// facets through view interning. Immutable after construction.
class ProtocolComplex {
 public:
  static ProtocolComplex build(Adversary adv, int rounds, const BuildOptions& opts = {});

  const Adversary& adversary() const { return adv_; }
  int n() const { return adv_.n(); }
  int rounds() const { return rounds_; }

  int facet_count() const { return static_cast<int>(facets_.size()); }
  const Facet& facet(int i) const { return facets_[i]; }
  const std::vector<Facet>& facets() const { return facets_; }
  int facet_of_sequence(std::span<const int> seq) const;

  int vertex_count() const { return static_cast<int>(vertex_list_.size()); }
  ViewRef vertex(int id) const { return vertex_list_[id]; }
  int vertex_id(ViewRef v) const;
  const std::vector<int>& facets_of_vertex(int vertex_id) const;

  // Shared vertices of two facets (a face, possibly empty).
  std::vector<ViewRef> intersection(int f1, int f2) const;
  ProcSet shared_colors(int f1, int f2) const;
  bool adjacent(int f1, int f2) const { return !shared_colors(f1, f2).empty(); }

  int component_count() const { return component_count_; }
  int component_of_facet(int f) const { return component_of_facet_[f]; }
  std::vector<std::vector<int>> components() const;

  // Number of distinct 1-faces.
  std::size_t count_edges() const;
  std::set<std::pair<int, int>> edge_pairs() const;  // by vertex id, sorted

 private:
  ProtocolComplex() : adv_({CommGraph::identity(1)}) {}
  Adversary adv_;
  int rounds_ = 0;
  std::vector<Facet> facets_;
  std::vector<ViewRef> vertex_list_;  // first-appearance order
  std::unordered_map<ViewRef, int> vertex_ids_;
  std::vector<std::vector<int>> vertex_facets_;
  std::vector<int> component_of_facet_;
  int component_count_ = 0;
};

// A complex over canonical vertex labels (process, color set), used to compare
// one-round complexes across constructions. Round-1 views are determined by
// their in-neighbor color sets, so this labeling is faithful.
struct LabeledComplex {
  using Vertex = std::pair<int, std::uint32_t>;
  int n = 0;
  std::set<Vertex> vertices;
  std::set<std::vector<Vertex>> facets;
  bool operator==(const LabeledComplex&) const = default;
};

LabeledComplex to_labeled_round1(const ProtocolComplex& pc);

// Direct construction of the standard chromatic subdivision of the initial
// simplex: vertices (p, S) with p in S; facets are the tuples admitting an
// inclusion chain ordering with the membership-containment side condition.
LabeledComplex chromatic_subdivision(int n);

// Direct enumeration of the communication pseudosphere over the initial
// simplex: vertices (p, S) with p in S, facets all transversal tuples.
LabeledComplex pseudosphere_by_definition(int n);

// The one-round complex under the adversary of all graphs.
ProtocolComplex pseudosphere(int n);

// True iff the one-round complex of the unilaterally-connected transitively-
// closed adversary equals the chromatic subdivision, as labeled complexes.
bool iis_equivalence_check(int n);

// Fubini numbers by independent recursion (test anchor for facet counts).
std::uint64_t ordered_set_partition_count(int n);

struct DotOptions {
  bool annotate_border = true;
};

// Deterministic DOT rendering: one node per vertex, one edge per 1-face,
// arrowheads giving the round-r information flow.
std::string export_dot(const ProtocolComplex& pc, const DotOptions& opts = {});

}  // namespace matopo
