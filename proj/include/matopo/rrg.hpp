#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matopo/border.hpp"
#include "matopo/complex.hpp"

namespace matopo {

// Root reachability graph. RRG_0 has one fat node per distinct border root
// face of the one-round complex; RRG_1 replaces every facet by an instance of
// RRG_0, merging instance nodes across facet intersections that the root
// protects. Shared (merged) nodes are non-fat.
struct Rrg {
  struct Node {
    std::vector<std::pair<int, int>> members;  // (facet, root-face id), sorted
    int root_face_id = -1;
    bool fat = false;
    // Carrier color sets of the proper facets this node stands for; the
    // compatibility test intersects them. Empty for non-fat nodes.
    std::vector<ProcSet> carriers;
    bool operator==(const Node&) const = default;
  };

  int iteration = 0;
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;  // node index pairs, a < b, sorted
  std::vector<ProcSet> root_colors;        // root-face id -> colors

  std::vector<int> component_of_node() const;
  bool compatible() const;
  bool operator==(const Rrg& o) const { return edges == o.edges && nodes == o.nodes; }
};

Rrg build_rrg0(const ProtocolComplex& p1);
Rrg build_rrg0(const Adversary& adv);
Rrg build_rrg1(const Adversary& adv);

// Removes the edges of every shared node whose protecting fat root face does
// not live in its connected component.
Rrg rrg_iterate(const Rrg& rrg);

struct RrgVerdict {
  bool solvable = false;
  int iterations = 0;
  std::optional<int> k_round_bound;  // iterations * (n - 1), solvable only
  std::vector<Rrg> trace;            // RRG_0, RRG_1, ...
};

RrgVerdict rrg_decide(const Adversary& adv, int max_iterations = 64);

}  // namespace matopo
