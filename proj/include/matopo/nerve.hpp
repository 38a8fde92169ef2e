#pragma once

#include <vector>

#include "matopo/border.hpp"
#include "matopo/complex.hpp"

namespace matopo {

// Facet-adjacency graph of the one-round complex, nodes labeled by their root
// faces and edges labeled by the root faces that can protect the intersection.
struct NerveGraph {
  struct Edge {
    int a = 0, b = 0;            // node (facet) indices, a < b
    std::vector<int> label;      // root-face ids, sorted
    bool operator==(const Edge&) const = default;
  };

  int node_count = 0;
  std::vector<int> node_root;                      // facet -> root-face id
  std::vector<bool> proper;                        // facet -> proper border facet
  std::vector<ProcSet> root_colors;                // root-face id -> colors
  std::vector<std::vector<ViewRef>> root_faces;    // root-face id -> vertex set
  std::vector<Edge> edges;                         // empty-labeled edges removed
  int intersecting_pairs = 0;                      // before empty-label removal
  int iteration = 0;

  bool same_labeling(const NerveGraph& o) const;
  std::vector<int> component_of_node() const;
  bool compatible() const;
};

NerveGraph build_nerve(const ProtocolComplex& p1);
NerveGraph build_nerve(const Adversary& adv);

// One pruning step: an edge keeps a protecting root face only while a node
// with that exact root face lives in the edge's connected component.
NerveGraph iterate(const NerveGraph& ng);

struct NerveVerdict {
  bool solvable = false;
  int iterations = 0;
  std::vector<NerveGraph> trace;  // N_0, N_1, ...
  const NerveGraph& final_graph() const { return trace.back(); }
};

NerveVerdict nerve_decide(const Adversary& adv);

}  // namespace matopo
