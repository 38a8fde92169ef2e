#include "matopo/nerve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "matopo/errors.hpp"

namespace matopo {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool NerveGraph::same_labeling(const NerveGraph& o) const { return edges == o.edges; }

std::vector<int> NerveGraph::component_of_node() const {
  UnionFind uf(node_count);
  for (const Edge& e : edges) uf.unite(e.a, e.b);
  std::vector<int> label(node_count, -1);
  int next = 0;
  for (int i = 0; i < node_count; ++i) {
    int root = uf.find(i);
    if (label[root] == -1) label[root] = next++;
    label[i] = label[root];
  }
  return label;
}

bool NerveGraph::compatible() const {
  std::vector<int> comp = component_of_node();
  int comp_count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<ProcSet> inter(comp_count, ProcSet(~0u));
  for (int f = 0; f < node_count; ++f)
    if (proper[f]) inter[comp[f]] &= root_colors[node_root[f]];
  for (const ProcSet& s : inter)
    if (s.empty()) return false;
  return true;
}

NerveGraph build_nerve(const ProtocolComplex& p1) {
  if (p1.rounds() != 1) throw std::invalid_argument("build_nerve: needs the 1-round complex");
  if (!p1.adversary().all_rooted())
    throw NonRootedError("build_nerve: adversary must contain rooted graphs only");

  NerveGraph ng;
  ng.node_count = p1.facet_count();
  ProcSet full = ProcSet::full(p1.n());

  std::map<std::vector<ViewRef>, int> face_ids;
  for (int f = 0; f < ng.node_count; ++f) {
    RootFace root = root_face(p1, f);
    auto [it, inserted] = face_ids.emplace(root.verts, static_cast<int>(ng.root_faces.size()));
    if (inserted) {
      ng.root_faces.push_back(root.verts);
      ng.root_colors.push_back(root.colors);
    }
    ng.node_root.push_back(it->second);
    ng.proper.push_back(root.colors != full);
  }

  for (int a = 0; a < ng.node_count; ++a)
    for (int b = a + 1; b < ng.node_count; ++b) {
      ProcSet shared = p1.shared_colors(a, b);
      if (shared.empty()) continue;
      ++ng.intersecting_pairs;
      NerveGraph::Edge e;
      e.a = a;
      e.b = b;
      for (int rf = 0; rf < static_cast<int>(ng.root_faces.size()); ++rf)
        if (ng.root_colors[rf].subset_of(shared)) e.label.push_back(rf);
      if (!e.label.empty()) ng.edges.push_back(std::move(e));
    }
  return ng;
}

NerveGraph build_nerve(const Adversary& adv) {
  return build_nerve(ProtocolComplex::build(adv, 1));
}

NerveGraph iterate(const NerveGraph& ng) {
  NerveGraph next = ng;
  next.iteration = ng.iteration + 1;
  next.edges.clear();
  std::vector<int> comp = ng.component_of_node();
  // Root faces represented per component.
  std::map<std::pair<int, int>, bool> present;
  for (int f = 0; f < ng.node_count; ++f) present[{comp[f], ng.node_root[f]}] = true;
  for (const NerveGraph::Edge& e : ng.edges) {
    NerveGraph::Edge kept;
    kept.a = e.a;
    kept.b = e.b;
    for (int rf : e.label)
      if (present.count({comp[e.a], rf})) kept.label.push_back(rf);
    if (!kept.label.empty()) next.edges.push_back(std::move(kept));
  }
  return next;
}

NerveVerdict nerve_decide(const Adversary& adv) {
  NerveVerdict verdict;
  verdict.trace.push_back(build_nerve(adv));
  std::size_t label_total = 0;
  for (const NerveGraph::Edge& e : verdict.trace.front().edges) label_total += e.label.size();
  std::size_t guard = label_total + 2;

  for (std::size_t step = 0; step <= guard; ++step) {
    const NerveGraph& current = verdict.trace.back();
    if (current.compatible()) {
      verdict.solvable = true;
      verdict.iterations = current.iteration;
      return verdict;
    }
    NerveGraph next = iterate(current);
    if (next.same_labeling(current)) {
      verdict.solvable = false;
      verdict.iterations = next.iteration;
      return verdict;
    }
    verdict.trace.push_back(std::move(next));
  }
  throw std::logic_error("nerve_decide: did not reach a fixpoint within the label bound");
}

}  // namespace matopo
