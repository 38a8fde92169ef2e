#include "matopo/rrg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
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

struct RootIndex {
  // Distinct root faces of the one-round complex, proper ones flagged.
  std::vector<std::vector<ViewRef>> faces;
  std::vector<ProcSet> colors;
  std::vector<bool> proper;
  std::vector<int> face_of_facet;          // facet -> root-face id
  std::vector<std::vector<int>> hosts;     // root-face id -> host facets
};

RootIndex index_roots(const ProtocolComplex& p1) {
  RootIndex idx;
  ProcSet full = ProcSet::full(p1.n());
  std::map<std::vector<ViewRef>, int> ids;
  for (int f = 0; f < p1.facet_count(); ++f) {
    RootFace root = root_face(p1, f);
    auto [it, inserted] = ids.emplace(root.verts, static_cast<int>(idx.faces.size()));
    if (inserted) {
      idx.faces.push_back(root.verts);
      idx.colors.push_back(root.colors);
      idx.proper.push_back(root.colors != full);
      idx.hosts.emplace_back();
    }
    idx.face_of_facet.push_back(it->second);
    idx.hosts[it->second].push_back(f);
  }
  return idx;
}

// Heard-of sets after evolving the one-round facet `first` through the graph
// of facet `second`; index p gives the round-2 heard-of set of process p.
std::vector<ProcSet> second_round_heard(const ProtocolComplex& p1, int first, int second) {
  const CommGraph& g = p1.adversary().graph(p1.facet(second).last_graph());
  std::vector<ProcSet> heard(p1.n());
  for (int p = 0; p < p1.n(); ++p)
    for (int q : g.in_set(p).indices()) heard[p] |= p1.facet(first).verts[q]->heard_of();
  return heard;
}

ProcSet closure(ProcSet seed, const std::vector<ProcSet>& heard) {
  ProcSet s = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    ProcSet next = s;
    for (int p : s.indices()) next |= heard[p];
    if (next != s) {
      s = next;
      grew = true;
    }
  }
  return s;
}

}  // namespace

std::vector<int> Rrg::component_of_node() const {
  UnionFind uf(static_cast<int>(nodes.size()));
  for (auto [a, b] : edges) uf.unite(a, b);
  std::vector<int> label(nodes.size(), -1);
  int next = 0;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    int root = uf.find(i);
    if (label[root] == -1) label[root] = next++;
    label[i] = label[root];
  }
  return label;
}

bool Rrg::compatible() const {
  if (nodes.empty()) return true;
  std::vector<int> comp = component_of_node();
  int comp_count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<ProcSet> inter(comp_count, ProcSet(~0u));
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (!nodes[i].fat) continue;
    for (ProcSet carrier : nodes[i].carriers) inter[comp[i]] &= carrier;
  }
  for (const ProcSet& s : inter)
    if (s.empty()) return false;
  return true;
}

Rrg build_rrg0(const ProtocolComplex& p1) {
  if (p1.rounds() != 1) throw std::invalid_argument("build_rrg0: needs the 1-round complex");
  if (!p1.adversary().all_rooted())
    throw NonRootedError("build_rrg0: adversary must contain rooted graphs only");
  RootIndex idx = index_roots(p1);

  Rrg rrg;
  rrg.root_colors = idx.colors;
  std::vector<int> node_of_face(idx.faces.size(), -1);
  for (int rf = 0; rf < static_cast<int>(idx.faces.size()); ++rf) {
    if (!idx.proper[rf]) continue;  // border root components only
    Rrg::Node node;
    for (int host : idx.hosts[rf]) node.members.emplace_back(host, rf);
    node.root_face_id = rf;
    node.fat = true;
    node.carriers = {idx.colors[rf]};  // carrier equals the root colors at round 1
    node_of_face[rf] = static_cast<int>(rrg.nodes.size());
    rrg.nodes.push_back(std::move(node));
  }
  // Edge iff the host facets are joined by a path of adjacent facets.
  std::set<std::pair<int, int>> edges;
  for (int a = 0; a < static_cast<int>(rrg.nodes.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(rrg.nodes.size()); ++b) {
      int fa = rrg.nodes[a].members.front().first;
      int fb = rrg.nodes[b].members.front().first;
      if (p1.component_of_facet(fa) == p1.component_of_facet(fb)) edges.insert({a, b});
    }
  rrg.edges.assign(edges.begin(), edges.end());
  return rrg;
}

Rrg build_rrg0(const Adversary& adv) {
  return build_rrg0(ProtocolComplex::build(adv, 1));
}

Rrg build_rrg1(const Adversary& adv) {
  ProtocolComplex p1 = ProtocolComplex::build(adv, 1);
  RootIndex idx = index_roots(p1);
  Rrg rrg0 = build_rrg0(p1);

  Rrg rrg;
  rrg.iteration = 1;
  rrg.root_colors = idx.colors;

  // Instances (facet, border root face), merged where the root face protects
  // the facet intersection.
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_index;
  for (int f = 0; f < p1.facet_count(); ++f)
    for (const Rrg::Node& base : rrg0.nodes) {
      pair_index[{f, base.root_face_id}] = static_cast<int>(pairs.size());
      pairs.emplace_back(f, base.root_face_id);
    }
  UnionFind uf(static_cast<int>(pairs.size()));
  for (int f1 = 0; f1 < p1.facet_count(); ++f1)
    for (int f2 = f1 + 1; f2 < p1.facet_count(); ++f2) {
      ProcSet shared = p1.shared_colors(f1, f2);
      if (shared.empty()) continue;
      for (const Rrg::Node& base : rrg0.nodes) {
        int rf = base.root_face_id;
        if (idx.colors[rf].subset_of(shared))
          uf.unite(pair_index[{f1, rf}], pair_index[{f2, rf}]);
      }
    }

  std::map<int, int> node_of_class;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    int cls = uf.find(i);
    auto [it, inserted] = node_of_class.emplace(cls, static_cast<int>(rrg.nodes.size()));
    if (inserted) {
      Rrg::Node node;
      node.root_face_id = pairs[i].second;
      rrg.nodes.push_back(std::move(node));
    }
    rrg.nodes[it->second].members.push_back(pairs[i]);
  }
  for (Rrg::Node& node : rrg.nodes) std::sort(node.members.begin(), node.members.end());

  // Fatness and carrier sets. A node stands for the round-2 facets obtained by
  // following its instance facet with any facet carrying its root face; it is
  // fat when it is unshared and those facets are still proper border facets.
  for (Rrg::Node& node : rrg.nodes) {
    if (node.members.size() != 1) continue;  // shared nodes are non-fat
    auto [f, rf] = node.members.front();
    bool proper_round2 = false;
    std::set<ProcSet> carriers;
    for (int mf : idx.hosts[rf]) {
      std::vector<ProcSet> heard = second_round_heard(p1, f, mf);
      ProcSet root_heard;
      for (int p : idx.colors[rf].indices()) root_heard |= heard[p];
      if (root_heard == ProcSet::full(p1.n())) continue;
      proper_round2 = true;
      ProcSet carrier = closure(idx.colors[rf], heard);
      if (carrier != ProcSet::full(p1.n())) carriers.insert(carrier);
    }
    node.fat = proper_round2;
    node.carriers.assign(carriers.begin(), carriers.end());
  }

  // Instance edges copy the RRG_0 edges.
  std::set<std::pair<int, int>> edges;
  for (int f = 0; f < p1.facet_count(); ++f)
    for (auto [a, b] : rrg0.edges) {
      int na = uf.find(pair_index[{f, rrg0.nodes[a].root_face_id}]);
      int nb = uf.find(pair_index[{f, rrg0.nodes[b].root_face_id}]);
      int ia = node_of_class.at(na);
      int ib = node_of_class.at(nb);
      if (ia != ib) edges.insert({std::min(ia, ib), std::max(ia, ib)});
    }
  rrg.edges.assign(edges.begin(), edges.end());
  return rrg;
}

Rrg rrg_iterate(const Rrg& rrg) {
  std::vector<int> comp = rrg.component_of_node();
  // Which components hold a fat node with a given root face.
  std::set<std::pair<int, int>> fat_here;
  for (int i = 0; i < static_cast<int>(rrg.nodes.size()); ++i)
    if (rrg.nodes[i].fat) fat_here.insert({comp[i], rrg.nodes[i].root_face_id});

  std::vector<bool> orphaned(rrg.nodes.size(), false);
  for (int i = 0; i < static_cast<int>(rrg.nodes.size()); ++i) {
    if (rrg.nodes[i].fat) continue;
    if (!fat_here.count({comp[i], rrg.nodes[i].root_face_id})) orphaned[i] = true;
  }

  Rrg next = rrg;
  next.iteration = rrg.iteration + 1;
  next.edges.clear();
  for (auto [a, b] : rrg.edges)
    if (!orphaned[a] && !orphaned[b]) next.edges.emplace_back(a, b);
  return next;
}

RrgVerdict rrg_decide(const Adversary& adv, int max_iterations) {
  RrgVerdict verdict;
  verdict.trace.push_back(build_rrg0(adv));
  verdict.trace.push_back(build_rrg1(adv));
  for (int step = 0; step < max_iterations; ++step) {
    const Rrg& current = verdict.trace.back();
    if (current.compatible()) {
      verdict.solvable = true;
      verdict.iterations = current.iteration;
      verdict.k_round_bound = current.iteration * (adv.n() - 1);
      return verdict;
    }
    Rrg next = rrg_iterate(current);
    if (next.edges == current.edges) {
      verdict.solvable = false;
      verdict.iterations = next.iteration;
      return verdict;
    }
    verdict.trace.push_back(std::move(next));
  }
  throw std::runtime_error("rrg_decide: max iterations exceeded");
}

}  // namespace matopo
