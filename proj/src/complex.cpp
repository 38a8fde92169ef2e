#include "matopo/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "matopo/errors.hpp"

namespace matopo {

std::size_t default_facet_budget() {
  if (const char* env = std::getenv("MATOPO_FACET_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace {

struct FacetKeyHash {
  std::size_t operator()(const std::vector<ViewRef>& verts) const {
    std::size_t h = verts.size();
    for (ViewRef v : verts)
      h ^= reinterpret_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

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

ProtocolComplex ProtocolComplex::build(Adversary adv, int rounds, const BuildOptions& opts) {
  if (rounds < 0) throw std::invalid_argument("build: rounds must be >= 0");
  if (!opts.allow_non_rooted) {
    if (auto bad = adv.first_non_rooted())
      throw NonRootedError("adversary graph " + std::to_string(*bad) +
                           " is not rooted; consensus is trivially impossible");
  }
  double expected = 1;
  for (int r = 0; r < rounds; ++r) {
    expected *= adv.size();
    if (expected > static_cast<double>(opts.facet_budget))
      throw BudgetError("build: |D|^r exceeds facet budget");
  }

  ProtocolComplex pc;
  pc.adv_ = std::move(adv);
  pc.rounds_ = rounds;

  std::vector<GlobalView> level;
  level.push_back(initial_global_view(pc.adv_.n()));
  pc.facets_.push_back(Facet{{}, level[0].views, -1});
  for (int r = 1; r <= rounds; ++r) {
    std::vector<GlobalView> next;
    std::vector<Facet> next_facets;
    next.reserve(level.size() * pc.adv_.size());
    for (std::size_t c = 0; c < level.size(); ++c) {
      for (int gi = 0; gi < pc.adv_.size(); ++gi) {
        GlobalView gv = evolve(level[c], pc.adv_.graph(gi));
        Facet f;
        f.sequence = pc.facets_[c].sequence;
        f.sequence.push_back(gi);
        f.carrier = static_cast<int>(c);
        f.verts = gv.views;
        next.push_back(std::move(gv));
        next_facets.push_back(std::move(f));
      }
    }
    level = std::move(next);
    pc.facets_ = std::move(next_facets);
  }

  // The sequence-to-view map must be injective; duplicate facets would break
  // the facet indexing used everywhere downstream.
  {
    std::unordered_map<std::vector<ViewRef>, int, FacetKeyHash> seen;
    for (int i = 0; i < pc.facet_count(); ++i) {
      auto [it, inserted] = seen.emplace(pc.facets_[i].verts, i);
      if (!inserted) throw std::logic_error("build: sequence-view bijection violated");
    }
  }

  for (int i = 0; i < pc.facet_count(); ++i) {
    const Facet& f = pc.facets_[i];
    for (int p = 0; p < pc.n(); ++p) {
      ViewRef v = f.verts[p];
      auto [it, inserted] = pc.vertex_ids_.emplace(v, pc.vertex_count());
      if (inserted) {
        pc.vertex_list_.push_back(v);
        pc.vertex_facets_.emplace_back();
      }
      pc.vertex_facets_[it->second].push_back(i);
    }
  }
  if (pc.vertex_count() > pc.n() * pc.facet_count())
    throw std::logic_error("build: vertex count bound violated");

  UnionFind uf(pc.facet_count());
  for (const auto& incident : pc.vertex_facets_)
    for (std::size_t i = 1; i < incident.size(); ++i) uf.unite(incident[0], incident[i]);
  pc.component_of_facet_.assign(pc.facet_count(), -1);
  for (int i = 0; i < pc.facet_count(); ++i) {
    int root = uf.find(i);
    if (pc.component_of_facet_[root] == -1) pc.component_of_facet_[root] = pc.component_count_++;
    pc.component_of_facet_[i] = pc.component_of_facet_[root];
  }
  return pc;
}

int ProtocolComplex::facet_of_sequence(std::span<const int> seq) const {
  if (static_cast<int>(seq.size()) != rounds_)
    throw std::invalid_argument("facet_of_sequence: wrong sequence length");
  int index = 0;
  for (int gi : seq) {
    if (gi < 0 || gi >= adv_.size())
      throw std::invalid_argument("facet_of_sequence: graph index out of range");
    index = index * adv_.size() + gi;
  }
  return index;
}

int ProtocolComplex::vertex_id(ViewRef v) const {
  auto it = vertex_ids_.find(v);
  if (it == vertex_ids_.end()) throw std::invalid_argument("vertex_id: view not in complex");
  return it->second;
}

const std::vector<int>& ProtocolComplex::facets_of_vertex(int vertex_id) const {
  return vertex_facets_[vertex_id];
}

std::vector<ViewRef> ProtocolComplex::intersection(int f1, int f2) const {
  std::vector<ViewRef> out;
  for (int p = 0; p < n(); ++p)
    if (facets_[f1].verts[p] == facets_[f2].verts[p]) out.push_back(facets_[f1].verts[p]);
  return out;
}

ProcSet ProtocolComplex::shared_colors(int f1, int f2) const {
  ProcSet s;
  for (int p = 0; p < n(); ++p)
    if (facets_[f1].verts[p] == facets_[f2].verts[p]) s.add(p);
  return s;
}

std::vector<std::vector<int>> ProtocolComplex::components() const {
  std::vector<std::vector<int>> out(component_count_);
  for (int i = 0; i < facet_count(); ++i) out[component_of_facet_[i]].push_back(i);
  return out;
}

std::set<std::pair<int, int>> ProtocolComplex::edge_pairs() const {
  std::set<std::pair<int, int>> edges;
  for (const Facet& f : facets_)
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b) {
        int va = vertex_ids_.at(f.verts[a]);
        int vb = vertex_ids_.at(f.verts[b]);
        edges.insert({std::min(va, vb), std::max(va, vb)});
      }
  return edges;
}

std::size_t ProtocolComplex::count_edges() const { return edge_pairs().size(); }

LabeledComplex to_labeled_round1(const ProtocolComplex& pc) {
  if (pc.rounds() != 1) throw std::invalid_argument("to_labeled_round1: needs a 1-round complex");
  LabeledComplex out;
  out.n = pc.n();
  for (int i = 0; i < pc.vertex_count(); ++i) {
    ViewRef v = pc.vertex(i);
    out.vertices.insert({v->owner(), v->top_level_in_set().bits()});
  }
  for (const Facet& f : pc.facets()) {
    std::vector<LabeledComplex::Vertex> labels;
    for (ViewRef v : f.verts) labels.push_back({v->owner(), v->top_level_in_set().bits()});
    std::sort(labels.begin(), labels.end());
    out.facets.insert(std::move(labels));
  }
  return out;
}

LabeledComplex chromatic_subdivision(int n) {
  if (n < 1 || n > 4) throw BudgetError("chromatic_subdivision: supported for n <= 4");
  LabeledComplex out;
  out.n = n;
  std::uint32_t all = ProcSet::full(n).bits();
  for (int p = 0; p < n; ++p)
    for (std::uint32_t s = 1; s <= all; ++s)
      if ((s >> p) & 1u) out.vertices.insert({p, s});

  // Enumerate tuples (S_0,...,S_{n-1}) with p in S_p.
  std::vector<std::uint32_t> choice(n);
  std::vector<std::vector<std::uint32_t>> options(n);
  for (int p = 0; p < n; ++p)
    for (std::uint32_t s = 1; s <= all; ++s)
      if ((s >> p) & 1u) options[p].push_back(s);

  auto admits_chain = [&](const std::vector<std::uint32_t>& sets) {
    std::vector<std::uint32_t> sorted = sets;
    std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
      int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
      return ca != cb ? ca < cb : a < b;
    });
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if ((sorted[i - 1] & ~sorted[i]) != 0) return false;
    return true;
  };
  auto containment_condition = [&](const std::vector<std::uint32_t>& sets) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((sets[j] >> i) & 1u)
          if ((sets[i] & ~sets[j]) != 0) return false;
    return true;
  };

  std::vector<std::size_t> idx(n, 0);
  while (true) {
    for (int p = 0; p < n; ++p) choice[p] = options[p][idx[p]];
    if (admits_chain(choice) && containment_condition(choice)) {
      std::vector<LabeledComplex::Vertex> labels;
      for (int p = 0; p < n; ++p) labels.push_back({p, choice[p]});
      out.facets.insert(std::move(labels));
    }
    int p = n - 1;
    while (p >= 0 && ++idx[p] == options[p].size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

LabeledComplex pseudosphere_by_definition(int n) {
  if (n < 1 || n > 4) throw BudgetError("pseudosphere_by_definition: supported for n <= 4");
  LabeledComplex out;
  out.n = n;
  std::uint32_t all = ProcSet::full(n).bits();
  std::vector<std::vector<std::uint32_t>> options(n);
  for (int p = 0; p < n; ++p)
    for (std::uint32_t s = 1; s <= all; ++s)
      if ((s >> p) & 1u) {
        out.vertices.insert({p, s});
        options[p].push_back(s);
      }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<LabeledComplex::Vertex> labels;
    for (int p = 0; p < n; ++p) labels.push_back({p, options[p][idx[p]]});
    out.facets.insert(std::move(labels));
    int p = n - 1;
    while (p >= 0 && ++idx[p] == options[p].size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

ProtocolComplex pseudosphere(int n) {
  BuildOptions opts;
  opts.allow_non_rooted = true;
  return ProtocolComplex::build(enumerate_all_graphs(n), 1, opts);
}

bool iis_equivalence_check(int n) {
  BuildOptions opts;
  ProtocolComplex pc = ProtocolComplex::build(enumerate_iis_adversary(n), 1, opts);
  return to_labeled_round1(pc) == chromatic_subdivision(n);
}

std::uint64_t ordered_set_partition_count(int n) {
  // a(n) = sum_k C(n,k) a(n-k), a(0) = 1.
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t binom = 1;
    for (int k = 1; k <= m; ++k) {
      binom = binom * static_cast<std::uint64_t>(m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

}  // namespace matopo
