#include "matopo/digraph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "matopo/errors.hpp"

namespace matopo {

std::string to_string(ProcSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    first = false;
    out += i < static_cast<int>(names.size()) ? names[i] : std::to_string(i);
  }
  out += "}";
  return out;
}

std::vector<std::string> default_process_names(int n) {
  static const std::vector<std::vector<std::string>> palette = {
      {},
      {"r"},
      {"r", "w"},
      {"r", "g", "w"},
      {"r", "g", "w", "y"},
      {"r", "g", "w", "p", "y"},
  };
  if (n >= 1 && n < static_cast<int>(palette.size())) return palette[n];
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i + 1));
  return names;
}

CommGraph::CommGraph(int n, std::vector<ProcSet> in_sets) : n_(n), in_(std::move(in_sets)) {
  if (n_ < 1) throw std::invalid_argument("CommGraph: need at least one process");
  if (n_ > 16) throw std::invalid_argument("CommGraph: at most 16 processes supported");
  if (static_cast<int>(in_.size()) != n_)
    throw std::invalid_argument("CommGraph: in-set count mismatch");
  ProcSet all = ProcSet::full(n_);
  for (int i = 0; i < n_; ++i) {
    if (!in_[i].subset_of(all))
      throw std::invalid_argument("CommGraph: in-set references unknown process");
    in_[i].add(i);  // self-loops mandatory
  }
}

CommGraph CommGraph::identity(int n) {
  std::vector<ProcSet> in(n);
  for (int i = 0; i < n; ++i) in[i] = ProcSet::single(i);
  return CommGraph(n, std::move(in));
}

CommGraph CommGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<ProcSet> in(n);
  for (auto [from, to] : edges) {
    if (from < 0 || from >= n || to < 0 || to >= n)
      throw std::invalid_argument("CommGraph: edge endpoint out of range");
    in[to].add(from);
  }
  return CommGraph(n, std::move(in));
}

std::vector<std::pair<int, int>> CommGraph::edges_without_self_loops() const {
  std::vector<std::pair<int, int>> out;
  for (int from = 0; from < n_; ++from)
    for (int to = 0; to < n_; ++to)
      if (from != to && edge(from, to)) out.emplace_back(from, to);
  return out;
}

namespace {

// Tarjan, iterative over explicit stacks is unnecessary at n <= 16.
struct TarjanState {
  const CommGraph& g;
  std::vector<int> index, lowlink, on_stack;
  std::vector<int> stack;
  std::vector<ProcSet> comps;
  int counter = 0;

  explicit TarjanState(const CommGraph& graph)
      : g(graph), index(graph.n(), -1), lowlink(graph.n(), 0), on_stack(graph.n(), 0) {}

  void visit(int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w = 0; w < g.n(); ++w) {
      if (w == v || !g.edge(v, w)) continue;
      if (index[w] == -1) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      ProcSet comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.add(w);
      } while (w != v);
      comps.push_back(comp);
    }
  }
};

}  // namespace

SccDecomposition sccs(const CommGraph& g) {
  TarjanState t(g);
  for (int v = 0; v < g.n(); ++v)
    if (t.index[v] == -1) t.visit(v);
  std::sort(t.comps.begin(), t.comps.end(),
            [](ProcSet a, ProcSet b) { return a.min_index() < b.min_index(); });

  SccDecomposition out;
  out.components = t.comps;
  out.component_of.assign(g.n(), -1);
  for (int c = 0; c < static_cast<int>(out.components.size()); ++c)
    for (int p : out.components[c].indices()) out.component_of[p] = c;
  std::set<std::pair<int, int>> edges;
  for (int from = 0; from < g.n(); ++from)
    for (int to = 0; to < g.n(); ++to) {
      if (from == to || !g.edge(from, to)) continue;
      int a = out.component_of[from], b = out.component_of[to];
      if (a != b) edges.insert({a, b});
    }
  out.condensation.assign(edges.begin(), edges.end());
  return out;
}

std::vector<ProcSet> root_components(const CommGraph& g) {
  SccDecomposition d = sccs(g);
  std::vector<bool> has_in(d.components.size(), false);
  for (auto [from, to] : d.condensation) has_in[to] = true;
  std::vector<ProcSet> roots;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c)
    if (!has_in[c]) roots.push_back(d.components[c]);
  return roots;
}

bool is_rooted(const CommGraph& g) { return root_components(g).size() == 1; }

bool is_transitively_closed(const CommGraph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = 0; b < g.n(); ++b) {
      if (!g.edge(a, b)) continue;
      for (int c = 0; c < g.n(); ++c)
        if (g.edge(b, c) && !g.edge(a, c)) return false;
    }
  return true;
}

bool is_unilaterally_connected(const CommGraph& g) {
  // Reachability closure over out-neighbor masks.
  std::vector<ProcSet> reach(g.n());
  for (int v = 0; v < g.n(); ++v) {
    reach[v] = ProcSet::single(v);
    for (int w = 0; w < g.n(); ++w)
      if (g.edge(v, w)) reach[v].add(w);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n(); ++v)
      for (int w : reach[v].indices()) {
        ProcSet merged = reach[v] | reach[w];
        if (merged != reach[v]) {
          reach[v] = merged;
          changed = true;
        }
      }
  }
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (!reach[a].contains(b) && !reach[b].contains(a)) return false;
  return true;
}

Adversary::Adversary(std::vector<CommGraph> graphs, std::vector<std::string> names)
    : graphs_(std::move(graphs)), names_(std::move(names)) {
  if (graphs_.empty()) throw std::invalid_argument("Adversary: graph set must be nonempty");
  n_ = graphs_[0].n();
  for (const CommGraph& g : graphs_)
    if (g.n() != n_) throw std::invalid_argument("Adversary: graphs on different process counts");
  std::sort(graphs_.begin(), graphs_.end());
  for (std::size_t i = 1; i < graphs_.size(); ++i)
    if (graphs_[i] == graphs_[i - 1])
      throw std::invalid_argument("Adversary: duplicate graph");
  if (names_.empty()) names_ = default_process_names(n_);
  if (static_cast<int>(names_.size()) != n_)
    throw std::invalid_argument("Adversary: process name count mismatch");
}

bool Adversary::all_rooted() const { return !first_non_rooted().has_value(); }

std::optional<int> Adversary::first_non_rooted() const {
  for (int i = 0; i < size(); ++i)
    if (!is_rooted(graphs_[i])) return i;
  return std::nullopt;
}

namespace {

CommGraph graph_from_offdiag_mask(int n, std::uint64_t mask) {
  std::vector<ProcSet> in(n);
  int bit = 0;
  for (int from = 0; from < n; ++from)
    for (int to = 0; to < n; ++to) {
      if (from == to) continue;
      if ((mask >> bit) & 1u) in[to].add(from);
      ++bit;
    }
  return CommGraph(n, std::move(in));
}

std::vector<CommGraph> all_reflexive_graphs(int n) {
  std::vector<CommGraph> out;
  std::uint64_t total = 1ull << (n * (n - 1));
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    out.push_back(graph_from_offdiag_mask(n, mask));
  return out;
}

}  // namespace

Adversary enumerate_all_graphs(int n) {
  if (n < 1 || n > 4) throw BudgetError("enumerate_all_graphs: supported for n <= 4");
  return Adversary(all_reflexive_graphs(n));
}

Adversary enumerate_iis_adversary(int n, int cap) {
  if (n < 1 || n > cap)
    throw BudgetError("enumerate_iis_adversary: n exceeds cap " + std::to_string(cap));
  if (n > 5) throw BudgetError("enumerate_iis_adversary: supported for n <= 5");
  std::vector<CommGraph> keep;
  for (CommGraph& g : all_reflexive_graphs(n))
    if (is_unilaterally_connected(g) && is_transitively_closed(g)) keep.push_back(std::move(g));
  return Adversary(std::move(keep));
}

int rooted_graph_count(int n) {
  if (n < 1 || n > 4) throw BudgetError("rooted_graph_count: supported for n <= 4");
  static std::vector<int> cache(5, -1);
  if (cache[n] < 0) {
    int count = 0;
    for (const CommGraph& g : all_reflexive_graphs(n))
      if (is_rooted(g)) ++count;
    cache[n] = count;
  }
  return cache[n];
}

Adversary random_rooted_adversary(int n, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_rooted_adversary: k must be >= 1");
  if (n <= 4 && k > rooted_graph_count(n))
    throw std::invalid_argument("random_rooted_adversary: fewer rooted graphs exist than requested");
  std::mt19937_64 rng(seed);
  std::set<CommGraph> chosen;
  std::uint64_t attempts = 0;
  while (static_cast<int>(chosen.size()) < k) {
    if (++attempts > 4'000'000)
      throw std::runtime_error("random_rooted_adversary: sampling did not converge");
    std::uint64_t mask = 0;
    for (int bit = 0; bit < n * (n - 1); ++bit) mask |= (rng() & 1ull) << bit;
    CommGraph g = graph_from_offdiag_mask(n, mask);
    if (is_rooted(g)) chosen.insert(std::move(g));
  }
  return Adversary(std::vector<CommGraph>(chosen.begin(), chosen.end()));
}

}  // namespace matopo
