#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matopo/digraph.hpp"
#include "matopo/procset.hpp"

namespace matopo {

// A heard-of history under the full-information protocol. Views are interned:
// two views are structurally equal iff they are the same object, so equality
// and hashing of whole histories are pointer operations.
class View {
 public:
  int owner() const { return owner_; }
  int round() const { return round_; }
  // Union of everything the owner ever heard of, cached at construction.
  ProcSet heard_of() const { return heard_of_; }
  // Round r-1 views of the round-r in-neighbors, sorted by process index.
  // Empty for round 0.
  const std::vector<std::pair<int, const View*>>& children() const { return children_; }
  // Process indices of the round-r in-neighbors (the owner's own set for r=0).
  ProcSet top_level_in_set() const;

  View(const View&) = delete;
  View& operator=(const View&) = delete;
  View(View&&) = default;

 private:
  friend class ViewStore;
  View() = default;
  int owner_ = 0;
  int round_ = 0;
  ProcSet heard_of_;
  std::size_t hash_ = 0;
  std::vector<std::pair<int, const View*>> children_;
};

using ViewRef = const View*;

// Process-wide interning store. Insertion is mutex-guarded; interned views are
// immutable and freely shareable.
class ViewStore {
 public:
  static ViewStore& instance();
  ViewRef leaf(int owner);
  // children must be sorted by process index and contain (owner, ...).
  ViewRef node(int owner, std::vector<std::pair<int, ViewRef>> children);
  std::size_t size() const;

 private:
  ViewStore();
  ~ViewStore();
  struct Impl;
  Impl* impl_;
};

struct GlobalView {
  int round = 0;
  std::vector<ViewRef> views;  // views[i] owned by process i
  int n() const { return static_cast<int>(views.size()); }
};

GlobalView initial_global_view(int n);
GlobalView evolve(const GlobalView& gv, const CommGraph& g);
// Reconstructs the round-r graph from the top level of each view. Round >= 1.
CommGraph top_level_graph(const GlobalView& gv);

// Condensed nested-set rendering, e.g. "(r,{r,w})" for a round-1 view.
std::string view_to_string(ViewRef v, const std::vector<std::string>& names);

}  // namespace matopo
