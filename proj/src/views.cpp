#include "matopo/views.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace matopo {

ProcSet View::top_level_in_set() const {
  if (round_ == 0) return ProcSet::single(owner_);
  ProcSet s;
  for (auto& [p, child] : children_) s.add(p);
  return s;
}

namespace {

std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::size_t view_fingerprint(int owner, int round,
                             const std::vector<std::pair<int, ViewRef>>& children) {
  std::size_t h = hash_combine(static_cast<std::size_t>(owner) * 31 + 7,
                               static_cast<std::size_t>(round));
  for (auto& [p, child] : children) {
    h = hash_combine(h, static_cast<std::size_t>(p));
    h = hash_combine(h, reinterpret_cast<std::size_t>(child));
  }
  return h;
}

struct ViewPtrHash {
  std::size_t operator()(const View* v) const {
    return view_fingerprint(v->owner(), v->round(), v->children());
  }
};

struct ViewPtrEq {
  bool operator()(const View* a, const View* b) const {
    // Children are themselves interned, so pointer comparison is structural.
    return a->owner() == b->owner() && a->round() == b->round() && a->children() == b->children();
  }
};

}  // namespace

struct ViewStore::Impl {
  mutable std::mutex mutex;
  std::deque<View> storage;  // stable addresses
  std::unordered_set<const View*, ViewPtrHash, ViewPtrEq> interned;
};

ViewStore::ViewStore() : impl_(new Impl) {}
ViewStore::~ViewStore() { delete impl_; }

ViewStore& ViewStore::instance() {
  static ViewStore store;
  return store;
}

std::size_t ViewStore::size() const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->interned.size();
}

ViewRef ViewStore::leaf(int owner) {
  View probe;
  probe.owner_ = owner;
  probe.round_ = 0;
  probe.heard_of_ = ProcSet::single(owner);
  std::lock_guard<std::mutex> lock(impl_->mutex);
  auto it = impl_->interned.find(&probe);
  if (it != impl_->interned.end()) return *it;
  impl_->storage.push_back(std::move(probe));
  const View* stored = &impl_->storage.back();
  impl_->interned.insert(stored);
  return stored;
}

ViewRef ViewStore::node(int owner, std::vector<std::pair<int, ViewRef>> children) {
  if (children.empty()) throw std::invalid_argument("View: round >= 1 needs in-neighbors");
  int child_round = children.front().second->round();
  ProcSet heard;
  bool self_seen = false;
  int prev = -1;
  for (auto& [p, child] : children) {
    if (p <= prev) throw std::invalid_argument("View: children must be sorted by process");
    prev = p;
    if (child->owner() != p) throw std::invalid_argument("View: child owner mismatch");
    if (child->round() != child_round)
      throw std::invalid_argument("View: children from different rounds");
    if (p == owner) self_seen = true;
    heard |= child->heard_of();
  }
  if (!self_seen) throw std::invalid_argument("View: owner missing from in-neighbors");

  View probe;
  probe.owner_ = owner;
  probe.round_ = child_round + 1;
  probe.heard_of_ = heard;
  probe.children_ = std::move(children);
  std::lock_guard<std::mutex> lock(impl_->mutex);
  auto it = impl_->interned.find(&probe);
  if (it != impl_->interned.end()) return *it;
  impl_->storage.push_back(std::move(probe));
  const View* stored = &impl_->storage.back();
  impl_->interned.insert(stored);
  return stored;
}

GlobalView initial_global_view(int n) {
  if (n < 1) throw std::invalid_argument("initial_global_view: n must be >= 1");
  GlobalView gv;
  gv.round = 0;
  gv.views.reserve(n);
  for (int i = 0; i < n; ++i) gv.views.push_back(ViewStore::instance().leaf(i));
  return gv;
}

GlobalView evolve(const GlobalView& gv, const CommGraph& g) {
  if (g.n() != gv.n()) throw std::invalid_argument("evolve: process count mismatch");
  GlobalView next;
  next.round = gv.round + 1;
  next.views.reserve(gv.n());
  for (int i = 0; i < gv.n(); ++i) {
    std::vector<std::pair<int, ViewRef>> children;
    for (int j : g.in_set(i).indices()) children.emplace_back(j, gv.views[j]);
    next.views.push_back(ViewStore::instance().node(i, std::move(children)));
  }
  return next;
}

CommGraph top_level_graph(const GlobalView& gv) {
  if (gv.round < 1) throw std::invalid_argument("top_level_graph: needs round >= 1");
  std::vector<ProcSet> in(gv.n());
  for (int i = 0; i < gv.n(); ++i) in[i] = gv.views[i]->top_level_in_set();
  return CommGraph(gv.n(), std::move(in));
}

std::string view_to_string(ViewRef v, const std::vector<std::string>& names) {
  auto name = [&](int i) {
    return i < static_cast<int>(names.size()) ? names[i] : std::to_string(i);
  };
  if (v->round() == 0) return name(v->owner());
  std::string out = "(" + name(v->owner()) + ",{";
  bool first = true;
  for (auto& [p, child] : v->children()) {
    if (!first) out += ",";
    first = false;
    out += view_to_string(child, names);
  }
  out += "})";
  return out;
}

}  // namespace matopo
