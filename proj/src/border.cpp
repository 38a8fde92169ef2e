#include "matopo/border.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "matopo/errors.hpp"

namespace matopo {

bool face_in_border(std::span<const ViewRef> face, int n) {
  if (face.empty()) throw std::invalid_argument("face_in_border: empty face");
  ProcSet heard;
  for (ViewRef v : face) heard |= v->heard_of();
  return heard != ProcSet::full(n);
}

RootFace root_face(const ProtocolComplex& pc, int facet) {
  if (pc.rounds() < 1) throw std::invalid_argument("root_face: needs rounds >= 1");
  const Facet& f = pc.facet(facet);
  const CommGraph& g = pc.adversary().graph(f.last_graph());
  std::vector<ProcSet> roots = root_components(g);
  if (roots.size() != 1) throw NonRootedError("root_face: round graph is not rooted");
  RootFace out;
  out.facet = facet;
  out.colors = roots[0];
  for (int p : out.colors.indices()) out.verts.push_back(f.verts[p]);
  return out;
}

BorderComponentInfo border_component(const ProtocolComplex& pc, int facet) {
  RootFace root = root_face(pc, facet);
  const Facet& f = pc.facet(facet);
  ProcSet full = ProcSet::full(pc.n());

  ProcSet root_heard;
  for (ViewRef v : root.verts) root_heard |= v->heard_of();

  BorderComponentInfo out;
  out.facet = facet;
  out.proper = root_heard != full;
  if (!out.proper) {
    out.b_face = f.verts;
    out.b_colors = full;
    out.carrier_colors = full;
    return out;
  }
  // Least fixpoint of S -> S u heard_of(S), seeded with the root colors.
  ProcSet s = root.colors;
  bool grew = true;
  while (grew) {
    grew = false;
    ProcSet next = s;
    for (int p : s.indices()) next |= f.verts[p]->heard_of();
    if (next != s) {
      s = next;
      grew = true;
    }
  }
  for (int p : s.indices()) out.b_face.push_back(f.verts[p]);
  out.b_colors = s;
  out.carrier_colors = s;
  return out;
}

std::vector<BorderComponentInfo> bdc(const ProtocolComplex& pc) {
  std::vector<BorderComponentInfo> out;
  for (int i = 0; i < pc.facet_count(); ++i) {
    const Facet& f = pc.facet(i);
    if (!is_rooted(pc.adversary().graph(f.last_graph()))) continue;
    BorderComponentInfo info = border_component(pc, i);
    if (info.proper) out.push_back(std::move(info));
  }
  return out;
}

std::vector<RootFace> bdr(const ProtocolComplex& pc) {
  std::vector<RootFace> out;
  for (const BorderComponentInfo& info : bdc(pc)) out.push_back(root_face(pc, info.facet));
  return out;
}

namespace {

using Face = std::vector<ViewRef>;  // sorted by owner

ProcSet face_colors(const Face& face) {
  ProcSet s;
  for (ViewRef v : face) s.add(v->owner());
  return s;
}

bool by_owner_then_identity(ViewRef a, ViewRef b) {
  return a->owner() != b->owner() ? a->owner() < b->owner() : a < b;
}

bool face_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(),
                       by_owner_then_identity);
}

void keep_maximal(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> maximal;
  for (const Face& f : faces) {
    bool dominated = false;
    for (const Face& g : faces)
      if (&f != &g && f != g && face_subset(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  faces = std::move(maximal);
}

// One application of the construction operator to a face: for each graph, the
// members whose in-neighbors stay inside the face evolve; everything else is
// cut away.
std::vector<Face> evolve_face(const Face& face, const Adversary& adv) {
  ProcSet colors = face_colors(face);
  std::map<int, ViewRef> by_owner;
  for (ViewRef v : face) by_owner[v->owner()] = v;
  std::vector<Face> out;
  for (int gi = 0; gi < adv.size(); ++gi) {
    const CommGraph& g = adv.graph(gi);
    Face next;
    for (int p : colors.indices()) {
      if (!g.in_set(p).subset_of(colors)) continue;
      std::vector<std::pair<int, ViewRef>> children;
      for (int q : g.in_set(p).indices()) children.emplace_back(q, by_owner.at(q));
      next.push_back(ViewStore::instance().node(p, std::move(children)));
    }
    if (!next.empty()) out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<std::vector<ViewRef>> border_subcomplex_direct(const ProtocolComplex& pc) {
  if (pc.n() > 3 || pc.rounds() > 2)
    throw BudgetError("border_subcomplex_direct: capped at n <= 3, r <= 2");
  int n = pc.n();
  std::vector<Face> border;
  ProcSet full = ProcSet::full(n);
  for (std::uint32_t bits = 1; bits < full.bits(); ++bits) {
    ProcSet tau(bits);
    std::vector<Face> faces;
    Face seed;
    for (int p : tau.indices()) seed.push_back(ViewStore::instance().leaf(p));
    faces.push_back(std::move(seed));
    for (int r = 1; r <= pc.rounds(); ++r) {
      std::vector<Face> next;
      for (const Face& f : faces)
        for (Face& e : evolve_face(f, pc.adversary())) next.push_back(std::move(e));
      keep_maximal(next);
      faces = std::move(next);
    }
    for (Face& f : faces) border.push_back(std::move(f));
  }
  keep_maximal(border);
  return border;
}

bool face_in_direct_border(std::span<const ViewRef> face,
                           const std::vector<std::vector<ViewRef>>& border) {
  std::vector<ViewRef> sorted(face.begin(), face.end());
  std::sort(sorted.begin(), sorted.end(), by_owner_then_identity);
  for (const auto& big : border)
    if (face_subset(sorted, big)) return true;
  return false;
}

}  // namespace matopo
