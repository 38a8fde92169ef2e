#pragma once

#include <span>
#include <vector>

#include "matopo/complex.hpp"

namespace matopo {

// The root component of a facet's round-r graph, as a face of that facet.
struct RootFace {
  int facet = -1;
  ProcSet colors;
  std::vector<ViewRef> verts;  // sorted by owner
};

struct BorderComponentInfo {
  int facet = -1;
  bool proper = false;
  std::vector<ViewRef> b_face;  // B(F); all of F when improper
  ProcSet b_colors;
  ProcSet carrier_colors;  // full set when improper or when B(F) = F
};

// True iff the face's members collectively never heard from everyone, i.e. its
// carrier in the initial simplex is a proper face.
bool face_in_border(std::span<const ViewRef> face, int n);

RootFace root_face(const ProtocolComplex& pc, int facet);

// Heard-of closure of the root colors; see invariants for the conventions.
BorderComponentInfo border_component(const ProtocolComplex& pc, int facet);

// Proper border facets only, in facet order. Facets whose round graph is not
// rooted (possible only in complexes built with the override) are skipped.
std::vector<BorderComponentInfo> bdc(const ProtocolComplex& pc);
std::vector<RootFace> bdr(const ProtocolComplex& pc);

// Test oracle: the border subcomplex built by the carrier-operator route,
// without consulting heard-of caches. Returns maximal faces, each sorted by
// owner. Capped at n <= 3, r <= 2.
std::vector<std::vector<ViewRef>> border_subcomplex_direct(const ProtocolComplex& pc);

// Whether the face is contained in one of the maximal faces.
bool face_in_direct_border(std::span<const ViewRef> face,
                           const std::vector<std::vector<ViewRef>>& border);

}  // namespace matopo
