#include "matopo/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace matopo {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> name_list(ProcSet s, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (int i : s.indices()) out.push_back(names[i]);
  return out;
}

}  // namespace

std::string export_dot(const ProtocolComplex& pc, const DotOptions& opts) {
  const auto& names = pc.adversary().process_names();
  std::ostringstream out;
  out << "graph protocol_complex {\n";
  out << "  // adversary of " << pc.adversary().size() << " graphs, " << pc.rounds()
      << " round(s), " << pc.facet_count() << " facet(s)\n";
  out << "  node [shape=ellipse];\n";

  // Vertices that belong to some border component B(F) get the fat-square
  // rendering from the figures.
  std::set<int> marked;
  if (opts.annotate_border && pc.rounds() >= 1) {
    for (int f = 0; f < pc.facet_count(); ++f) {
      if (!is_rooted(pc.adversary().graph(pc.facet(f).last_graph()))) continue;
      BorderComponentInfo info = border_component(pc, f);
      if (!info.proper) continue;
      for (ViewRef v : info.b_face) marked.insert(pc.vertex_id(v));
    }
  }

  for (int vid = 0; vid < pc.vertex_count(); ++vid) {
    ViewRef v = pc.vertex(vid);
    out << "  v" << vid << " [label=\"" << names[v->owner()] << ":"
        << to_string(v->heard_of(), names) << "\"";
    if (marked.count(vid)) out << " shape=box penwidth=2";
    out << "];\n";
  }

  for (auto [a, b] : pc.edge_pairs()) {
    ViewRef va = pc.vertex(a);
    ViewRef vb = pc.vertex(b);
    out << "  v" << a << " -- v" << b;
    if (pc.rounds() >= 1) {
      // Round-r information flow; the top level of each view records it.
      bool b_hears_a = vb->top_level_in_set().contains(va->owner());
      bool a_hears_b = va->top_level_in_set().contains(vb->owner());
      if (a_hears_b && b_hears_a)
        out << " [dir=both]";
      else if (b_hears_a)
        out << " [dir=forward]";
      else if (a_hears_b)
        out << " [dir=back]";
    }
    out << ";\n";
  }

  if (opts.annotate_border && pc.rounds() >= 1) {
    for (int f = 0; f < pc.facet_count(); ++f) {
      if (!is_rooted(pc.adversary().graph(pc.facet(f).last_graph()))) continue;
      BorderComponentInfo info = border_component(pc, f);
      if (!info.proper) continue;
      out << "  // proper border facet " << f << ": B colors "
          << to_string(info.b_colors, names) << ", carrier "
          << to_string(info.carrier_colors, names) << "\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string complex_to_json(const ProtocolComplex& pc) {
  const auto& names = pc.adversary().process_names();
  ordered_json j;
  j["schema"] = kJsonSchema;
  j["kind"] = "complex";
  j["n"] = pc.n();
  j["process_names"] = names;
  j["rounds"] = pc.rounds();

  ordered_json graphs = ordered_json::array();
  for (const CommGraph& g : pc.adversary().graphs()) {
    ordered_json edges = ordered_json::array();
    for (auto [from, to] : g.edges_without_self_loops())
      edges.push_back(names[from] + "->" + names[to]);
    graphs.push_back(edges);
  }
  j["graphs"] = graphs;

  ordered_json vertices = ordered_json::array();
  for (int vid = 0; vid < pc.vertex_count(); ++vid) {
    ViewRef v = pc.vertex(vid);
    ordered_json jv;
    jv["id"] = vid;
    jv["process"] = names[v->owner()];
    jv["heard_of"] = name_list(v->heard_of(), names);
    jv["view"] = view_to_string(v, names);
    jv["in_border"] = v->heard_of() != ProcSet::full(pc.n());
    vertices.push_back(jv);
  }
  j["vertices"] = vertices;

  ordered_json facets = ordered_json::array();
  for (int f = 0; f < pc.facet_count(); ++f) {
    const Facet& facet = pc.facet(f);
    ordered_json jf;
    jf["id"] = f;
    jf["sequence"] = facet.sequence;
    ordered_json vids = ordered_json::array();
    for (ViewRef v : facet.verts) vids.push_back(pc.vertex_id(v));
    jf["vertices"] = vids;
    jf["component"] = pc.component_of_facet(f);
    if (pc.rounds() >= 1) {
      jf["carrier_facet"] = facet.carrier;
      const CommGraph& g = pc.adversary().graph(facet.last_graph());
      if (is_rooted(g)) {
        BorderComponentInfo info = border_component(pc, f);
        jf["root_colors"] = name_list(root_face(pc, f).colors, names);
        jf["proper_border"] = info.proper;
        ordered_json bverts = ordered_json::array();
        for (ViewRef v : info.b_face) bverts.push_back(pc.vertex_id(v));
        jf["border_component_vertices"] = bverts;
        jf["carrier_colors"] = name_list(info.carrier_colors, names);
      } else {
        jf["root_colors"] = nullptr;
        jf["proper_border"] = nullptr;
      }
    }
    facets.push_back(jf);
  }
  j["facets"] = facets;

  SolvabilityReport report = analyze(pc);
  ordered_json comps = ordered_json::array();
  for (const ComponentReport& c : report.components) {
    ordered_json jc;
    jc["id"] = c.label;
    jc["facets"] = c.facets;
    jc["vertex_kernel"] = name_list(c.kernel_vertex, names);
    jc["border_kernel"] = name_list(c.kernel_border, names);
    comps.push_back(jc);
  }
  j["components"] = comps;
  j["edge_count"] = pc.count_edges();
  return j.dump(2) + "\n";
}

std::string simulation_to_json(const SimulationResult& res, const Adversary& adv,
                               const SimulateOptions& opts) {
  const auto& names = adv.process_names();
  ordered_json j;
  j["schema"] = kJsonSchema;
  j["kind"] = "simulation";
  j["mode"] = opts.exhaustive ? "exhaustive" : "random";
  if (!opts.exhaustive) {
    j["samples"] = opts.samples;
    j["seed"] = opts.seed;
  }
  j["sequences"] = res.sequences;
  j["passed"] = res.passed;
  if (!res.failure.empty()) j["failure"] = res.failure;
  ordered_json ts = ordered_json::array();
  for (const Transcript& t : res.transcripts) {
    ordered_json jt;
    jt["sequence"] = t.sequence;
    ordered_json decisions;
    for (int p = 0; p < adv.n(); ++p) decisions[names[p]] = names[t.decisions[p]];
    jt["decisions"] = decisions;
    ts.push_back(jt);
  }
  j["transcripts"] = ts;
  return j.dump(2) + "\n";
}

std::string nerve_to_dot(const NerveGraph& ng, const Adversary& adv) {
  const auto& names = adv.process_names();
  std::ostringstream out;
  out << "graph nerve_" << ng.iteration << " {\n";
  out << "  // " << ng.node_count << " facets, " << ng.edges.size()
      << " labeled edges (of " << ng.intersecting_pairs << " intersecting pairs)\n";
  for (int f = 0; f < ng.node_count; ++f) {
    out << "  f" << f << " [label=\"F" << f << " root=" << to_string(ng.root_colors[ng.node_root[f]], names)
        << "\"" << (ng.proper[f] ? " penwidth=2" : "") << "];\n";
  }
  for (const NerveGraph::Edge& e : ng.edges) {
    out << "  f" << e.a << " -- f" << e.b << " [label=\"";
    for (std::size_t i = 0; i < e.label.size(); ++i) {
      if (i) out << " ";
      out << to_string(ng.root_colors[e.label[i]], names);
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string rrg_to_dot(const Rrg& rrg, const Adversary& adv) {
  const auto& names = adv.process_names();
  std::ostringstream out;
  out << "graph rrg_" << rrg.iteration << " {\n";
  out << "  node [shape=square];\n";
  for (std::size_t i = 0; i < rrg.nodes.size(); ++i) {
    const Rrg::Node& node = rrg.nodes[i];
    out << "  n" << i << " [label=\"" << to_string(rrg.root_colors[node.root_face_id], names);
    if (node.members.size() == 1)
      out << "@F" << node.members.front().first;
    else
      out << " shared";
    out << "\" penwidth=" << (node.fat ? 3 : 1) << "];\n";
  }
  for (auto [a, b] : rrg.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace matopo
