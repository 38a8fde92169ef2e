#include "matopo/oracle.hpp"

#include <random>
#include <stdexcept>

#include "matopo/errors.hpp"

namespace matopo {

SolvabilityReport analyze(const ProtocolComplex& pc) {
  const int n = pc.n();
  ProcSet full = ProcSet::full(n);
  SolvabilityReport report;
  report.rounds = pc.rounds();
  report.facet_count = pc.facet_count();
  report.components.resize(pc.component_count());
  for (int c = 0; c < pc.component_count(); ++c) {
    report.components[c].label = c;
    report.components[c].kernel_vertex = full;
    report.components[c].kernel_border = full;
  }
  for (int f = 0; f < pc.facet_count(); ++f)
    report.components[pc.component_of_facet(f)].facets.push_back(f);

  for (int vid = 0; vid < pc.vertex_count(); ++vid) {
    int c = pc.component_of_facet(pc.facets_of_vertex(vid).front());
    report.components[c].kernel_vertex &= pc.vertex(vid)->heard_of();
  }
  if (pc.rounds() == 0) {
    // Border machinery starts at round 1.
    for (ComponentReport& c : report.components) c.kernel_border = c.kernel_vertex;
  } else {
    for (int f = 0; f < pc.facet_count(); ++f) {
      if (!is_rooted(pc.adversary().graph(pc.facet(f).last_graph()))) continue;
      BorderComponentInfo info = border_component(pc, f);
      if (!info.proper) continue;
      ComponentReport& c = report.components[pc.component_of_facet(f)];
      c.kernel_border &= info.carrier_colors;
      if (!info.b_colors.subset_of(info.carrier_colors) ||
          !root_face(pc, f).colors.subset_of(info.b_colors))
        throw std::logic_error("analyze: border component invariants violated");
    }
  }

  report.strict_solvable = true;
  report.border_solvable = true;
  for (const ComponentReport& c : report.components) {
    if (c.kernel_vertex.empty()) report.strict_solvable = false;
    if (c.kernel_border.empty()) report.border_solvable = false;
    if (!c.kernel_vertex.subset_of(c.kernel_border))
      throw std::logic_error("analyze: vertex kernel not within border kernel");
  }
  return report;
}

SolvabilityReport analyze(const Adversary& adv, int rounds, const AnalyzeOptions& opts) {
  BuildOptions build_opts;
  build_opts.allow_non_rooted = opts.allow_non_rooted;
  build_opts.facet_budget = opts.facet_budget;
  return analyze(ProtocolComplex::build(adv, rounds, build_opts));
}

MinRoundsResult min_termination_rounds(const Adversary& adv, int cap,
                                       const AnalyzeOptions& opts) {
  if (cap < 0) throw std::invalid_argument("min_termination_rounds: cap must be >= 0");
  MinRoundsResult out;
  out.cap = cap;
  for (int r = 0; r <= cap; ++r) {
    out.last_report = analyze(adv, r, opts);
    if (out.last_report.strict_solvable) {
      out.rounds = r;
      return out;
    }
  }
  return out;
}

DecisionMap extract_decision_map(const Adversary& adv, int rounds, const AnalyzeOptions& opts) {
  SolvabilityReport report = analyze(adv, rounds, opts);
  if (!report.strict_solvable)
    throw std::runtime_error("extract_decision_map: not strictly solvable at round " +
                             std::to_string(rounds));
  DecisionMap dm;
  dm.rounds = rounds;
  for (const ComponentReport& c : report.components)
    dm.decider_of_component.push_back(c.kernel_vertex.min_index());
  return dm;
}

SimulationResult simulate(const Adversary& adv, const DecisionMap& dm,
                          const SimulateOptions& opts) {
  BuildOptions build_opts;
  build_opts.facet_budget = opts.facet_budget;
  ProtocolComplex pc = ProtocolComplex::build(adv, dm.rounds, build_opts);
  if (static_cast<int>(dm.decider_of_component.size()) != pc.component_count())
    throw std::invalid_argument("simulate: decision map does not match the complex");

  SimulationResult res;
  res.passed = true;

  auto run_sequence = [&](const std::vector<int>& seq) {
    // Full-information evolution, independent of the stored facet views.
    GlobalView gv = initial_global_view(adv.n());
    for (int gi : seq) gv = evolve(gv, adv.graph(gi));

    Transcript t;
    t.sequence = seq;
    t.decisions.assign(adv.n(), -1);
    for (int p = 0; p < adv.n(); ++p) {
      ViewRef v = gv.views[p];
      // A process decides from its own view: the component of any facet
      // containing the view is well-defined.
      int comp = pc.component_of_facet(pc.facets_of_vertex(pc.vertex_id(v)).front());
      int decision = dm.decider_of_component[comp];
      if (t.decisions[p] != -1) {
        res.passed = false;
        res.failure = "termination: duplicate decision";
      }
      t.decisions[p] = decision;
      if (!v->heard_of().contains(decision)) {
        res.passed = false;
        res.failure = "validity: decider outside the heard-of set of " +
                      adv.process_names()[p];
      }
    }
    for (int p = 1; p < adv.n(); ++p)
      if (t.decisions[p] != t.decisions[0]) {
        res.passed = false;
        res.failure = "agreement: processes decided differently";
      }
    res.transcripts.push_back(std::move(t));
    ++res.sequences;
  };

  if (opts.exhaustive) {
    std::vector<int> seq(dm.rounds, 0);
    while (true) {
      run_sequence(seq);
      int i = dm.rounds - 1;
      while (i >= 0 && ++seq[i] == adv.size()) seq[i--] = 0;
      if (i < 0) break;
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.samples; ++s) {
      std::vector<int> seq(dm.rounds);
      for (int r = 0; r < dm.rounds; ++r)
        seq[r] = static_cast<int>(rng() % static_cast<std::uint64_t>(adv.size()));
      run_sequence(seq);
    }
  }
  return res;
}

std::string transcripts_to_text(const SimulationResult& res, const Adversary& adv) {
  std::string out;
  for (const Transcript& t : res.transcripts) {
    std::string seq;
    for (std::size_t i = 0; i < t.sequence.size(); ++i) {
      if (i) seq += ",";
      seq += std::to_string(t.sequence[i]);
    }
    for (int p = 0; p < adv.n(); ++p) {
      out += "seq=" + seq + " process=" + adv.process_names()[p] +
             " decision=" + adv.process_names()[t.decisions[p]] + "\n";
    }
  }
  return out;
}

}  // namespace matopo
