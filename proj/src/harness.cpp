#include "matopo/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "matopo/errors.hpp"
#include "matopo/io.hpp"

namespace matopo {

Method method_from_string(const std::string& s) {
  if (s == "nerve") return Method::Nerve;
  if (s == "rrg") return Method::Rrg;
  if (s == "oracle") return Method::Oracle;
  throw std::invalid_argument("unknown method '" + s + "'");
}

DecideResult decide(const Adversary& adv, Method method, int cap) {
  DecideResult out;
  out.method = method;
  out.cap = cap;
  if (!adv.all_rooted()) {
    out.solvable = false;
    out.trivially_impossible = true;
    return out;
  }
  switch (method) {
    case Method::Nerve: {
      NerveVerdict v = nerve_decide(adv);
      out.solvable = v.solvable;
      out.iterations = v.iterations;
      break;
    }
    case Method::Rrg: {
      RrgVerdict v = rrg_decide(adv);
      out.solvable = v.solvable;
      out.iterations = v.iterations;
      out.k_round_bound = v.k_round_bound;
      break;
    }
    case Method::Oracle: {
      MinRoundsResult r = min_termination_rounds(adv, cap);
      if (r.rounds) {
        out.solvable = true;
        out.min_rounds = r.rounds;
      }
      break;
    }
  }
  return out;
}

namespace {

std::string describe(const Adversary& adv) {
  NamedAdversary na{adv, "", "", {}};
  return print_adversary(na);
}

// A deterministic corpus entry. The per-index generator keeps results stable
// under count changes.
Adversary corpus_adversary(const VerifyConfig& cfg, int i) {
  std::seed_seq seq{static_cast<std::uint64_t>(cfg.seed), static_cast<std::uint64_t>(i)};
  std::mt19937_64 rng(seq);
  int span = cfg.n_max - cfg.n_min + 1;
  int n = cfg.n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
  int limit = std::min(cfg.max_graphs, rooted_graph_count(n));
  int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(limit));
  return random_rooted_adversary(n, k, rng());
}

std::vector<Adversary> exhaustive_corpus(int n, int max_graphs) {
  std::vector<CommGraph> rooted;
  for (const CommGraph& g : enumerate_all_graphs(n).graphs())
    if (is_rooted(g)) rooted.push_back(g);
  std::vector<Adversary> out;
  int total = static_cast<int>(rooted.size());
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    if (__builtin_popcount(mask) > max_graphs) continue;
    std::vector<CommGraph> pick;
    for (int i = 0; i < total; ++i)
      if ((mask >> i) & 1u) pick.push_back(rooted[i]);
    out.push_back(Adversary(std::move(pick)));
  }
  return out;
}

// Brute-force minimal nonempty heard-of-closed subset of a facet.
ProcSet minimal_closed_subset(const ProtocolComplex& pc, int facet) {
  const Facet& f = pc.facet(facet);
  int n = pc.n();
  ProcSet best;
  int best_size = n + 1;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    ProcSet s(bits);
    ProcSet heard;
    for (int p : s.indices()) heard |= f.verts[p]->heard_of();
    if (!heard.subset_of(s)) continue;
    if (s.count() < best_size) {
      best = s;
      best_size = s.count();
    }
  }
  return best;
}

// Closure computed with a reversed scan order; must agree with the fixpoint.
ProcSet closure_reversed(const ProtocolComplex& pc, int facet, ProcSet seed) {
  const Facet& f = pc.facet(facet);
  ProcSet s = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int p = pc.n() - 1; p >= 0; --p) {
      if (!s.contains(p)) continue;
      ProcSet merged = s | f.verts[p]->heard_of();
      if (merged != s) {
        s = merged;
        grew = true;
      }
    }
  }
  return s;
}

struct AdversaryChecks {
  VerifyReport* report;
  const VerifyConfig* cfg;
  std::string label;
  const Adversary* adv;

  void violation(const std::string& what) {
    report->violations.push_back(label + ": " + what + "\n" + describe(*adv));
  }

  void run() {
    const Adversary& a = *adv;
    DecideResult nerve = decide(a, Method::Nerve, cfg->cap);
    DecideResult rrg = decide(a, Method::Rrg, cfg->cap);
    if (nerve.solvable != rrg.solvable) {
      violation("nerve and rrg verdicts disagree");
      return;
    }
    bool solvable = *nerve.solvable;
    (solvable ? report->solvable : report->unsolvable)++;

    // Oracle scan up to the cap; also feeds monotonicity and kernel checks.
    std::vector<bool> strict(cfg->cap + 1), border(cfg->cap + 1);
    for (int r = 1; r <= cfg->cap; ++r) {
      SolvabilityReport rep = analyze(a, r);
      strict[r] = rep.strict_solvable;
      border[r] = rep.border_solvable;
    }
    for (int r = 2; r <= cfg->cap; ++r)
      if (strict[r - 1] && !strict[r]) violation("strict solvability is not monotone");
    for (int r = 1; r <= cfg->cap; ++r)
      if (strict[r] && !border[r]) violation("strict solvability without border solvability");

    std::optional<int> min_rounds;
    for (int r = 1; r <= cfg->cap && !min_rounds; ++r)
      if (strict[r]) min_rounds = r;

    if (solvable) {
      if (!min_rounds) {
        violation("solvable verdict but no strict round within the cap");
        return;
      }
      DecisionMap dm = extract_decision_map(a, *min_rounds);
      SimulationResult sim = simulate(a, dm);
      if (!sim.passed) violation("exhaustive simulation failed: " + sim.failure);
      if (nerve.iterations > *min_rounds)
        violation("nerve iterations exceed the oracle minimal rounds");
      if (nerve.iterations < *min_rounds)
        report->gaps.push_back({label, nerve.iterations, *min_rounds});
      if (rrg.k_round_bound && *rrg.k_round_bound < *min_rounds) {
        report->rrg_bound_covers_all = false;
        violation("rrg k-round bound below the oracle minimal rounds");
      }
      if (rrg.iterations < nerve.iterations)
        violation("rrg finished in fewer iterations than the nerve procedure");
    } else if (min_rounds) {
      violation("unsolvable verdict contradicted by the oracle at round " +
                std::to_string(*min_rounds));
      return;
    }

    // Eventual-agreement observation: border solvability should be followed by
    // strict solvability within n-1 rounds. Reported, not enforced.
    for (int r = 1; r <= cfg->cap; ++r) {
      if (!border[r]) continue;
      int deadline = r + a.n() - 1;
      if (deadline > cfg->cap) break;
      bool reached = false;
      for (int r2 = r; r2 <= deadline; ++r2) reached = reached || strict[r2];
      if (!reached)
        report->findings.push_back(label + ": border-solvable at round " + std::to_string(r) +
                                   " but not strictly solvable by round " +
                                   std::to_string(deadline));
      break;
    }

    // Border component closure: fixpoint vs brute force, both scan orders.
    for (int rounds = 1; rounds <= std::min(2, cfg->cap); ++rounds) {
      ProtocolComplex pc = ProtocolComplex::build(a, rounds);
      for (int f = 0; f < pc.facet_count(); ++f) {
        BorderComponentInfo info = border_component(pc, f);
        if (!info.proper) continue;
        ProcSet brute = minimal_closed_subset(pc, f);
        if (brute != info.b_colors) violation("border component differs from brute force");
        if (closure_reversed(pc, f, root_face(pc, f).colors) != info.b_colors)
          violation("border component closure depends on iteration order");
      }
    }

    if (a.n() == 3) {
      check_boundary_consistency(a);
      check_border_direct(a);
    }
  }

  // Strictness of the construction operator: shared vertices of the images of
  // two facets are exactly the evolutions whose top-level children lie in the
  // shared face.
  void check_boundary_consistency(const Adversary& a) {
    ProtocolComplex p1 = ProtocolComplex::build(a, 1);
    ProtocolComplex p2 = ProtocolComplex::build(a, 2);
    int k = a.size();
    for (int s = 0; s < k; ++s)
      for (int t = s + 1; t < k; ++t) {
        ProcSet shared = p1.shared_colors(s, t);
        std::set<ViewRef> left, right;
        for (int gi = 0; gi < k; ++gi) {
          const Facet& fs = p2.facet(s * k + gi);
          const Facet& ft = p2.facet(t * k + gi);
          for (int p = 0; p < a.n(); ++p) {
            // Intersection of the images.
            for (int gj = 0; gj < k; ++gj)
              if (fs.verts[p] == p2.facet(t * k + gj).verts[p]) left.insert(fs.verts[p]);
            // Image of the intersection, computed independently.
            if (fs.verts[p]->top_level_in_set().subset_of(shared)) right.insert(fs.verts[p]);
            if (ft.verts[p]->top_level_in_set().subset_of(shared)) right.insert(ft.verts[p]);
          }
        }
        if (left != right) violation("boundary consistency violated between facets " +
                                     std::to_string(s) + " and " + std::to_string(t));
      }
  }

  void check_border_direct(const Adversary& a) {
    for (int rounds = 1; rounds <= std::min(2, cfg->cap); ++rounds) {
      ProtocolComplex pc = ProtocolComplex::build(a, rounds);
      auto direct = border_subcomplex_direct(pc);
      for (int f = 0; f < pc.facet_count(); ++f) {
        const Facet& facet = pc.facet(f);
        for (std::uint32_t bits = 1; bits < (1u << pc.n()); ++bits) {
          std::vector<ViewRef> face;
          for (int p : ProcSet(bits).indices()) face.push_back(facet.verts[p]);
          if (face_in_border(face, pc.n()) != face_in_direct_border(face, direct))
            violation("border predicate disagrees with the direct construction");
        }
      }
    }
  }
};

}  // namespace

VerifyReport run_verification(const VerifyConfig& cfg, std::string* log) {
  VerifyReport report;
  std::ostringstream progress;

  std::vector<Adversary> corpus;
  if (cfg.exhaustive) {
    corpus = exhaustive_corpus(cfg.n_max, cfg.max_graphs);
  } else {
    corpus.reserve(cfg.count);
    for (int i = 0; i < cfg.count; ++i) corpus.push_back(corpus_adversary(cfg, i));
  }

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::string label = (cfg.exhaustive ? "exhaustive#" : "corpus#") + std::to_string(i);
    AdversaryChecks checks{&report, &cfg, label, &corpus[i]};
    checks.run();
    ++report.checked;
    if (cfg.log_progress && (i + 1) % 50 == 0)
      progress << "checked " << (i + 1) << "/" << corpus.size() << "\n";
  }
  if (log) *log = progress.str();
  return report;
}

}  // namespace matopo
