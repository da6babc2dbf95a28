// Copyright 2026 The homlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Embedding finite posets into an interval [G1, G2] of the homomorphism
// order, and the reports that check such an embedding claim by claim.

#ifndef HOMLAB_FRACTAL_HPP
#define HOMLAB_FRACTAL_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/error.hpp"
#include "homlab/gadgets.hpp"
#include "homlab/graph.hpp"
#include "homlab/hom.hpp"
#include "homlab/solver.hpp"
#include "homlab/universal.hpp"

namespace homlab {

/// Phi(G) = G*(I, a, b) for an interval gadget I.
inline Graph phi(const Digraph& g, const PointedGraph& gadget) { return indicate(g, gadget); }

enum class Strategy { phi, ha };

inline const char* to_string(Strategy s) { return s == Strategy::phi ? "phi" : "ha"; }

inline Strategy parse_strategy(std::string_view s) {
  if (s == "phi") return Strategy::phi;
  if (s == "ha") return Strategy::ha;
  throw InvalidParameter("unknown strategy '" + std::string(s) + "' (expected phi or ha)");
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class ClaimVerdict { pass, fail, budget_exceeded };

inline const char* to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::pass:
      return "pass";
    case ClaimVerdict::fail:
      return "fail";
    case ClaimVerdict::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

struct ClaimResult {
  std::string claim;     // e.g. "G1 -> graph(x)"
  std::string instance;  // element names involved
  ClaimVerdict verdict = ClaimVerdict::fail;
  std::string evidence;  // witness | exhausted | budget_exceeded
  double seconds = 0;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  bool passed() const {
    for (const auto& c : claims)
      if (c.verdict != ClaimVerdict::pass) return false;
    return true;
  }
  const ClaimResult* first_failure() const {
    for (const auto& c : claims)
      if (c.verdict != ClaimVerdict::pass) return &c;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

struct IntervalEmbedding {
  FinitePoset poset;
  Graph g1, g2;
  Strategy strategy = Strategy::phi;
  OddSetFamily family;
  std::vector<Graph> assignment;  // indexed like the poset's elements
  /// phi strategy: the cycle families, assignment[x] = phi(digraphs[x]).
  std::vector<Digraph> digraphs;
  /// The gadget behind the graphs: the interval gadget for phi, I_l for ha.
  std::optional<PointedGraph> gadget;
  std::vector<std::string> provenance;
  VerificationReport report;
};

namespace detail {

inline ClaimResult run_claim(std::string claim, std::string instance, const Graph& g, const Graph& h, bool expect,
                             const SolverBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = hom_exists(g, h, budget);
  ClaimResult c{std::move(claim), std::move(instance), ClaimVerdict::fail, "", seconds_since(t0)};
  if (r.exceeded()) {
    c.verdict = ClaimVerdict::budget_exceeded;
    c.evidence = "budget_exceeded";
  } else {
    c.evidence = r.found() ? "witness" : "exhausted";
    c.verdict = r.found() == expect ? ClaimVerdict::pass : ClaimVerdict::fail;
  }
  return c;
}

/// Same claim answered through the indicator decomposition.
inline ClaimResult run_indicated_claim(std::string claim, std::string instance, const Digraph& d,
                                       const PointedGraph& gadget, const Graph& h, bool expect,
                                       const SolverBudget& budget) {
  auto r = hom_exists_indicated(d, gadget, h, budget);
  ClaimResult c{std::move(claim), std::move(instance), ClaimVerdict::fail, "", r.seconds};
  if (r.exceeded()) {
    c.verdict = ClaimVerdict::budget_exceeded;
    c.evidence = "budget_exceeded";
  } else {
    c.evidence = r.found() ? "witness" : "exhausted";
    c.verdict = r.found() == expect ? ClaimVerdict::pass : ClaimVerdict::fail;
  }
  return c;
}

}  // namespace detail

/// For each element x: G1 -> graph(x), graph(x) -/-> G1, graph(x) -> G2,
/// G2 -/-> graph(x). For each ordered pair x != y: graph(x) -> graph(y)
/// exactly when x <= y. Budget overruns are recorded, never thrown.
inline VerificationReport verify_embedding(const IntervalEmbedding& e, const SolverBudget& budget = {}) {
  if (e.assignment.size() != e.poset.size())
    throw InvalidParameter("embedding assigns " + std::to_string(e.assignment.size()) + " graphs to " +
                           std::to_string(e.poset.size()) + " elements");
  // Pairwise claims between substituted graphs go through the decomposition,
  // but only where the assigned graph really is phi of its digraph.
  std::vector<char> substituted(e.poset.size(), 0);
  if (e.strategy == Strategy::phi && e.gadget && e.digraphs.size() == e.poset.size())
    for (std::size_t x = 0; x < e.poset.size(); ++x) substituted[x] = phi(e.digraphs[x], *e.gadget) == e.assignment[x];
  VerificationReport rep;
  for (std::size_t x = 0; x < e.poset.size(); ++x) {
    const Graph& gx = e.assignment[x];
    auto name = e.poset.name(x);
    rep.claims.push_back(detail::run_claim("G1 -> graph(x)", name, e.g1, gx, true, budget));
    rep.claims.push_back(detail::run_claim("graph(x) -/-> G1", name, gx, e.g1, false, budget));
    rep.claims.push_back(detail::run_claim("graph(x) -> G2", name, gx, e.g2, true, budget));
    rep.claims.push_back(detail::run_claim("G2 -/-> graph(x)", name, e.g2, gx, false, budget));
  }
  for (std::size_t x = 0; x < e.poset.size(); ++x)
    for (std::size_t y = 0; y < e.poset.size(); ++y) {
      if (x == y) continue;
      bool expect = e.poset.leq(x, y);
      auto claim = expect ? "graph(x) -> graph(y)" : "graph(x) -/-> graph(y)";
      auto inst = e.poset.name(x) + " " + e.poset.name(y);
      rep.claims.push_back(substituted[x] ? detail::run_indicated_claim(claim, inst, e.digraphs[x], *e.gadget,
                                                                         e.assignment[y], expect, budget)
                                          : detail::run_claim(claim, inst, e.assignment[x], e.assignment[y],
                                                              expect, budget));
    }
  return rep;
}

/// The (G1', G2') actually used by the pipelines: G2 replaced by its core,
/// a bipartite G1 replaced by a non-bipartite graph strictly inside.
struct PreparedInterval {
  Graph g1, g2;
  std::vector<std::string> notes;
};

inline PreparedInterval prepare_interval(const Graph& g1, const Graph& g2, const SolverBudget& budget = {}) {
  if (detail::is_gap(g1, g2)) throw GapError("(G1, G2) is the gap (K1, K2)");
  detail::require_strictly_below(g1, g2, budget);
  PreparedInterval out;
  Core c = core_of(g2, budget);
  if (!is_connected(c.graph)) throw PreconditionViolation("the core of G2 must be connected");
  out.g2 = c.graph;
  if (c.graph.vertex_count() != g2.vertex_count())
    out.notes.push_back("G2 replaced by its core on " + std::to_string(c.graph.vertex_count()) + " vertices");
  out.g1 = g1;
  if (!odd_girth(g1)) {
    auto w = density_witness(g1, out.g2, budget);
    out.g1 = w.value.graph;
    out.notes.push_back("bipartite G1 replaced by " + w.value.name);
  }
  return out;
}

/// Interval gadget for [G1, G2]: the incomparable pair, reduced to cores,
/// joined by the two long paths.
inline VerifiedConstruction<IntervalGadget> interval_gadget_for(const PreparedInterval& iv,
                                                                const SolverBudget& budget = {}) {
  auto pair = incomparable_pair(iv.g1, iv.g2, budget);
  Graph h1 = core_of(pair.value.h1, budget).graph;
  Graph h2 = core_of(pair.value.h2, budget).graph;
  std::size_t l = std::max({h1.vertex_count(), h2.vertex_count(), iv.g2.vertex_count()}) + 1;
  l = std::max(l, path_threshold(iv.g2));
  auto gadget = build_interval_gadget(h1, h2, iv.g2, l, budget);
  gadget.notes.insert(gadget.notes.begin(), "pair H=" + pair.value.h_name + " H'=" + pair.value.h_prime_name +
                                                ", cores on " + std::to_string(h1.vertex_count()) + " and " +
                                                std::to_string(h2.vertex_count()) + " vertices, l=" +
                                                std::to_string(l));
  return gadget;
}

/// Q -> odd sets -> graphs in [G1, G2]. Verified before it is returned;
/// a failed claim throws ConstructionRejected, an undecided one BudgetExceeded.
inline IntervalEmbedding embed_poset_into_interval(const FinitePoset& q, const Graph& g1, const Graph& g2,
                                                   Strategy strategy = Strategy::phi,
                                                   const SolverBudget& budget = {},
                                                   std::size_t max_cycle_vertices = kDefaultCycleFamilyBound) {
  auto iv = prepare_interval(g1, g2, budget);
  IntervalEmbedding e;
  e.poset = q;
  e.g1 = g1;
  e.g2 = g2;
  e.strategy = strategy;
  e.provenance = iv.notes;
  e.family = embed_poset_to_odd_sets(q, compact_order(q));
  if (strategy == Strategy::phi) {
    auto gadget = interval_gadget_for(iv, budget);
    for (auto& n : gadget.notes) e.provenance.push_back(n);
    for (const auto& s : e.family.sets) {
      e.digraphs.push_back(odd_sets_to_cycle_family(s, max_cycle_vertices));
      e.assignment.push_back(phi(e.digraphs.back(), gadget.value.pointed));
    }
    e.gadget = gadget.value.pointed;
  } else {
    std::size_t l = choose_l(iv.g2);
    auto ind = build_indicator(l, budget);
    for (auto& n : ind.notes) e.provenance.push_back(n);
    auto f = find_sparse_incomparable(iv.g1, iv.g2, l, default_sparse_stream(l), budget);
    e.provenance.push_back("F = " + f.value.name);
    GadgetRecipe recipe{l, 0, iv.g2.vertex_count()};
    for (const auto& s : e.family.sets) {
      BigInt total = 0;
      for (const auto& p : s) total += p;
      if (total * l > max_cycle_vertices)
        throw PreconditionViolation("odd set " + to_string(s) + " gives cycles above the vertex bound");
      e.assignment.push_back(build_HA(s, recipe, f.value.graph, ind.value.pointed, iv.g1));
    }
    e.gadget = ind.value.pointed;
  }
  e.report = verify_embedding(e, budget);
  if (auto bad = e.report.first_failure()) {
    if (bad->verdict == ClaimVerdict::budget_exceeded)
      throw BudgetExceeded("embedding claim '" + bad->claim + "' for " + bad->instance + " was not decided");
    throw ConstructionRejected(bad->claim, "failed for " + bad->instance);
  }
  return e;
}

/// (#homs G -> G', #homs Phi(G) -> Phi(G')). The second count goes through
/// the indicator decomposition. Exponential; tiny inputs only.
inline std::pair<std::uint64_t, std::uint64_t> hom_count_correspondence(const Digraph& g, const Digraph& h,
                                                                        const PointedGraph& gadget,
                                                                        const SolverBudget& budget = {}) {
  return {count_homs(g, h, budget), count_homs_indicated(g, gadget, phi(h, gadget), budget)};
}

}  // namespace homlab

#endif  // HOMLAB_FRACTAL_HPP
