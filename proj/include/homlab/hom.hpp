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

#ifndef HOMLAB_HOM_HPP
#define HOMLAB_HOM_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "homlab/bitset.hpp"
#include "homlab/graph.hpp"
#include "homlab/solver.hpp"

namespace homlab {

enum class Verdict { strictly_below, strictly_above, equivalent, incomparable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::strictly_below: return "strictly_below";
    case Verdict::strictly_above: return "strictly_above";
    case Verdict::equivalent: return "equivalent";
    case Verdict::incomparable: return "incomparable";
  }
  return "?";
}

/// Position of G relative to H in the homomorphism order, with witnesses.
struct Comparison {
  Verdict verdict = Verdict::incomparable;
  std::optional<HomMapping> forward;   // G -> H
  std::optional<HomMapping> backward;  // H -> G
};

/// compare() could not settle one of the two directions.
class IndeterminateComparison : public BudgetExceeded {
 public:
  IndeterminateComparison(std::optional<bool> forward, std::optional<bool> backward)
      : BudgetExceeded("comparison indeterminate: solver budget exceeded"), forward_(forward), backward_(backward) {}

  /// Existence of G -> H if it was resolved.
  std::optional<bool> forward() const noexcept { return forward_; }
  /// Existence of H -> G if it was resolved.
  std::optional<bool> backward() const noexcept { return backward_; }

 private:
  std::optional<bool> forward_, backward_;
};

template <typename G>
Comparison compare(const G& g, const G& h, const SolverBudget& budget = {}) {
  auto fwd = hom_exists(g, h, budget);
  auto bwd = hom_exists(h, g, budget);
  auto resolved = [](const SearchResult& r) -> std::optional<bool> {
    if (r.exceeded()) return std::nullopt;
    return r.found();
  };
  if (fwd.exceeded() || bwd.exceeded()) throw IndeterminateComparison(resolved(fwd), resolved(bwd));
  Comparison c;
  if (fwd.found()) c.forward = fwd.mapping;
  if (bwd.found()) c.backward = bwd.mapping;
  if (fwd.found() && bwd.found())
    c.verdict = Verdict::equivalent;
  else if (fwd.found())
    c.verdict = Verdict::strictly_below;
  else if (bwd.found())
    c.verdict = Verdict::strictly_above;
  else
    c.verdict = Verdict::incomparable;
  return c;
}

/// True iff G -> H definitively; throws BudgetExceeded otherwise.
template <typename G>
bool hom_decided(const G& g, const G& h, const SolverBudget& budget = {}) {
  auto r = hom_exists(g, h, budget);
  if (r.exceeded()) throw BudgetExceeded("homomorphism search exceeded its budget");
  return r.found();
}

/// A core of G together with where it sits inside G.
struct Core {
  Graph graph;
  /// vertices[i] is the vertex of G that became vertex i of the core.
  std::vector<Vertex> vertices;
  /// Retraction G -> core (identity on `vertices`).
  HomMapping retraction;
};

namespace detail {

inline constexpr std::size_t kEndoEnumerationLimit = 4096;

inline bool surjective(const HomMapping& f, std::size_t n) {
  std::vector<char> hit(n, 0);
  std::size_t seen = 0;
  for (Vertex v : f)
    if (!hit[v]) {
      hit[v] = 1;
      ++seen;
    }
  return seen == n;
}

/// An endomorphism with a smaller image, if one exists. Small endomorphism
/// monoids are enumerated outright; otherwise one vertex at a time is
/// excluded from the image (lowest index first).
inline std::optional<HomMapping> shrinking_endomorphism(const Graph& g, const SolverBudget& budget) {
  auto all = enumerate(g, g, budget, kEndoEnumerationLimit);
  if (all && all->size() < kEndoEnumerationLimit) {
    for (auto& f : *all)
      if (!surjective(f, g.vertex_count())) return f;
    return std::nullopt;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    SearchOptions opts;
    opts.forbidden_targets = {v};
    auto r = hom_exists(g, g, budget, opts);
    if (r.exceeded()) throw BudgetExceeded("core computation exceeded its budget");
    if (r.found()) return r.mapping;
  }
  return std::nullopt;
}

}  // namespace detail

/// Repeatedly restricts G to the image of a non-surjective endomorphism until
/// every endomorphism is onto.
inline Core core_of(const Graph& g, const SolverBudget& budget = {}) {
  std::vector<Vertex> verts(g.vertex_count());
  for (Vertex v = 0; v < verts.size(); ++v) verts[v] = v;
  HomMapping to_current = verts;  // G -> current (indices into current)
  Graph current = g;
  while (auto f = detail::shrinking_endomorphism(current, budget)) {
    std::vector<Vertex> image = *f;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<Vertex> index(current.vertex_count(), 0);
    for (Vertex i = 0; i < image.size(); ++i) index[image[i]] = i;
    for (auto& t : to_current) t = index[(*f)[t]];
    std::vector<Vertex> next_verts;
    for (Vertex i : image) next_verts.push_back(verts[i]);
    verts = std::move(next_verts);
    current = induced_subgraph(current, image);
  }
  // The map restricted to the core is an automorphism; undo it so the
  // result fixes the core pointwise.
  std::vector<Vertex> inverse(verts.size());
  for (Vertex i = 0; i < verts.size(); ++i) inverse[to_current[verts[i]]] = i;
  for (auto& t : to_current) t = inverse[t];
  return {std::move(current), std::move(verts), std::move(to_current)};
}

/// True iff the identity is the only endomorphism.
inline bool is_rigid(const Graph& g, const SolverBudget& budget = {}) { return count_homs(g, g, budget, 2) == 1; }

/// True iff every endomorphism is surjective (G is its own core).
inline bool is_core(const Graph& g, const SolverBudget& budget = {}) {
  return !detail::shrinking_endomorphism(g, budget).has_value();
}

inline bool isomorphic(const Graph& g, const Graph& h, const SolverBudget& budget = {}) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  SearchOptions opts;
  opts.injective = true;
  auto r = hom_exists(g, h, budget, opts);
  if (r.exceeded()) throw BudgetExceeded("isomorphism test exceeded its budget");
  // An injective edge map between graphs with equal edge counts is onto the edges.
  return r.found();
}

/// Least l such that any two vertices are joined by walks of every length
/// >= l. Computed by walk-length reachability; the two-step stabilization
/// window is checked explicitly, and the scan stops at 4|V|^2 lengths.
inline std::size_t path_threshold(const Graph& h) {
  const std::size_t n = h.vertex_count();
  if (n == 0 || !is_connected(h)) throw PreconditionViolation("path_threshold needs a connected graph");
  if (!odd_girth(h)) throw PreconditionViolation("path_threshold needs a non-bipartite graph (parity obstruction)");
  std::vector<detail::Bitset> adj(n, detail::Bitset(n));
  for (auto [u, v] : h.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  // reach[x] = endpoints of walks of the current length starting at x.
  std::vector<detail::Bitset> reach(n, detail::Bitset(n));
  for (Vertex x = 0; x < n; ++x) reach[x].set(x);
  auto full = [&] {
    for (const auto& r : reach)
      if (r.count() != n) return false;
    return true;
  };
  auto step = [&] {
    std::vector<detail::Bitset> next(n, detail::Bitset(n));
    for (Vertex x = 0; x < n; ++x) reach[x].for_each([&](std::size_t z) { next[x] |= adj[z]; });
    reach = std::move(next);
  };
  const std::size_t cap = 4 * n * n;
  for (std::size_t len = 0; len <= cap; ++len) {
    if (full()) {
      step();
      if (!full()) throw Error("walk reachability did not stabilise after becoming complete");
      return len;
    }
    step();
  }
  throw Error("path_threshold did not stabilise within 4|V|^2 lengths");
}

}  // namespace homlab

#endif  // HOMLAB_HOM_HPP
