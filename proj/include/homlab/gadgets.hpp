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

// Indicator substitution and the constructions built on it. Every builder
// runs its mandatory checks with the solver and refuses to hand out a graph
// that failed one.

#ifndef HOMLAB_GADGETS_HPP
#define HOMLAB_GADGETS_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homlab/error.hpp"
#include "homlab/graph.hpp"
#include "homlab/hom.hpp"
#include "homlab/solver.hpp"
#include "homlab/universal.hpp"

namespace homlab {

struct PointedGraph {
  Graph graph;
  Vertex a = 0;
  Vertex b = 1;

  void validate() const {
    detail::check_vertex(graph.vertex_count(), a);
    detail::check_vertex(graph.vertex_count(), b);
    if (a == b) throw InvalidParameter("pointed graph needs two distinct vertices");
  }
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// One verified property. `recheck` recomputes it from stored witnesses
/// (or reruns the exhaustive search for negative claims).
struct Check {
  std::string name;
  bool passed = false;
  std::string evidence;  // witness | exhausted | computed | budget_exceeded | refuted
  std::string detail;
  double seconds = 0;
  std::function<bool()> recheck;
};

template <typename T>
struct VerifiedConstruction {
  T value;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  bool reverify() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.recheck && c.recheck(); });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Claim "G -> H" (expect=true) or "G -/-> H" (expect=false).
template <typename G>
Check hom_check(std::string name, const G& g, const G& h, bool expect, const SolverBudget& budget,
                const SearchOptions& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = hom_exists(g, h, budget, opts);
  Check c;
  c.name = std::move(name);
  c.seconds = seconds_since(t0);
  auto src = std::make_shared<const G>(g);
  auto tgt = std::make_shared<const G>(h);
  if (r.exceeded()) {
    c.evidence = "budget_exceeded";
    c.detail = "no definitive answer within the budget";
    c.recheck = [] { return false; };
    return c;
  }
  c.passed = r.found() == expect;
  if (r.found()) {
    c.evidence = "witness";
    auto w = std::make_shared<const HomMapping>(r.mapping);
    c.recheck = [src, tgt, w, expect, pins = opts.pinned] {
      bool ok = is_homomorphism(*src, *tgt, *w);
      for (auto [x, v] : pins) ok = ok && (*w)[x] == v;
      return ok == expect;
    };
  } else {
    c.evidence = "exhausted";
    c.recheck = [src, tgt, expect, budget, opts] {
      auto again = hom_exists(*src, *tgt, budget, opts);
      return !again.exceeded() && again.found() == expect;
    };
  }
  if (!c.passed) c.detail = expect ? "no homomorphism exists" : "a homomorphism exists";
  return c;
}

inline Check computed_check(std::string name, bool passed, std::string detail, std::function<bool()> recompute) {
  Check c;
  c.name = std::move(name);
  c.passed = passed;
  c.evidence = "computed";
  c.detail = std::move(detail);
  c.recheck = [passed, recompute = std::move(recompute)] { return passed && recompute(); };
  return c;
}

/// Claim "I -> H with f(a) = f(b)"; searched on I with a and b merged.
inline Check equal_ends_check(std::string name, const PointedGraph& ig, const Graph& h, const SolverBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  c.name = std::move(name);
  auto merged = identify(ig.graph, ig.a, ig.b);
  if (!merged) {
    c.evidence = "refuted";
    c.detail = "a and b are adjacent";
    c.recheck = [] { return false; };
    return c;
  }
  auto r = hom_exists(*merged, h, budget);
  c.seconds = seconds_since(t0);
  if (r.exceeded()) {
    c.evidence = "budget_exceeded";
    c.recheck = [] { return false; };
    return c;
  }
  if (!r.found()) {
    c.evidence = "exhausted";
    c.detail = "no homomorphism identifies a and b";
    c.recheck = [] { return false; };
    return c;
  }
  // merged vertex order: b removed, later vertices shift down by one
  const Vertex keep = std::min(ig.a, ig.b), drop = std::max(ig.a, ig.b);
  HomMapping f(ig.graph.vertex_count());
  for (Vertex v = 0; v < f.size(); ++v) f[v] = r.mapping[v == drop ? keep : (v > drop ? v - 1 : v)];
  c.passed = true;
  c.evidence = "witness";
  auto src = std::make_shared<const PointedGraph>(ig);
  auto tgt = std::make_shared<const Graph>(h);
  auto w = std::make_shared<const HomMapping>(std::move(f));
  c.recheck = [src, tgt, w] { return is_homomorphism(src->graph, *tgt, *w) && (*w)[src->a] == (*w)[src->b]; };
  return c;
}

inline Check rigid_check(std::string name, const Graph& g, const SolverBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  c.name = std::move(name);
  std::uint64_t n = 0;
  try {
    n = count_homs(g, g, budget, 2);
  } catch (const BudgetExceeded&) {
    c.evidence = "budget_exceeded";
    c.seconds = seconds_since(t0);
    c.recheck = [] { return false; };
    return c;
  }
  c.seconds = seconds_since(t0);
  c.passed = n == 1;
  c.evidence = "exhausted";
  if (!c.passed) c.detail = "a non-identity endomorphism exists";
  auto src = std::make_shared<const Graph>(g);
  c.recheck = [src, budget] { return is_rigid(*src, budget); };
  return c;
}

inline void require(const Check& c) {
  if (!c.passed) throw ConstructionRejected(c.name, c.detail.empty() ? c.evidence : c.detail);
}

/// Definitive strict comparison G1 < G2, or the appropriate error.
inline void require_strictly_below(const Graph& g1, const Graph& g2, const SolverBudget& budget) {
  if (g1.vertex_count() == 0 || g2.vertex_count() == 0) throw PreconditionViolation("graphs must be nonempty");
  if (compare(g1, g2, budget).verdict != Verdict::strictly_below)
    throw PreconditionViolation("G1 is not strictly below G2");
}

/// (G1, G2) is the gap (K1, K2) up to equivalence.
inline bool is_gap(const Graph& g1, const Graph& g2) {
  return g1.vertex_count() > 0 && g1.edge_count() == 0 && g2.edge_count() > 0 && !odd_girth(g2).has_value();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Indicator substitution
// ---------------------------------------------------------------------------

/// G*(I,a,b) together with where every copy of I landed.
struct IndicatedGraph {
  Graph graph;
  /// copies[k][v] = vertex of the result playing vertex v of I in the copy
  /// substituted for arc k (arcs in sorted order).
  std::vector<std::vector<Vertex>> copies;
};

inline IndicatedGraph indicate_detailed(const Digraph& g, const PointedGraph& ind) {
  ind.validate();
  if (!is_connected(ind.graph)) throw PreconditionViolation("indicator graph must be connected");
  GraphBuilder b(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    b.set_label(x, g.has_labels() && !g.label(x).empty() ? std::string(g.label(x)) : "v" + std::to_string(x));
  IndicatedGraph out;
  std::size_t k = 0;
  for (auto [x, y] : g.arcs()) {
    std::vector<Vertex> m(ind.graph.vertex_count());
    for (Vertex v = 0; v < m.size(); ++v) {
      if (v == ind.a)
        m[v] = x;
      else if (v == ind.b)
        m[v] = y;
      else {
        auto inner = ind.graph.has_labels() && !ind.graph.label(v).empty() ? std::string(ind.graph.label(v))
                                                                          : std::to_string(v);
        m[v] = b.add_vertex("arc" + std::to_string(k) + "." + inner);
      }
    }
    for (auto [u, v] : ind.graph.edges()) b.add_edge(m[u], m[v]);
    out.copies.push_back(std::move(m));
    ++k;
  }
  out.graph = b.build();
  return out;
}

/// Every arc (x,y) of G replaced by a copy of I with x = a and y = b.
inline Graph indicate(const Digraph& g, const PointedGraph& ind) { return indicate_detailed(g, ind).graph; }

// ---------------------------------------------------------------------------
// Homomorphisms out of substituted graphs
// ---------------------------------------------------------------------------
//
// Copies of I in G*(I,a,b) meet only at vertices of G, so a map out of it is
// a map g of V(G) plus, for every arc (x,y), some f: I -> T with f(a) = g(x)
// and f(b) = g(y). Hence G*(I) -> T iff G -> R_T, where
// R_T = { (f(a), f(b)) : f: I -> T }, and the number of maps is the sum over
// such g of the product of the pair multiplicities. Exact, and far cheaper
// than searching the substituted graph when T is large.

/// R_T with one witness per pair and, optionally, the multiplicities.
struct IndicatorRelation {
  std::vector<Edge> pairs;
  std::vector<HomMapping> witnesses;
  std::vector<std::uint64_t> counts;  // empty unless requested
};

namespace detail {

struct Deadline {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  SolverBudget budget;

  /// What is left of the budget; nullopt once spent.
  std::optional<SolverBudget> remaining() const {
    double left = budget.timeout_secs - seconds_since(start);
    if (left <= 0) return std::nullopt;
    return SolverBudget{left, budget.node_limit};
  }
};

}  // namespace detail

inline constexpr std::size_t kIndicatorEnumerationLimit = 1 << 16;

/// nullopt if the budget ran out.
inline std::optional<IndicatorRelation> indicator_relation(const PointedGraph& ind, const Graph& target,
                                                           const SolverBudget& budget = {}, bool with_counts = false) {
  ind.validate();
  detail::Deadline clock{.budget = budget};
  IndicatorRelation rel;
  // Rigid-looking indicators have few maps into T: list them all. Otherwise
  // fall back to one pinned search per image of a.
  auto all = detail::enumerate(ind.graph, target, budget, kIndicatorEnumerationLimit);
  if (!all) return std::nullopt;
  if (all->size() < kIndicatorEnumerationLimit) {
    std::map<Edge, std::size_t> at;
    for (auto& f : *all) {
      Edge e{f[ind.a], f[ind.b]};
      auto [it, fresh] = at.emplace(e, rel.pairs.size());
      if (fresh) {
        rel.pairs.push_back(e);
        rel.witnesses.push_back(std::move(f));
        rel.counts.push_back(0);
      }
      ++rel.counts[it->second];
    }
    if (!with_counts) rel.counts.clear();
    std::vector<std::size_t> idx(rel.pairs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return rel.pairs[i] < rel.pairs[j]; });
    IndicatorRelation sorted;
    for (auto i : idx) {
      sorted.pairs.push_back(rel.pairs[i]);
      sorted.witnesses.push_back(std::move(rel.witnesses[i]));
      if (with_counts) sorted.counts.push_back(rel.counts[i]);
    }
    return sorted;
  }
  for (Vertex u = 0; u < target.vertex_count(); ++u) {
    std::vector<Vertex> open(target.vertex_count());
    std::iota(open.begin(), open.end(), Vertex{0});
    while (!open.empty()) {
      auto left = clock.remaining();
      if (!left) return std::nullopt;
      SearchOptions opts;
      opts.pinned = {{ind.a, u}};
      opts.allowed = {{ind.b, open}};
      auto r = hom_exists(ind.graph, target, *left, opts);
      if (r.exceeded()) return std::nullopt;
      if (!r.found()) break;
      Vertex v = r.mapping[ind.b];
      rel.pairs.emplace_back(u, v);
      rel.witnesses.push_back(std::move(r.mapping));
      open.erase(std::find(open.begin(), open.end(), v));
    }
  }
  // sorted pairs, so lookups can bisect
  std::vector<std::size_t> idx(rel.pairs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return rel.pairs[i] < rel.pairs[j]; });
  IndicatorRelation sorted;
  for (auto i : idx) {
    sorted.pairs.push_back(rel.pairs[i]);
    sorted.witnesses.push_back(std::move(rel.witnesses[i]));
  }
  rel = std::move(sorted);
  if (with_counts)
    for (auto [u, v] : rel.pairs) {
      auto left = clock.remaining();
      if (!left) return std::nullopt;
      SearchOptions opts;
      opts.pinned = {{ind.a, u}, {ind.b, v}};
      try {
        rel.counts.push_back(count_homs(ind.graph, target, *left, std::numeric_limits<std::uint64_t>::max(), opts));
      } catch (const BudgetExceeded&) {
        return std::nullopt;
      }
    }
  return rel;
}

namespace detail {

/// Maps G -> R by plain backtracking over V(G) in BFS order. visit(g) gets
/// each complete assignment and returns false to stop.
template <typename Visit>
bool relation_search(const Digraph& g, std::size_t target_n, const std::vector<Edge>& rel, const Deadline& clock,
                     Visit&& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> fwd(target_n), bwd(target_n);
  for (auto [u, v] : rel) {
    fwd[u].push_back(v);
    bwd[v].push_back(u);
  }
  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    for (std::size_t head = order.size(), i = (order.push_back(s), head); i < order.size(); ++i) {
      Vertex x = order[i];
      for (auto nb : {g.out_neighbors(x), g.in_neighbors(x)})
        for (Vertex y : nb)
          if (!seen[y]) seen[y] = 1, order.push_back(y);
    }
  }
  std::vector<Vertex> pos(n), img(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<Vertex>(i);
  std::vector<Vertex> all(target_n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::uint64_t ticks = 0;
  bool stopped = false, expired = false;
  auto fits = [&](Vertex x, Vertex v) {
    for (Vertex y : g.out_neighbors(x))
      if (pos[y] < pos[x] && !std::binary_search(fwd[v].begin(), fwd[v].end(), img[y])) return false;
    for (Vertex y : g.in_neighbors(x))
      if (pos[y] < pos[x] && !std::binary_search(bwd[v].begin(), bwd[v].end(), img[y])) return false;
    return true;
  };
  for (auto* lists : {&fwd, &bwd})
    for (auto& l : *lists) std::sort(l.begin(), l.end());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (stopped || expired) return;
    if ((++ticks & 1023) == 0 && !clock.remaining()) {
      expired = true;
      return;
    }
    if (i == n) {
      if (!visit(img)) stopped = true;
      return;
    }
    Vertex x = order[i];
    // candidates come from an earlier neighbour when there is one
    const std::vector<Vertex>* cand = &all;
    for (Vertex y : g.out_neighbors(x))
      if (pos[y] < pos[x]) cand = &bwd[img[y]];
    for (Vertex y : g.in_neighbors(x))
      if (pos[y] < pos[x]) cand = &fwd[img[y]];
    for (Vertex v : *cand) {
      if (!fits(x, v)) continue;
      img[x] = v;
      go(i + 1);
      if (stopped || expired) return;
    }
  };
  go(0);
  return !expired;
}

inline std::size_t pair_index(const IndicatorRelation& rel, Vertex u, Vertex v) {
  auto it = std::lower_bound(rel.pairs.begin(), rel.pairs.end(), Edge{u, v});
  return static_cast<std::size_t>(it - rel.pairs.begin());
}

}  // namespace detail

/// G*(I,a,b) -> T by the decomposition above; the witness is a mapping of
/// indicate(G, I) and is re-verified.
inline SearchResult hom_exists_indicated(const Digraph& g, const PointedGraph& ind, const Graph& target,
                                         const SolverBudget& budget = {}) {
  auto t0 = std::chrono::steady_clock::now();
  SearchResult out;
  auto finish = [&](SearchStatus s) {
    out.status = s;
    out.seconds = detail::seconds_since(t0);
    return out;
  };
  auto rel = indicator_relation(ind, target, budget);
  if (!rel) return finish(SearchStatus::budget_exceeded);
  std::optional<std::vector<Vertex>> hit;
  bool done = detail::relation_search(g, target.vertex_count(), rel->pairs, detail::Deadline{t0, budget},
                                      [&](const std::vector<Vertex>& img) {
                                        hit = img;
                                        return false;
                                      });
  if (!done) return finish(SearchStatus::budget_exceeded);
  if (!hit) return finish(SearchStatus::none);
  auto sub = indicate_detailed(g, ind);
  out.mapping.assign(sub.graph.vertex_count(), 0);
  for (Vertex x = 0; x < g.vertex_count(); ++x) out.mapping[x] = (*hit)[x];
  auto arcs = g.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& f = rel->witnesses[detail::pair_index(*rel, (*hit)[arcs[k].first], (*hit)[arcs[k].second])];
    for (Vertex v = 0; v < f.size(); ++v) out.mapping[sub.copies[k][v]] = f[v];
  }
  if (!is_homomorphism(sub.graph, target, out.mapping)) throw Error("decomposition produced an invalid witness");
  return finish(SearchStatus::found);
}

/// Number of homomorphisms G*(I,a,b) -> T given R_T with multiplicities, so
/// one relation can serve many sources. Throws BudgetExceeded.
inline std::uint64_t count_homs_indicated(const Digraph& g, const IndicatorRelation& rel, std::size_t target_n,
                                          const SolverBudget& budget = {}) {
  if (rel.counts.size() != rel.pairs.size()) throw InvalidParameter("indicator relation lacks multiplicities");
  detail::Deadline clock{.budget = budget};
  boost::multiprecision::cpp_int total = 0;
  bool done = detail::relation_search(g, target_n, rel.pairs, clock, [&](const std::vector<Vertex>& img) {
    boost::multiprecision::cpp_int term = 1;
    for (auto [x, y] : g.arcs()) term *= rel.counts[detail::pair_index(rel, img[x], img[y])];
    total += term;
    return true;
  });
  if (!done) throw BudgetExceeded("homomorphism count exceeded its budget");
  if (total > std::numeric_limits<std::uint64_t>::max()) throw Error("homomorphism count does not fit in 64 bits");
  return total.convert_to<std::uint64_t>();
}

/// Number of homomorphisms G*(I,a,b) -> T. Throws BudgetExceeded.
inline std::uint64_t count_homs_indicated(const Digraph& g, const PointedGraph& ind, const Graph& target,
                                          const SolverBudget& budget = {}) {
  detail::Deadline clock{.budget = budget};
  auto rel = indicator_relation(ind, target, budget, true);
  if (!rel) throw BudgetExceeded("indicator relation was not computed within the budget");
  auto left = clock.remaining();
  if (!left) throw BudgetExceeded("homomorphism count exceeded its budget");
  return count_homs_indicated(g, *rel, target.vertex_count(), *left);
}

// ---------------------------------------------------------------------------
// The indicator I_l
// ---------------------------------------------------------------------------

/// Path lengths of a K4 subdivision on branch vertices a, b, c, d.
struct IndicatorProfile {
  std::size_t ab, ac, bc, ad, bd, cd;
  bool operator==(const IndicatorProfile&) const = default;
};

inline IndicatorProfile default_indicator_profile(std::size_t l) { return {l - 4, l - 4, l - 4, 3, 3, 3}; }

/// The three cycles through d have length l+2 and the cycle abc is no shorter.
inline bool profile_fits(const IndicatorProfile& p, std::size_t l) {
  return p.ab + p.ad + p.bd == l + 2 && p.ac + p.ad + p.cd == l + 2 && p.bc + p.bd + p.cd == l + 2 &&
         p.ab + p.ac + p.bc >= l + 2;
}

inline PointedGraph indicator_graph(const IndicatorProfile& p) {
  GraphBuilder g;
  Vertex a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c"), d = g.add_vertex("d");
  g.add_path(a, b, p.ab, "ab");
  g.add_path(a, c, p.ac, "ac");
  g.add_path(b, c, p.bc, "bc");
  g.add_path(a, d, p.ad, "ad");
  g.add_path(b, d, p.bd, "bd");
  g.add_path(c, d, p.cd, "cd");
  return {g.build(), a, b};
}

struct Indicator {
  PointedGraph pointed;
  std::size_t l = 0;
  IndicatorProfile profile{};
  bool default_profile = true;
};

namespace detail {

inline std::vector<Check> indicator_checks(const PointedGraph& ig, std::size_t l, const SolverBudget& budget) {
  std::vector<Check> checks;
  auto g = ig.graph;
  auto gi = girth(g);
  checks.push_back(computed_check("girth", gi == l + 2,
                                  "girth " + (gi ? std::to_string(*gi) : std::string("inf")) + ", want " +
                                      std::to_string(l + 2),
                                  [g, l] { return girth(g) == l + 2; }));
  if (!checks.back().passed) return checks;
  checks.push_back(hom_check("maps_to_C_l", g, cycle(l), true, budget));
  if (!checks.back().passed) return checks;
  checks.push_back(equal_ends_check("maps_to_C_l_with_a_eq_b", ig, cycle(l), budget));
  if (!checks.back().passed) return checks;
  checks.push_back(rigid_check("rigid", g, budget));
  return checks;
}

}  // namespace detail

/// I_l as a verified K4 subdivision. The default profile is tried first; if
/// it fails a check, every other profile fitting the same cycle constraints
/// is tried in lexicographic order of (ab, ac, bc, ad).
inline VerifiedConstruction<Indicator> build_indicator(std::size_t l, const SolverBudget& budget = {}) {
  if (l < 5 || l % 2 == 0) throw InvalidParameter("indicator length l must be odd and at least 5");
  VerifiedConstruction<Indicator> out;
  auto attempt = [&](const IndicatorProfile& p, bool is_default) {
    auto ig = indicator_graph(p);
    auto checks = detail::indicator_checks(ig, l, budget);
    bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    if (ok) {
      out.value = {ig, l, p, is_default};
      out.checks = std::move(checks);
    }
    return std::make_pair(ok, checks.empty() ? Check{} : checks.back());
  };
  auto def = default_indicator_profile(l);
  auto [ok, failed] = attempt(def, true);
  if (ok) return out;
  out.notes.push_back("default profile rejected by check '" + failed.name + "': " + failed.detail);
  for (std::size_t ab = 1; ab <= l; ++ab)
    for (std::size_t ac = 1; ac <= l; ++ac)
      for (std::size_t bc = 1; bc <= l; ++bc)
        for (std::size_t ad = 1; ad + ab < l + 2 && ad + ac < l + 2; ++ad) {
          IndicatorProfile p{ab, ac, bc, ad, l + 2 - ab - ad, l + 2 - ac - ad};
          if (p == def || !profile_fits(p, l)) continue;
          if (attempt(p, false).first) {
            out.notes.push_back("using profile ab=" + std::to_string(ab) + " ac=" + std::to_string(ac) +
                                " bc=" + std::to_string(bc) + " ad=" + std::to_string(p.ad) +
                                " bd=" + std::to_string(p.bd) + " cd=" + std::to_string(p.cd));
            return out;
          }
        }
  throw ConstructionRejected(failed.name, "no K4 subdivision profile passes for l=" + std::to_string(l) +
                                              " (default: " + failed.detail + ")");
}

// ---------------------------------------------------------------------------
// Sparse incomparable graph F
// ---------------------------------------------------------------------------

/// Subdivided complete graphs with girth >= l (odd subdivision length), then odd cycles of length
/// >= l, then generalized Mycielskians of odd cycles.
inline std::vector<NamedGraph> default_sparse_stream(std::size_t l) {
  std::vector<NamedGraph> out;
  // odd subdivision keeps the triangles odd
  std::size_t s = 1;
  while (3 * s < l) s += 2;
  for (std::size_t n = 4; n <= 8; ++n)
    out.push_back({"subdivided_complete(" + std::to_string(n) + "," + std::to_string(s) + ")",
                   subdivided_complete(n, s)});
  std::size_t first = std::max<std::size_t>(3, l | 1);
  for (std::size_t m = first; m <= first + 8; m += 2) out.push_back({"cycle(" + std::to_string(m) + ")", cycle(m)});
  for (std::size_t k : {5, 7, 9})
    for (std::size_t r = 1; r <= 3; ++r)
      out.push_back({"generalized_mycielski(C" + std::to_string(k) + "," + std::to_string(r) + ")",
                     generalized_mycielski(cycle(k), r)});
  return out;
}

namespace detail {

inline void require_sparse_preconditions(const Graph& g1, const Graph& g2, const SolverBudget& budget) {
  if (!odd_girth(g1) || !odd_girth(g2)) throw PreconditionViolation("G1 and G2 must be non-bipartite");
  require_strictly_below(g1, g2, budget);
  if (!is_core(g2, budget)) throw PreconditionViolation("G2 must be a core");
}

}  // namespace detail

/// First candidate F with F -/-> G1, G1 -/-> F, F -> G2, girth >= l, connected.
inline VerifiedConstruction<NamedGraph> find_sparse_incomparable(const Graph& g1, const Graph& g2, std::size_t l,
                                                                 const std::vector<NamedGraph>& candidates,
                                                                 const SolverBudget& budget = {}) {
  detail::require_sparse_preconditions(g1, g2, budget);
  VerifiedConstruction<NamedGraph> out;
  for (const auto& cand : candidates) {
    const Graph& f = cand.graph;
    std::vector<Check> checks;
    auto keep_going = [&](Check c) {
      checks.push_back(std::move(c));
      return checks.back().passed;
    };
    auto gi = girth(f);
    bool ok = keep_going(detail::computed_check("connected", is_connected(f) && f.vertex_count() > 0, "",
                                                [f] { return is_connected(f); })) &&
              keep_going(detail::computed_check("girth_at_least_l", !gi || *gi >= l,
                                                "girth " + (gi ? std::to_string(*gi) : std::string("inf")),
                                                [f, l] {
                                                  auto x = girth(f);
                                                  return !x || *x >= l;
                                                })) &&
              keep_going(detail::hom_check("G1_not_to_F", g1, f, false, budget)) &&
              keep_going(detail::hom_check("F_to_G2", f, g2, true, budget)) &&
              keep_going(detail::hom_check("F_not_to_G1", f, g1, false, budget));
    if (!ok) {
      out.notes.push_back(cand.name + ": rejected by '" + checks.back().name + "' (" + checks.back().evidence + ")");
      continue;
    }
    // F < G2 strictly follows from G2 -/-> F, implied by G1 -> G2 and G1 -/-> F
    out.value = cand;
    out.checks = std::move(checks);
    return out;
  }
  throw NotFound("sparse incomparable search exhausted its candidate stream");
}

// ---------------------------------------------------------------------------
// H_p and H_A
// ---------------------------------------------------------------------------

struct GadgetRecipe {
  std::size_t l = 5;
  Vertex u = 0;              // attachment vertex in F
  std::size_t path_length = 0;  // |V(G2)|
};

inline constexpr std::size_t kMaxGadgetVertices = 200000;

/// C_{lp}*(I_l) plus F plus a path of the recipe's length from cycle vertex 0 to u.
inline Graph build_Hp(std::size_t p, const GadgetRecipe& recipe, const Graph& f, const PointedGraph& ind) {
  if (p < 3 || p % 2 == 0) throw InvalidParameter("H_p needs an odd p >= 3");
  if (recipe.l < 5 || recipe.l % 2 == 0) throw InvalidParameter("recipe l must be odd and at least 5");
  if (recipe.path_length < 1) throw InvalidParameter("recipe path length must be positive");
  detail::check_vertex(f.vertex_count(), recipe.u);
  const std::size_t lp = recipe.l * p;
  if (lp * ind.graph.vertex_count() > kMaxGadgetVertices)
    throw PreconditionViolation("H_p for p=" + std::to_string(p) + " would exceed the vertex bound");
  GraphBuilder b;
  Vertex base = b.append(indicate(directed_cycle(lp), ind), "");
  Vertex fo = b.append(f, "F.");
  b.add_path(base, fo + recipe.u, recipe.path_length, "link.");
  b.set_label(fo + recipe.u, "u");
  return b.build();
}

/// Sum of H_p over p in A, plus G1.
inline Graph build_HA(const OddSet& a, const GadgetRecipe& recipe, const Graph& f, const PointedGraph& ind,
                      const Graph& g1) {
  if (a.empty()) throw InvalidParameter("H_A needs a nonempty odd set");
  std::vector<Graph> parts;
  for (const auto& p : a) {
    if (p > kMaxGadgetVertices) throw PreconditionViolation("odd set member " + p.str() + " is too large");
    parts.push_back(build_Hp(p.convert_to<std::size_t>(), recipe, f, ind));
  }
  parts.push_back(g1);
  return disjoint_union(std::span<const Graph>(parts));
}

/// Everything build_HA needs for a given interval.
struct HAPipeline {
  Indicator indicator;
  NamedGraph f;
  GadgetRecipe recipe;
  Graph g1;
  Graph g2;
};

/// Smallest odd l >= max(5, |V(G2)|).
inline std::size_t choose_l(const Graph& g2) {
  std::size_t l = std::max<std::size_t>(5, g2.vertex_count());
  return l % 2 ? l : l + 1;
}

// ---------------------------------------------------------------------------
// Incomparable pair
// ---------------------------------------------------------------------------

/// Odd-girth-5 circular cliques and Grotzsch first, then Mycielskians of
/// longer odd cycles.
inline std::vector<NamedGraph> default_pair_stream() {
  return {
      {"grotzsch", grotzsch()},
      {"circular_clique(8,3)", circular_clique(8, 3)},
      {"circular_clique(11,4)", circular_clique(11, 4)},
      {"generalized_mycielski(C5,2)", generalized_mycielski(cycle(5), 2)},
      {"generalized_mycielski(C7,1)", generalized_mycielski(cycle(7), 1)},
      {"circular_clique(13,5)", circular_clique(13, 5)},
      {"circular_clique(14,5)", circular_clique(14, 5)},
      {"generalized_mycielski(C7,2)", generalized_mycielski(cycle(7), 2)},
      {"generalized_mycielski(C7,3)", generalized_mycielski(cycle(7), 3)},
      {"iterated_mycielski(C5,1,2)", iterated_mycielski(cycle(5), 1, 2)},
      {"iterated_mycielski(C7,2,2)", iterated_mycielski(cycle(7), 2, 2)},
  };
}

struct IncomparablePair {
  Graph h1, h2;
  std::string h_name, h_prime_name;
  std::size_t join_length = 0;  // 0 when the parts were left disjoint
};

namespace detail {

/// (G2 x H) + G1, optionally joined into one component by a path between the
/// two parts' vertex 0.
inline Graph pair_graph(const Graph& g2, const Graph& h, const Graph& g1, std::size_t join) {
  GraphBuilder b;
  Vertex p = b.append(tensor_product(g2, h), "P.");
  Vertex q = b.append(g1, "G1.");
  if (join) b.add_path(p, q, join, "join.");
  return b.build();
}

inline std::size_t join_length(const Graph& g1, const Graph& g2) {
  std::size_t len = 1;
  for (const Graph* g : {&g1, &g2})
    if (g->vertex_count() && is_connected(*g) && odd_girth(*g)) len = std::max(len, path_threshold(*g));
  return len;
}

inline void require_pair_preconditions(const Graph& g1, const Graph& g2, const SolverBudget& budget) {
  if (is_gap(g1, g2)) throw GapError("(G1, G2) is the gap (K1, K2)");
  require_strictly_below(g1, g2, budget);
  if (!odd_girth(g2)) throw PreconditionViolation("G2 must be non-bipartite");
  if (!is_connected(g2)) throw PreconditionViolation("G2 must be connected");
}

}  // namespace detail

/// Searches pairs (H, H') from the stream (ordered by the later index, then
/// the earlier) until H1 = (G2 x H) + G1 and H2 = (G2 x H') + G1 pass all
/// six relations: G1 < H1 < G2, G1 < H2 < G2, H1 -/-> H2, H2 -/-> H1.
inline VerifiedConstruction<IncomparablePair> incomparable_pair(const Graph& g1, const Graph& g2,
                                                                const std::vector<NamedGraph>& candidates,
                                                                const SolverBudget& budget = {},
                                                                bool connected = true) {
  detail::require_pair_preconditions(g1, g2, budget);
  const std::size_t join = connected ? detail::join_length(g1, g2) : 0;
  VerifiedConstruction<IncomparablePair> out;
  for (std::size_t j = 1; j < candidates.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Graph h1 = detail::pair_graph(g2, candidates[i].graph, g1, join);
      Graph h2 = detail::pair_graph(g2, candidates[j].graph, g1, join);
      std::vector<Check> checks;
      auto run = [&](Check c) {
        checks.push_back(std::move(c));
        return checks.back().passed;
      };
      // cheap refutations first
      bool ok = run(detail::hom_check("H1_not_to_H2", h1, h2, false, budget)) &&
                run(detail::hom_check("H2_not_to_H1", h2, h1, false, budget)) &&
                run(detail::hom_check("H1_not_to_G1", h1, g1, false, budget)) &&
                run(detail::hom_check("H2_not_to_G1", h2, g1, false, budget)) &&
                run(detail::hom_check("G2_not_to_H1", g2, h1, false, budget)) &&
                run(detail::hom_check("G2_not_to_H2", g2, h2, false, budget)) &&
                run(detail::hom_check("G1_to_H1", g1, h1, true, budget)) &&
                run(detail::hom_check("G1_to_H2", g1, h2, true, budget)) &&
                run(detail::hom_check("H1_to_G2", h1, g2, true, budget)) &&
                run(detail::hom_check("H2_to_G2", h2, g2, true, budget));
      if (!ok) {
        out.notes.push_back("(" + candidates[i].name + ", " + candidates[j].name + "): rejected by '" +
                            checks.back().name + "' (" + checks.back().evidence + ")");
        continue;
      }
      out.value = {std::move(h1), std::move(h2), candidates[i].name, candidates[j].name, join};
      out.checks = std::move(checks);
      return out;
    }
  throw NotFound("incomparable pair search exhausted its candidate stream");
}

inline VerifiedConstruction<IncomparablePair> incomparable_pair(const Graph& g1, const Graph& g2,
                                                                const SolverBudget& budget = {}) {
  return incomparable_pair(g1, g2, default_pair_stream(), budget);
}

// ---------------------------------------------------------------------------
// Interval gadget
// ---------------------------------------------------------------------------

/// H1, H2 joined by a path P of length 2l (s1 to t1) and a path P' of
/// length 2l+1 (s2 to t2); a and b are the vertices at distance l from the
/// H1 end of P and P'.
struct IntervalGadget {
  PointedGraph pointed;
  Graph h1, h2;
  std::size_t l = 0;
  Vertex s1 = 0, t1 = 0, s2 = 0, t2 = 0;  // attachments, in H1 / H2 numbering
};

inline PointedGraph interval_gadget_graph(const Graph& h1, const Graph& h2, std::size_t l, Vertex s1, Vertex t1,
                                          Vertex s2, Vertex t2) {
  detail::check_vertex(h1.vertex_count(), s1);
  detail::check_vertex(h1.vertex_count(), s2);
  detail::check_vertex(h2.vertex_count(), t1);
  detail::check_vertex(h2.vertex_count(), t2);
  GraphBuilder b;
  Vertex o1 = b.append(h1, "H1.");
  Vertex o2 = b.append(h2, "H2.");
  auto p = b.add_path(o1 + s1, o2 + t1, 2 * l, "P.");
  auto q = b.add_path(o1 + s2, o2 + t2, 2 * l + 1, "Q.");
  b.set_label(p[l], "a");
  b.set_label(q[l], "b");
  return {b.build(), p[l], q[l]};
}

namespace detail {

/// Attachment choices: the all-zero one first, then (0, 0, s2, t2).
inline std::vector<std::array<Vertex, 4>> attachment_candidates(const Graph& h1, const Graph& h2) {
  std::vector<std::array<Vertex, 4>> out{{0, 0, 0, 0}};
  for (Vertex s2 = 0; s2 < h1.vertex_count(); ++s2)
    for (Vertex t2 = 0; t2 < h2.vertex_count(); ++t2)
      if (s2 || t2) out.push_back({0, 0, s2, t2});
  return out;
}

}  // namespace detail

/// The gadget for Phi. Mandatory checks: a homomorphism to G2 identifying a
/// and b, and rigidity (so homomorphisms between substituted graphs match
/// those between the digraphs one for one). Attachment vertices are searched
/// until both hold.
inline VerifiedConstruction<IntervalGadget> build_interval_gadget(const Graph& h1, const Graph& h2, const Graph& g2,
                                                                  std::size_t l, const SolverBudget& budget = {}) {
  for (const Graph* h : {&h1, &h2})
    if (h->vertex_count() == 0 || !is_connected(*h)) throw PreconditionViolation("H1 and H2 must be connected");
  if (!odd_girth(g2) || !is_connected(g2)) throw PreconditionViolation("G2 must be connected and non-bipartite");
  if (l <= std::max({h1.vertex_count(), h2.vertex_count(), g2.vertex_count()}))
    throw InvalidParameter("gadget length l must exceed |V(H1)|, |V(H2)| and |V(G2)|");
  if (l < path_threshold(g2)) throw InvalidParameter("gadget length l must be at least the path threshold of G2");
  if (!is_core(h1, budget) || !is_core(h2, budget)) throw PreconditionViolation("H1 and H2 must be cores");
  if (compare(h1, h2, budget).verdict != Verdict::incomparable)
    throw PreconditionViolation("H1 and H2 must be incomparable");

  VerifiedConstruction<IntervalGadget> out;
  Check last;
  for (auto [s1, t1, s2, t2] : detail::attachment_candidates(h1, h2)) {
    auto pg = interval_gadget_graph(h1, h2, l, s1, t1, s2, t2);
    std::vector<Check> checks;
    checks.push_back(detail::equal_ends_check("maps_to_G2_with_a_eq_b", pg, g2, budget));
    if (checks.back().passed) checks.push_back(detail::rigid_check("rigid", pg.graph, budget));
    last = checks.back();
    if (!last.passed) continue;
    out.value = {std::move(pg), h1, h2, l, s1, t1, s2, t2};
    out.checks = std::move(checks);
    if (s1 || t1 || s2 || t2)
      out.notes.push_back("attachments s1=" + std::to_string(s1) + " t1=" + std::to_string(t1) +
                          " s2=" + std::to_string(s2) + " t2=" + std::to_string(t2));
    return out;
  }
  throw ConstructionRejected(last.name, "no attachment choice passes (" + last.detail + ")");
}

// ---------------------------------------------------------------------------
// Density
// ---------------------------------------------------------------------------

/// Some H with G1 < H < G2, solver-verified on both sides.
inline VerifiedConstruction<NamedGraph> density_witness(const Graph& g1, const Graph& g2,
                                                        const SolverBudget& budget = {}) {
  if (detail::is_gap(g1, g2)) throw GapError("(G1, G2) is the gap (K1, K2)");
  detail::require_strictly_below(g1, g2, budget);
  VerifiedConstruction<NamedGraph> out;
  auto verify = [&](NamedGraph h) {
    out.value = std::move(h);
    const Graph& x = out.value.graph;
    out.checks.push_back(detail::hom_check("G1_to_H", g1, x, true, budget));
    out.checks.push_back(detail::hom_check("H_not_to_G1", x, g1, false, budget));
    out.checks.push_back(detail::hom_check("H_to_G2", x, g2, true, budget));
    out.checks.push_back(detail::hom_check("G2_not_to_H", g2, x, false, budget));
    for (const auto& c : out.checks) detail::require(c);
    return out;
  };
  // G1 < G2 and not the gap: if G1 is bipartite then G2 is not.
  if (!odd_girth(g1)) {
    if (g1.edge_count() == 0) return verify({"complete(2)", complete(2)});
    std::size_t m = *odd_girth(g2) + 2;
    out.notes.push_back("bipartite G1: an odd cycle longer than the odd girth of G2 sits strictly between");
    return verify({"cycle(" + std::to_string(m) + ")", cycle(m)});
  }
  Core c = core_of(g2, budget);
  if (!is_connected(c.graph))
    throw PreconditionViolation("density witness needs G2 to have a connected core");
  auto pair = incomparable_pair(g1, c.graph, budget);
  out.notes = pair.notes;
  return verify({"H1 = (G2 x " + pair.value.h_name + ") + G1", pair.value.h1});
}

}  // namespace homlab

#endif  // HOMLAB_GADGETS_HPP
