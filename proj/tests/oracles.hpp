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

// Brute-force oracles used only by tests. None of these share code paths
// with the library's solver or BFS analyses.

#ifndef HOMLAB_TESTS_ORACLES_HPP
#define HOMLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab::oracle {

using Matrix = std::vector<std::vector<std::uint64_t>>;

inline Matrix adjacency(const Graph& g) {
  Matrix a(g.vertex_count(), std::vector<std::uint64_t>(g.vertex_count(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

/// Boolean matrix product.
inline Matrix bool_mul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix c(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = 1;
  return c;
}

/// Smallest odd k with a closed walk of length k (trace of A^k), up to max_len.
inline std::optional<std::size_t> odd_girth_by_traces(const Graph& g, std::size_t max_len) {
  if (g.vertex_count() == 0) return std::nullopt;
  Matrix a = adjacency(g);
  Matrix p = a;
  for (std::size_t k = 1; k <= max_len; ++k) {
    if (k % 2 == 1)
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i][i]) return k;
    p = bool_mul(p, a);
  }
  return std::nullopt;
}

/// Shortest simple cycle by exhaustive DFS over simple paths (tiny graphs).
inline std::optional<std::size_t> girth_by_cycle_scan(const Graph& g) {
  std::size_t best = 0;
  std::size_t n = g.vertex_count();
  std::vector<bool> on(n, false);
  std::function<void(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex v, std::size_t len) {
    if (best && len >= best) return;
    for (Vertex w : g.neighbors(v)) {
      if (w == start && len >= 2) {
        if (!best || len + 1 < best) best = len + 1;
      } else if (!on[w] && w > start) {
        on[w] = true;
        dfs(start, w, len + 1);
        on[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = true;
    dfs(s, s, 0);
    on[s] = false;
  }
  if (!best) return std::nullopt;
  return best;
}

/// Number of vertex maps G -> H preserving edges, by full enumeration.
inline std::uint64_t count_homs_brute(const Graph& g, const Graph& h) {
  std::size_t n = g.vertex_count(), m = h.vertex_count();
  std::vector<Vertex> f(n, 0);
  std::uint64_t count = 0;
  auto edges = g.edges();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (auto [u, v] : edges)
        if (!h.has_edge(f[u], f[v])) return;
      ++count;
      return;
    }
    for (Vertex t = 0; t < m; ++t) {
      f[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

inline std::uint64_t count_homs_brute(const Digraph& g, const Digraph& h) {
  std::size_t n = g.vertex_count(), m = h.vertex_count();
  std::vector<Vertex> f(n, 0);
  std::uint64_t count = 0;
  auto arcs = g.arcs();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (auto [u, v] : arcs)
        if (!h.has_arc(f[u], f[v])) return;
      ++count;
      return;
    }
    for (Vertex t = 0; t < m; ++t) {
      f[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

/// Every edge of g lands on an edge of h under f.
inline bool preserves_edges(const Graph& g, const Graph& h, const std::vector<Vertex>& f) {
  if (f.size() != g.vertex_count()) return false;
  for (Vertex t : f)
    if (t >= h.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(f[u], f[v])) return false;
  return true;
}

inline bool preserves_arcs(const Digraph& g, const Digraph& h, const std::vector<Vertex>& f) {
  if (f.size() != g.vertex_count()) return false;
  for (Vertex t : f)
    if (t >= h.vertex_count()) return false;
  for (auto [u, v] : g.arcs())
    if (!h.has_arc(f[u], f[v])) return false;
  return true;
}

/// Number of homomorphisms g -> h (up to `limit`) by backtracking in vertex
/// order, checking each new vertex against earlier neighbours only. `pins`
/// fixes images in advance. For sparse graphs of a few dozen vertices.
inline std::uint64_t count_homs_backtrack(const Graph& g, const Graph& h,
                                          const std::vector<std::pair<Vertex, Vertex>>& pins = {},
                                          std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
  const std::size_t n = g.vertex_count();
  std::vector<int> fixed(n, -1);
  for (auto [x, t] : pins) fixed[x] = static_cast<int>(t);
  std::vector<Vertex> f(n, 0);
  std::uint64_t count = 0;
  std::function<void(Vertex)> rec = [&](Vertex x) {
    if (count >= limit) return;
    if (x == n) {
      ++count;
      return;
    }
    for (Vertex t = 0; t < h.vertex_count(); ++t) {
      if (fixed[x] >= 0 && t != static_cast<Vertex>(fixed[x])) continue;
      bool ok = true;
      for (Vertex y : g.neighbors(x))
        if (y < x && !h.has_edge(f[y], t)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      f[x] = t;
      rec(x + 1);
    }
  };
  rec(0);
  return count;
}

/// Does a walk of exactly `len` edges lead from x to y? Explicit recursion.
inline bool walk_exists(const Graph& g, Vertex x, Vertex y, std::size_t len) {
  if (len == 0) return x == y;
  for (Vertex z : g.neighbors(x))
    if (walk_exists(g, z, y, len - 1)) return true;
  return false;
}

/// Least l such that every pair has walks of all lengths l..horizon.
inline std::size_t path_threshold_brute(const Graph& g, std::size_t horizon) {
  std::size_t n = g.vertex_count();
  std::size_t last_bad = 0;
  bool any_bad = false;
  for (std::size_t len = 0; len <= horizon; ++len)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y)
        if (!walk_exists(g, x, y, len)) {
          last_bad = len;
          any_bad = true;
        }
  return any_bad ? last_bad + 1 : 0;
}

/// One representative per isomorphism class of loopless digraphs on at most
/// max_n vertices, found by trying every relabelling.
inline std::vector<Digraph> digraph_classes(std::size_t max_n) {
  std::vector<Digraph> out;
  std::set<std::pair<std::size_t, std::vector<Edge>>> seen;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> arcs;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) arcs.push_back(slots[i]);
      std::vector<Vertex> perm(n);
      for (Vertex i = 0; i < n; ++i) perm[i] = i;
      std::vector<Edge> best;
      bool first = true;
      do {
        std::vector<Edge> image;
        for (auto [u, v] : arcs) image.emplace_back(perm[u], perm[v]);
        std::sort(image.begin(), image.end());
        if (first || image < best) best = image;
        first = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.emplace(n, best).second) out.emplace_back(n, arcs);
    }
  }
  return out;
}

/// No pair of opposite arcs.
inline bool is_oriented(const Digraph& d) {
  for (auto [u, v] : d.arcs())
    if (d.has_arc(v, u)) return false;
  return true;
}

inline std::size_t isolated_vertices(const Digraph& d) {
  std::size_t k = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (d.out_neighbors(v).empty() && d.in_neighbors(v).empty()) ++k;
  return k;
}

/// d with its isolated vertices removed.
inline Digraph without_isolated(const Digraph& d) {
  std::vector<Vertex> index(d.vertex_count(), 0);
  std::size_t n = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (!d.out_neighbors(v).empty() || !d.in_neighbors(v).empty()) index[v] = static_cast<Vertex>(n++);
  std::vector<Edge> arcs;
  for (auto [u, v] : d.arcs()) arcs.emplace_back(index[u], index[v]);
  return Digraph(n, arcs);
}

/// Uniform random graph G(n, p).
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace homlab::oracle

#endif  // HOMLAB_TESTS_ORACLES_HPP
