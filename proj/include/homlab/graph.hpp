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

#ifndef HOMLAB_GRAPH_HPP
#define HOMLAB_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homlab/error.hpp"

namespace homlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

namespace detail {

inline constexpr std::uint32_t kNoCycle = std::numeric_limits<std::uint32_t>::max();

struct GraphCache {
  std::once_flag once;
  std::vector<std::uint32_t> local_odd_girth;
};

inline void check_vertex(std::size_t n, std::size_t v) {
  if (v >= n)
    throw InvalidParameter("vertex " + std::to_string(v) + " out of range for " + std::to_string(n) +
                           " vertices");
}

inline std::vector<std::vector<Vertex>> sorted_unique_lists(std::vector<std::vector<Vertex>> lists) {
  for (auto& l : lists) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return lists;
}

}  // namespace detail

/// Finite simple undirected loopless graph on vertices 0..n-1.
///
/// Immutable once built. Each vertex may carry a provenance label (empty by
/// default) that constructions use to mark copies, gadget endpoints and so on.
class Graph {
 public:
  Graph() : Graph(0, {}) {}

  Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (auto [u, v] : edges) {
      detail::check_vertex(n, u);
      detail::check_vertex(n, v);
      if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    finish();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::string_view label(Vertex v) const {
    return labels_.empty() ? std::string_view{} : std::string_view{labels_[v]};
  }
  bool has_labels() const noexcept { return !labels_.empty(); }

  /// Same structure with a replaced label table (empty strings are allowed).
  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != adj_.size())
      throw InvalidParameter("label table size does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    if (std::all_of(g.labels_.begin(), g.labels_.end(), [](const auto& s) { return s.empty(); }))
      g.labels_.clear();
    return g;
  }

  /// Length of the shortest odd closed walk through each vertex, kNoCycle when none.
  const std::vector<std::uint32_t>& local_odd_girth() const;

  /// Structural equality (labels are ignored).
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void finish() {
    adj_ = detail::sorted_unique_lists(std::move(adj_));
    edge_count_ = 0;
    for (const auto& l : adj_) edge_count_ += l.size();
    edge_count_ /= 2;
    cache_ = std::make_shared<detail::GraphCache>();
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
  std::shared_ptr<detail::GraphCache> cache_;
};

/// Finite directed graph without loops; arcs are ordered pairs.
class Digraph {
 public:
  Digraph() : Digraph(0, {}) {}

  Digraph(std::size_t n, std::span<const Edge> arcs) : out_(n), in_(n) {
    for (auto [u, v] : arcs) {
      detail::check_vertex(n, u);
      detail::check_vertex(n, v);
      if (u == v) throw InvalidParameter("loop at vertex " + std::to_string(u));
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    out_ = detail::sorted_unique_lists(std::move(out_));
    in_ = detail::sorted_unique_lists(std::move(in_));
    for (const auto& l : out_) arc_count_ += l.size();
  }

  Digraph(std::size_t n, std::initializer_list<Edge> arcs)
      : Digraph(n, std::span<const Edge>(arcs.begin(), arcs.size())) {}

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }

  bool has_arc(Vertex u, Vertex v) const {
    if (u >= out_.size() || v >= out_.size()) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  /// Arcs in lexicographic order.
  std::vector<Edge> arcs() const {
    std::vector<Edge> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < out_.size(); ++u)
      for (Vertex v : out_[u]) out.emplace_back(u, v);
    return out;
  }

  std::string_view label(Vertex v) const {
    return labels_.empty() ? std::string_view{} : std::string_view{labels_[v]};
  }
  bool has_labels() const noexcept { return !labels_.empty(); }

  Digraph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != out_.size())
      throw InvalidParameter("label table size does not match vertex count");
    Digraph g = *this;
    g.labels_ = std::move(labels);
    if (std::all_of(g.labels_.begin(), g.labels_.end(), [](const auto& s) { return s.empty(); }))
      g.labels_.clear();
    return g;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
  std::vector<std::string> labels_;
};

/// Incremental construction of labelled graphs.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t n) : labels_(n) {}

  Vertex add_vertex(std::string label = {}) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size() - 1);
  }

  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  /// Adds a path of `length` edges from u to v; returns its vertices u..v.
  std::vector<Vertex> add_path(Vertex u, Vertex v, std::size_t length, const std::string& label_prefix = {}) {
    if (length == 0) throw InvalidParameter("path length must be positive");
    std::vector<Vertex> path{u};
    for (std::size_t i = 1; i < length; ++i)
      path.push_back(add_vertex(label_prefix.empty() ? std::string{} : label_prefix + std::to_string(i)));
    path.push_back(v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);
    return path;
  }

  /// Copies g into the builder; returns the offset of its vertex 0.
  Vertex append(const Graph& g, const std::string& label_prefix = {}) {
    auto offset = static_cast<Vertex>(labels_.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::string l{g.label(v)};
      add_vertex(label_prefix.empty() ? l : label_prefix + (l.empty() ? std::to_string(v) : l));
    }
    for (auto [u, v] : g.edges()) add_edge(offset + u, offset + v);
    return offset;
  }

  void set_label(Vertex v, std::string label) { labels_.at(v) = std::move(label); }
  std::size_t vertex_count() const noexcept { return labels_.size(); }

  Graph build() const { return Graph(labels_.size(), edges_).with_labels(labels_); }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Structural analysis
// ---------------------------------------------------------------------------

/// Connectivity, bipartiteness, girth and odd girth. nullopt stands for infinity.
struct StructuralProfile {
  bool connected = true;
  bool bipartite = true;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> odd_girth;

  bool operator==(const StructuralProfile&) const = default;
};

/// Connected component index of every vertex; components numbered by least vertex.
inline std::vector<std::size_t> component_ids(const Graph& g, std::size_t* count = nullptr) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.vertex_count(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const Graph& g) {
  std::size_t count = 0;
  component_ids(g, &count);
  return count <= 1;
}

namespace detail {

inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex root) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kNoCycle);
  std::queue<Vertex> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == kNoCycle) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace detail

/// Shortest odd closed walk through each vertex, via BFS in the bipartite double cover.
inline std::vector<std::uint32_t> compute_local_odd_girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> out(n, detail::kNoCycle);
  std::vector<std::uint32_t> dist(2 * n);
  std::vector<Vertex> touched;
  std::vector<std::uint32_t> queue(2 * n);
  for (Vertex r = 0; r < n; ++r) {
    if (g.degree(r) == 0) continue;
    std::fill(dist.begin(), dist.end(), detail::kNoCycle);
    std::size_t head = 0, tail = 0;
    dist[2 * r] = 0;
    queue[tail++] = 2 * r;
    while (head < tail) {
      std::uint32_t node = queue[head++];
      Vertex v = node / 2;
      std::uint32_t side = node % 2;
      if (v == r && side == 1) break;
      for (Vertex w : g.neighbors(v)) {
        std::uint32_t nxt = 2 * w + (1 - side);
        if (dist[nxt] == detail::kNoCycle) {
          dist[nxt] = dist[node] + 1;
          queue[tail++] = nxt;
        }
      }
    }
    out[r] = dist[2 * r + 1];
  }
  return out;
}

inline const std::vector<std::uint32_t>& Graph::local_odd_girth() const {
  std::call_once(cache_->once, [this] { cache_->local_odd_girth = compute_local_odd_girth(*this); });
  return cache_->local_odd_girth;
}

/// Girth by BFS from every vertex; nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::size_t best = detail::kNoCycle;
  for (Vertex r = 0; r < g.vertex_count(); ++r) {
    std::vector<std::uint32_t> dist(g.vertex_count(), detail::kNoCycle);
    std::vector<Vertex> parent(g.vertex_count(), r);
    std::queue<Vertex> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == detail::kNoCycle) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (parent[v] != w) {
          best = std::min<std::size_t>(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == detail::kNoCycle) return std::nullopt;
  return best;
}

/// Odd girth; nullopt for bipartite graphs.
inline std::optional<std::size_t> odd_girth(const Graph& g) {
  const auto& local = g.local_odd_girth();
  auto best = local.empty() ? detail::kNoCycle : *std::min_element(local.begin(), local.end());
  if (best == detail::kNoCycle) return std::nullopt;
  return best;
}

inline StructuralProfile analyze(const Graph& g) {
  StructuralProfile p;
  p.connected = is_connected(g);
  p.odd_girth = odd_girth(g);
  p.bipartite = !p.odd_girth.has_value();
  p.girth = girth(g);
  return p;
}

/// Weak components of a digraph, numbered by least vertex.
inline std::vector<std::size_t> component_ids(const Digraph& g, std::size_t* count = nullptr) {
  std::vector<Edge> und;
  for (auto [u, v] : g.arcs()) und.emplace_back(u, v);
  return component_ids(Graph(g.vertex_count(), und), count);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Graph empty_graph(std::size_t n) { return Graph(n, {}); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Path with `length` edges on vertices 0..length.
inline Graph path(std::size_t length) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < length; ++i) e.emplace_back(i, i + 1);
  return Graph(length + 1, e);
}

/// Undirected cycle C_n.
inline Graph cycle(std::size_t length) {
  if (length < 3) throw InvalidParameter("cycle length must be at least 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < length; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % length));
  return Graph(length, e);
}

/// Directed cycle with arcs (i, i+1 mod n).
inline Digraph directed_cycle(std::size_t length) {
  if (length < 3) throw InvalidParameter("cycle length must be at least 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < length; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % length));
  return Digraph(length, e);
}

/// Generalized Mycielskian with `levels` shadow layers: (v,0)~(w,0) and
/// (v,i)~(w,i+1) for vw in E, plus an apex joined to every vertex of the last
/// layer. One level gives the ordinary Mycielskian.
inline Graph generalized_mycielski(const Graph& base, std::size_t levels) {
  if (levels < 1) throw InvalidParameter("generalized Mycielskian needs at least one level");
  const std::size_t n = base.vertex_count();
  auto id = [n](std::size_t layer, Vertex v) { return static_cast<Vertex>(layer * n + v); };
  std::vector<Edge> e;
  for (auto [u, v] : base.edges()) {
    e.emplace_back(id(0, u), id(0, v));
    for (std::size_t i = 0; i < levels; ++i) {
      e.emplace_back(id(i, u), id(i + 1, v));
      e.emplace_back(id(i, v), id(i + 1, u));
    }
  }
  const auto apex = static_cast<Vertex>((levels + 1) * n);
  for (Vertex v = 0; v < n; ++v) e.emplace_back(id(levels, v), apex);
  return Graph(apex + 1, e);
}

inline Graph iterated_mycielski(const Graph& base, std::size_t levels, std::size_t iterations) {
  Graph g = base;
  for (std::size_t i = 0; i < iterations; ++i) g = generalized_mycielski(g, levels);
  return g;
}

/// The Grötzsch graph: the Mycielskian of C5 (11 vertices, 20 edges).
inline Graph grotzsch() { return generalized_mycielski(cycle(5), 1); }

/// Every edge replaced by a path with `length` edges.
inline Graph subdivide(const Graph& g, std::size_t length) {
  GraphBuilder b(g.vertex_count());
  for (auto [u, v] : g.edges()) b.add_path(u, v, length);
  return b.build();
}

/// K_n with every edge replaced by a path of `length` edges.
inline Graph subdivided_complete(std::size_t n, std::size_t length) { return subdivide(complete(n), length); }

/// Circular clique K_{p/q}: i ~ j iff q <= |i - j| <= p - q. Needs p >= 2q.
inline Graph circular_clique(std::size_t p, std::size_t q) {
  if (q < 1 || p < 2 * q) throw InvalidParameter("circular clique K_{p/q} needs q >= 1 and p >= 2q");
  std::vector<Edge> e;
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = i + 1; j < p; ++j)
      if (j - i >= q && j - i <= p - q) e.emplace_back(i, j);
  return Graph(p, e);
}

/// Parameters for `generate`; each generator reads the fields it needs.
struct GeneratorParams {
  std::optional<std::size_t> n;
  std::optional<std::size_t> q;
  std::optional<std::size_t> length;
  std::optional<std::size_t> levels;
  std::optional<std::size_t> iterations;
  std::optional<Graph> base;
};

/// Named generator lookup: complete, path, cycle, grotzsch, generalized_mycielski,
/// iterated_mycielski, subdivided_complete, circular_clique.
inline Graph generate(std::string_view name, const GeneratorParams& p) {
  auto need = [&](const std::optional<std::size_t>& v, const char* field) {
    if (!v) throw InvalidParameter(std::string(name) + " requires parameter '" + field + "'");
    return *v;
  };
  auto need_base = [&]() -> const Graph& {
    if (!p.base) throw InvalidParameter(std::string(name) + " requires a base graph");
    return *p.base;
  };
  if (name == "complete") return complete(need(p.n, "n"));
  if (name == "path") return path(need(p.length, "length"));
  if (name == "cycle") return cycle(need(p.length, "length"));
  if (name == "grotzsch") return grotzsch();
  if (name == "generalized_mycielski") return generalized_mycielski(need_base(), need(p.levels, "levels"));
  if (name == "iterated_mycielski")
    return iterated_mycielski(need_base(), need(p.levels, "levels"), need(p.iterations, "iterations"));
  if (name == "subdivided_complete") return subdivided_complete(need(p.n, "n"), need(p.length, "length"));
  if (name == "circular_clique") return circular_clique(need(p.n, "n"), need(p.q, "q"));
  throw InvalidParameter("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Disjoint union plus the offset of every part's vertex 0.
struct DisjointUnion {
  Graph graph;
  std::vector<Vertex> offsets;
};

/// Parts are laid out in order; labels are kept and prefixed by "<part>:".
inline DisjointUnion disjoint_union_with_offsets(std::span<const Graph> parts) {
  GraphBuilder b;
  std::vector<Vertex> offsets;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto off = static_cast<Vertex>(b.vertex_count());
    offsets.push_back(off);
    for (Vertex v = 0; v < parts[i].vertex_count(); ++v) {
      auto l = parts[i].label(v);
      b.add_vertex(l.empty() ? std::string{} : std::to_string(i) + ":" + std::string(l));
    }
    for (auto [u, v] : parts[i].edges()) b.add_edge(off + u, off + v);
  }
  return {b.build(), std::move(offsets)};
}

inline Graph disjoint_union(std::span<const Graph> parts) { return disjoint_union_with_offsets(parts).graph; }

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

inline Digraph disjoint_union(std::span<const Digraph> parts) {
  std::vector<Edge> arcs;
  std::vector<std::string> labels;
  Vertex off = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v = 0; v < parts[i].vertex_count(); ++v) {
      auto l = parts[i].label(v);
      labels.push_back(l.empty() ? std::string{} : std::to_string(i) + ":" + std::string(l));
    }
    for (auto [u, v] : parts[i].arcs()) arcs.emplace_back(off + u, off + v);
    off += static_cast<Vertex>(parts[i].vertex_count());
  }
  return Digraph(off, arcs).with_labels(std::move(labels));
}

/// Direct (tensor) product; vertex (u, x) gets index u * |V(h)| + x.
inline Graph tensor_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.vertex_count();
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    for (auto [x, y] : h.edges()) {
      e.emplace_back(static_cast<Vertex>(u * nh + x), static_cast<Vertex>(v * nh + y));
      e.emplace_back(static_cast<Vertex>(u * nh + y), static_cast<Vertex>(v * nh + x));
    }
  return Graph(g.vertex_count() * nh, e);
}

/// Induced subgraph on `keep` (in the given order); labels follow their vertices.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.vertex_count(), detail::kNoCycle);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> e;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.emplace_back(g.label(keep[i]));
    for (Vertex w : g.neighbors(keep[i]))
      if (index[w] != detail::kNoCycle && index[w] > i) e.emplace_back(static_cast<Vertex>(i), index[w]);
  }
  return Graph(keep.size(), e).with_labels(std::move(labels));
}

/// Graph with b merged into a; vertices above b shift down by one.
/// Returns nullopt when a and b are adjacent (the quotient would have a loop).
inline std::optional<Graph> identify(const Graph& g, Vertex a, Vertex b) {
  detail::check_vertex(g.vertex_count(), a);
  detail::check_vertex(g.vertex_count(), b);
  if (a == b) return g;
  if (g.has_edge(a, b)) return std::nullopt;
  auto img = [&](Vertex v) -> Vertex {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(img(u), img(v));
  return Graph(g.vertex_count() - 1, e);
}

/// Underlying undirected graph of a digraph (antiparallel arcs collapse).
inline Graph underlying(const Digraph& d) {
  std::vector<Edge> e = d.arcs();
  return Graph(d.vertex_count(), e);
}

/// Brute-force canonical form for small graphs: the lexicographically least
/// upper-triangle adjacency string over all vertex permutations.
inline std::string canonical_form(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 9) throw InvalidParameter("canonical_form is limited to 9 vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace homlab

#endif  // HOMLAB_GRAPH_HPP
