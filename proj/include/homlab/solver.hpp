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

#ifndef HOMLAB_SOLVER_HPP
#define HOMLAB_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homlab/bitset.hpp"
#include "homlab/error.hpp"
#include "homlab/graph.hpp"

namespace homlab {

/// Limits for one solver call. Both must be positive when set.
struct SolverBudget {
  double timeout_secs = 300.0;
  std::optional<std::uint64_t> node_limit;

  void validate() const {
    if (!(timeout_secs > 0)) throw InvalidParameter("solver timeout must be positive");
    if (node_limit && *node_limit == 0) throw InvalidParameter("solver node limit must be positive");
  }
};

/// Image of every source vertex.
using HomMapping = std::vector<Vertex>;

enum class SearchStatus { found, none, budget_exceeded };

/// Tri-state answer of a search. `none` is only reported after exhausting the search.
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  HomMapping mapping;
  std::uint64_t nodes = 0;
  double seconds = 0;

  bool found() const noexcept { return status == SearchStatus::found; }
  bool none() const noexcept { return status == SearchStatus::none; }
  bool exceeded() const noexcept { return status == SearchStatus::budget_exceeded; }
};

/// Extra constraints layered on top of edge preservation.
struct SearchOptions {
  bool injective = false;
  /// Source vertex -> required image.
  std::vector<std::pair<Vertex, Vertex>> pinned;
  /// Target vertices no source vertex may use.
  std::vector<Vertex> forbidden_targets;
  /// Source vertex -> the only images it may take.
  std::vector<std::pair<Vertex, std::vector<Vertex>>> allowed;
};

namespace detail {

/// Source and target structure flattened for the solver. Undirected graphs
/// have identical out and in adjacency.
struct CspInstance {
  bool directed = false;
  std::size_t source_n = 0;
  std::size_t target_n = 0;
  std::vector<std::vector<Vertex>> src_out, src_in;
  std::vector<std::size_t> src_degree;
  std::vector<std::uint32_t> src_odd_girth, tgt_odd_girth;
  std::vector<bool> tgt_has_out, tgt_has_in;
  std::vector<Word> tgt_out_rows, tgt_in_rows;
  std::vector<std::size_t> src_component;
  std::size_t component_count = 0;
};

inline CspInstance make_instance(const Graph& src, const Graph& tgt) {
  CspInstance c;
  c.source_n = src.vertex_count();
  c.target_n = tgt.vertex_count();
  const std::size_t w = words_for(c.target_n);
  c.src_out.resize(c.source_n);
  c.src_degree.resize(c.source_n);
  for (Vertex v = 0; v < c.source_n; ++v) {
    auto nb = src.neighbors(v);
    c.src_out[v].assign(nb.begin(), nb.end());
    c.src_degree[v] = nb.size();
  }
  c.src_odd_girth = src.local_odd_girth();
  c.tgt_odd_girth = tgt.local_odd_girth();
  c.tgt_out_rows.assign(c.target_n * w, 0);
  c.tgt_has_out.resize(c.target_n);
  for (Vertex v = 0; v < c.target_n; ++v) {
    std::span<Word> row(c.tgt_out_rows.data() + v * w, w);
    for (Vertex u : tgt.neighbors(v)) set(row, u);
    c.tgt_has_out[v] = tgt.degree(v) > 0;
  }
  c.tgt_has_in = c.tgt_has_out;
  c.src_component = component_ids(src, &c.component_count);
  return c;
}

inline CspInstance make_instance(const Digraph& src, const Digraph& tgt) {
  CspInstance c;
  c.directed = true;
  c.source_n = src.vertex_count();
  c.target_n = tgt.vertex_count();
  const std::size_t w = words_for(c.target_n);
  c.src_out.resize(c.source_n);
  c.src_in.resize(c.source_n);
  c.src_degree.resize(c.source_n);
  for (Vertex v = 0; v < c.source_n; ++v) {
    auto o = src.out_neighbors(v);
    auto i = src.in_neighbors(v);
    c.src_out[v].assign(o.begin(), o.end());
    c.src_in[v].assign(i.begin(), i.end());
    c.src_degree[v] = o.size() + i.size();
  }
  c.tgt_out_rows.assign(c.target_n * w, 0);
  c.tgt_in_rows.assign(c.target_n * w, 0);
  c.tgt_has_out.resize(c.target_n);
  c.tgt_has_in.resize(c.target_n);
  for (Vertex v = 0; v < c.target_n; ++v) {
    std::span<Word> orow(c.tgt_out_rows.data() + v * w, w);
    std::span<Word> irow(c.tgt_in_rows.data() + v * w, w);
    for (Vertex u : tgt.out_neighbors(v)) set(orow, u);
    for (Vertex u : tgt.in_neighbors(v)) set(irow, u);
    c.tgt_has_out[v] = !tgt.out_neighbors(v).empty();
    c.tgt_has_in[v] = !tgt.in_neighbors(v).empty();
  }
  c.src_component = component_ids(src, &c.component_count);
  return c;
}

/// Backtracking search with arc consistency on the edge constraints.
///
/// Domains live in one flat word array; changes are undone through a trail
/// of saved domains, one save per variable per search node.
class HomSolver {
 public:
  HomSolver(const CspInstance& inst, const SolverBudget& budget, const SearchOptions& opts)
      : inst_(inst),
        budget_(budget),
        opts_(opts),
        n_(inst.source_n),
        w_(words_for(inst.target_n)),
        doms_(n_ * w_, 0),
        sizes_(n_, 0),
        stamp_(n_, 0),
        queued_(n_, 0),
        support_(w_),
        need_(w_),
        start_(std::chrono::steady_clock::now()) {
    budget_.validate();
  }

  /// Fills initial domains and runs root propagation. False means no solution.
  bool initialise() {
    std::vector<bool> forbidden(inst_.target_n, false);
    for (Vertex t : opts_.forbidden_targets) forbidden.at(t) = true;
    for (Vertex x = 0; x < n_; ++x) {
      auto d = dom(x);
      const bool needs_out = !inst_.src_out[x].empty();
      const bool needs_in = inst_.directed ? !inst_.src_in[x].empty() : needs_out;
      for (Vertex v = 0; v < inst_.target_n; ++v) {
        if (forbidden[v]) continue;
        if (needs_out && !inst_.tgt_has_out[v]) continue;
        if (needs_in && !inst_.tgt_has_in[v]) continue;
        // An odd closed walk of length k through x maps to one through v.
        if (!inst_.directed && inst_.tgt_odd_girth[v] > inst_.src_odd_girth[x]) continue;
        set(d, v);
      }
    }
    for (auto [x, v] : opts_.pinned) {
      check_vertex(n_, x);
      check_vertex(inst_.target_n, v);
      auto d = dom(x);
      bool ok = test(d, v);
      for (auto& word : d) word = 0;
      if (ok) set(d, v);
    }
    for (const auto& [x, vs] : opts_.allowed) {
      check_vertex(n_, x);
      std::vector<Word> keep(w_, 0);
      for (Vertex v : vs) {
        check_vertex(inst_.target_n, v);
        set(std::span<Word>(keep), v);
      }
      auto d = dom(x);
      for (std::size_t i = 0; i < w_; ++i) d[i] &= keep[i];
    }
    for (Vertex x = 0; x < n_; ++x) {
      sizes_[x] = static_cast<std::uint32_t>(popcount(dom(x)));
      if (sizes_[x] == 0) return false;
    }
    for (Vertex x = 0; x < n_; ++x) enqueue(x);
    bool ok = true;
    try {
      if (opts_.injective)
        for (Vertex x = 0; x < n_ && ok; ++x)
          if (sizes_[x] == 1 && !enforce_injective(x)) ok = false;
      ok = ok && propagate();
    } catch (const BudgetSignal&) {
      throw BudgetExceeded("solver budget exhausted during root propagation");
    }
    trail_.clear();
    saved_.clear();
    return ok;
  }

  /// Searches for a mapping of the given component; on success the
  /// component's domains are left as singletons.
  /// Runs are cut off after a growing number of nodes and restarted from
  /// the root; the conflict weights learned so far carry over.
  SearchStatus find(std::size_t component) {
    component_vars(component);
    const auto root = mark();
    for (std::uint64_t run = 1;; ++run) {
      run_cap_ = run < 40 ? nodes_ + (std::uint64_t{100} << (run / 2)) : 0;
      try {
        return dfs_find() ? SearchStatus::found : SearchStatus::none;
      } catch (const BudgetSignal&) {
        return SearchStatus::budget_exceeded;
      } catch (const RestartSignal&) {
        restore(root);
      }
    }
  }

  /// Counts all mappings of the given component, stopping early at `limit`.
  std::optional<std::uint64_t> count(std::size_t component, std::uint64_t limit) {
    component_vars(component);
    std::uint64_t total = 0;
    try {
      dfs_count(total, limit);
    } catch (const BudgetSignal&) {
      return std::nullopt;
    }
    return total;
  }

  /// Calls visit(*this) on every mapping of the component until it returns
  /// false. Returns false if the budget ran out.
  template <typename Visit>
  bool enumerate(std::size_t component, Visit&& visit) {
    component_vars(component);
    try {
      dfs_enumerate(visit);
    } catch (const BudgetSignal&) {
      return false;
    }
    return true;
  }

  Vertex value_of(Vertex x) const {
    return static_cast<Vertex>(find_next(std::span<const Word>(doms_.data() + x * w_, w_), 0));
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  struct BudgetSignal {};
  struct RestartSignal {};

  std::span<Word> dom(Vertex x) { return {doms_.data() + x * w_, w_}; }
  std::span<const Word> out_row(Vertex v) const { return {inst_.tgt_out_rows.data() + v * w_, w_}; }
  std::span<const Word> in_row(Vertex v) const {
    return inst_.directed ? std::span<const Word>{inst_.tgt_in_rows.data() + v * w_, w_} : out_row(v);
  }

  void component_vars(std::size_t component) {
    vars_.clear();
    for (Vertex x = 0; x < n_; ++x)
      if (inst_.src_component[x] == component) vars_.push_back(x);
  }

  void check_budget() {
    if (budget_.node_limit && nodes_ > *budget_.node_limit) throw BudgetSignal{};
    if ((++ticks_ & 255) == 0 && elapsed() > budget_.timeout_secs) throw BudgetSignal{};
  }

  void enqueue(Vertex x) {
    if (!queued_[x]) {
      queued_[x] = 1;
      queue_.push_back(x);
    }
  }

  void save(Vertex x) {
    if (stamp_[x] == epoch_) return;
    stamp_[x] = epoch_;
    trail_.push_back({x, sizes_[x]});
    auto d = dom(x);
    saved_.insert(saved_.end(), d.begin(), d.end());
  }

  std::pair<std::size_t, std::size_t> mark() const { return {trail_.size(), saved_.size()}; }

  void restore(std::pair<std::size_t, std::size_t> m) {
    while (trail_.size() > m.first) {
      auto [x, size] = trail_.back();
      trail_.pop_back();
      std::copy(saved_.end() - static_cast<std::ptrdiff_t>(w_), saved_.end(), dom(x).begin());
      saved_.resize(saved_.size() - w_);
      sizes_[x] = size;
    }
    for (Vertex x : queue_) queued_[x] = 0;
    queue_.clear();
  }

  /// D(y) &= support for every y in `targets`; false on a wipe-out.
  bool narrow(const std::vector<Vertex>& targets) {
    for (Vertex y : targets) {
      auto d = dom(y);
      bool changes = false;
      for (std::size_t i = 0; i < w_; ++i)
        if (d[i] & ~support_[i]) {
          changes = true;
          break;
        }
      if (!changes) continue;
      save(y);
      for (std::size_t i = 0; i < w_; ++i) d[i] &= support_[i];
      sizes_[y] = static_cast<std::uint32_t>(popcount(d));
      if (sizes_[y] == 0) return false;
      if (opts_.injective && sizes_[y] == 1 && !enforce_injective(y)) return false;
      enqueue(y);
    }
    return true;
  }

  /// support_ = union of rows over D(x), stopping once it covers need_.
  void build_support(Vertex x, const std::vector<Vertex>& targets, bool use_out) {
    std::fill(need_.begin(), need_.end(), 0);
    for (Vertex y : targets) {
      auto d = dom(y);
      for (std::size_t i = 0; i < w_; ++i) need_[i] |= d[i];
    }
    std::fill(support_.begin(), support_.end(), 0);
    auto dx = dom(x);
    std::size_t seen = 0;
    for (std::size_t wi = 0; wi < w_; ++wi) {
      Word word = dx[wi];
      while (word) {
        auto v = static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
        auto row = use_out ? out_row(v) : in_row(v);
        for (std::size_t i = 0; i < w_; ++i) support_[i] |= row[i];
        if ((++seen & 7) == 0 && covers()) return;
      }
    }
  }

  bool covers() const {
    for (std::size_t i = 0; i < w_; ++i)
      if (need_[i] & ~support_[i]) return false;
    return true;
  }

  bool propagate() {
    std::size_t head = 0;
    while (head < queue_.size()) {
      Vertex x = queue_[head++];
      queued_[x] = 0;
      check_budget();
      if (!inst_.src_out[x].empty()) {
        build_support(x, inst_.src_out[x], true);
        if (!narrow(inst_.src_out[x])) return blame(x), fail_queue(head);
      }
      if (inst_.directed && !inst_.src_in[x].empty()) {
        build_support(x, inst_.src_in[x], false);
        if (!narrow(inst_.src_in[x])) return blame(x), fail_queue(head);
      }
    }
    queue_.clear();
    return true;
  }

  bool fail_queue(std::size_t) {  // NOLINT
    for (Vertex x : queue_) queued_[x] = 0;
    queue_.clear();
    return false;
  }

  /// Removes the single value of x from every other domain.
  bool enforce_injective(Vertex x) {
    Vertex v = value_of(x);
    for (Vertex y = 0; y < n_; ++y) {
      if (y == x) continue;
      auto d = dom(y);
      if (!test(d, v)) continue;
      save(y);
      reset(d, v);
      if (--sizes_[y] == 0) return false;
      enqueue(y);
      if (sizes_[y] == 1 && !enforce_injective(y)) return false;
    }
    return true;
  }

  /// A wipe-out while propagating from x counts against x and its neighbours.
  void blame(Vertex x) {
    ++weight_[x];
    for (Vertex y : inst_.src_out[x]) ++weight_[y];
    if (inst_.directed)
      for (Vertex y : inst_.src_in[x]) ++weight_[y];
  }

  /// Smallest domain per conflict weight, ties by higher degree then lower
  /// index; n_ if none. Vertices of degree <= 2 wait until everything else
  /// is fixed: what is left then is a union of paths, which arc consistency
  /// solves outright, and branching along long paths first thrashes badly.
  Vertex choose() const {
    Vertex best = static_cast<Vertex>(n_);
    auto chain = [this](Vertex x) { return inst_.src_degree[x] <= 2; };
    auto better = [this](Vertex x, Vertex b) {
      auto lhs = std::uint64_t{sizes_[x]} * weight_[b], rhs = std::uint64_t{sizes_[b]} * weight_[x];
      if (lhs != rhs) return lhs < rhs;
      return inst_.src_degree[x] > inst_.src_degree[b];
    };
    for (Vertex x : vars_) {
      if (sizes_[x] <= 1) continue;
      if (best == n_ || chain(best) > chain(x) || (chain(best) == chain(x) && better(x, best))) best = x;
    }
    return best;
  }

  /// Assigns x := v and propagates; the caller restores on failure.
  bool assign(Vertex x, Vertex v) {
    ++nodes_;
    check_budget();
    ++epoch_;
    save(x);
    auto d = dom(x);
    std::fill(d.begin(), d.end(), 0);
    set(d, v);
    sizes_[x] = 1;
    if (opts_.injective && !enforce_injective(x)) return false;
    enqueue(x);
    return propagate();
  }

  std::vector<Vertex> values(Vertex x) {
    std::vector<Vertex> out;
    out.reserve(sizes_[x]);
    for_each_bit(std::span<const Word>(dom(x)), [&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
    return out;
  }

  bool dfs_find() {
    if (run_cap_ && nodes_ > run_cap_) throw RestartSignal{};
    Vertex x = choose();
    if (x == n_) return true;
    for (Vertex v : values(x)) {
      auto m = mark();
      if (assign(x, v) && dfs_find()) return true;
      restore(m);
    }
    return false;
  }

  void dfs_count(std::uint64_t& total, std::uint64_t limit) {
    Vertex x = choose();
    if (x == n_) {
      ++total;
      return;
    }
    for (Vertex v : values(x)) {
      if (total >= limit) return;
      auto m = mark();
      if (assign(x, v)) dfs_count(total, limit);
      restore(m);
    }
  }

  template <typename Visit>
  bool dfs_enumerate(Visit& visit) {
    Vertex x = choose();
    if (x == n_) return visit(static_cast<const HomSolver&>(*this));
    for (Vertex v : values(x)) {
      auto m = mark();
      bool go_on = !assign(x, v) || dfs_enumerate(visit);
      restore(m);
      if (!go_on) return false;
    }
    return true;
  }

  const CspInstance& inst_;
  SolverBudget budget_;
  const SearchOptions& opts_;
  std::size_t n_;
  std::size_t w_;
  std::vector<Word> doms_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 1;
  std::vector<char> queued_;
  std::vector<Vertex> queue_;
  std::vector<std::pair<Vertex, std::uint32_t>> trail_;
  std::vector<Word> saved_;
  std::vector<Word> support_;
  std::vector<Word> need_;
  std::vector<Vertex> vars_;
  std::uint64_t nodes_ = 0;
  std::uint64_t ticks_ = 0;
  std::vector<std::uint64_t> weight_ = std::vector<std::uint64_t>(n_, 1);
  std::uint64_t run_cap_ = 0;
  std::chrono::steady_clock::time_point start_;
};

template <typename G>
SearchResult search(const G& source, const G& target, const SolverBudget& budget, const SearchOptions& opts) {
  CspInstance inst = make_instance(source, target);
  HomSolver solver(inst, budget, opts);
  SearchResult r;
  auto finish = [&](SearchStatus s) {
    r.status = s;
    r.nodes = solver.nodes();
    r.seconds = solver.elapsed();
    return r;
  };
  bool ok;
  try {
    ok = solver.initialise();
  } catch (const BudgetExceeded&) {
    return finish(SearchStatus::budget_exceeded);
  }
  if (!ok) return finish(SearchStatus::none);
  // Components are independent unless injectivity couples them.
  if (opts.injective) {
    std::vector<std::size_t> all(inst.source_n, 0);
    std::swap(inst.src_component, all);
    inst.component_count = inst.source_n ? 1 : 0;
  }
  for (std::size_t c = 0; c < inst.component_count; ++c) {
    auto s = solver.find(c);
    if (s != SearchStatus::found) return finish(s);
  }
  r.mapping.resize(inst.source_n);
  for (Vertex x = 0; x < inst.source_n; ++x) r.mapping[x] = solver.value_of(x);
  return finish(SearchStatus::found);
}

template <typename G>
std::uint64_t count(const G& source, const G& target, const SolverBudget& budget, std::uint64_t limit,
                    const SearchOptions& opts = {}) {
  if (opts.injective) throw InvalidParameter("counting does not support injective mode");
  CspInstance inst = make_instance(source, target);
  HomSolver solver(inst, budget, opts);
  if (!solver.initialise()) return 0;
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < inst.component_count; ++c) {
    auto k = solver.count(c, limit);
    if (!k) throw BudgetExceeded("homomorphism count exceeded its budget");
    if (*k == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / *k)
      throw Error("homomorphism count does not fit in 64 bits");
    total *= *k;
    if (total >= limit) return limit;
  }
  return total;
}

/// Up to `limit` mappings, the whole source treated as one unit. nullopt if
/// the budget ran out first.
template <typename G>
std::optional<std::vector<HomMapping>> enumerate(const G& source, const G& target, const SolverBudget& budget,
                                                 std::size_t limit, const SearchOptions& opts = {}) {
  CspInstance inst = make_instance(source, target);
  std::fill(inst.src_component.begin(), inst.src_component.end(), 0);
  inst.component_count = inst.source_n ? 1 : 0;
  HomSolver solver(inst, budget, opts);
  std::vector<HomMapping> out;
  if (!solver.initialise()) return out;
  if (inst.source_n == 0) {
    out.emplace_back();
    return out;
  }
  bool done = solver.enumerate(0, [&](const HomSolver& s) {
    HomMapping f(inst.source_n);
    for (Vertex x = 0; x < inst.source_n; ++x) f[x] = s.value_of(x);
    out.push_back(std::move(f));
    return out.size() < limit;
  });
  if (!done) return std::nullopt;
  return out;
}

}  // namespace detail

/// Independent edge-preservation check of a candidate mapping.
inline bool is_homomorphism(const Graph& source, const Graph& target, const HomMapping& f) {
  if (f.size() != source.vertex_count()) return false;
  for (Vertex v : f)
    if (v >= target.vertex_count()) return false;
  for (auto [u, v] : source.edges())
    if (!target.has_edge(f[u], f[v])) return false;
  return true;
}

inline bool is_homomorphism(const Digraph& source, const Digraph& target, const HomMapping& f) {
  if (f.size() != source.vertex_count()) return false;
  for (Vertex v : f)
    if (v >= target.vertex_count()) return false;
  for (auto [u, v] : source.arcs())
    if (!target.has_arc(f[u], f[v])) return false;
  return true;
}

/// Decides G -> H. A `found` result carries a re-verified witness; `none`
/// means the search was exhausted; budget exhaustion is reported separately.
inline SearchResult hom_exists(const Graph& g, const Graph& h, const SolverBudget& budget = {},
                               const SearchOptions& opts = {}) {
  auto r = detail::search(g, h, budget, opts);
  if (r.found() && !is_homomorphism(g, h, r.mapping)) throw Error("solver produced an invalid witness");
  return r;
}

inline SearchResult hom_exists(const Digraph& g, const Digraph& h, const SolverBudget& budget = {},
                               const SearchOptions& opts = {}) {
  auto r = detail::search(g, h, budget, opts);
  if (r.found() && !is_homomorphism(g, h, r.mapping)) throw Error("solver produced an invalid witness");
  return r;
}

/// Exact number of homomorphisms G -> H, capped at `limit`.
/// Throws BudgetExceeded when the enumeration does not finish.
inline std::uint64_t count_homs(const Graph& g, const Graph& h, const SolverBudget& budget = {},
                                std::uint64_t limit = std::numeric_limits<std::uint64_t>::max(),
                                const SearchOptions& opts = {}) {
  return detail::count(g, h, budget, limit, opts);
}

inline std::uint64_t count_homs(const Digraph& g, const Digraph& h, const SolverBudget& budget = {},
                                std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) {
  return detail::count(g, h, budget, limit);
}

}  // namespace homlab

#endif  // HOMLAB_SOLVER_HPP
