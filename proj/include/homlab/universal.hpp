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

// Finite posets, the order on finite sets of odd integers, and the
// prime-product embedding of a finite poset into that order.

#ifndef HOMLAB_UNIVERSAL_HPP
#define HOMLAB_UNIVERSAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homlab/error.hpp"
#include "homlab/graph.hpp"

namespace homlab {

using BigInt = boost::multiprecision::cpp_int;

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of `pairs` (x <= y) and rejects
  /// it if antisymmetry fails or a name is unknown or repeated.
  FinitePoset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& pairs)
      : names_(std::move(elements)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!index_.emplace(names_[i], i).second) throw InvalidParameter("duplicate poset element '" + names_[i] + "'");
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (const auto& [x, y] : pairs) idx.emplace_back(index_of(x), index_of(y));
    init(idx);
  }

  /// Same, over elements "0".."n-1" and index pairs.
  FinitePoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    for (std::size_t i = 0; i < n; ++i) {
      names_.push_back(std::to_string(i));
      index_.emplace(names_.back(), i);
    }
    for (auto [x, y] : pairs)
      if (x >= n || y >= n) throw InvalidParameter("poset relation mentions an element out of range");
    init(pairs);
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y]; }
  const std::string& name(std::size_t x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::size_t index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InvalidParameter("unknown poset element '" + name + "'");
    return it->second;
  }

  /// Strict relations x < y, in index order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y)
        if (x != y && leq(x, y)) out.emplace_back(x, y);
    return out;
  }

 private:
  void init(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::size_t n = names_.size();
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
    for (auto [x, y] : pairs) leq_[x * n + y] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k * n + j]) leq_[i * n + j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq_[i * n + j] && leq_[j * n + i])
          throw InvalidParameter("relation is not antisymmetric: '" + names_[i] + "' and '" + names_[j] +
                                 "' are mutually below each other");
  }

  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<bool> leq_;
};

inline FinitePoset antichain(std::size_t n) { return FinitePoset(n, {}); }

inline FinitePoset chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return FinitePoset(n, p);
}

/// Every labelled poset on {0..n-1}; n <= 5 keeps this quick.
inline std::vector<FinitePoset> all_posets(std::size_t n) {
  if (n > 5) throw InvalidParameter("all_posets is limited to 5 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<FinitePoset> out;
  std::vector<char> r(n * n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::fill(r.begin(), r.end(), 0);
    for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) {
        r[slots[s].first * n + slots[s].second] = 1;
        rel.push_back(slots[s]);
      }
    // antisymmetric and already transitively closed
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r[i * n + j] && r[j * n + i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i * n + k] && r[k * n + j] && !r[i * n + j]) ok = false;
      }
    if (ok) out.emplace_back(n, rel);
  }
  return out;
}

/// Random poset: random DAG on a shuffled order, then closed.
inline FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, double density = 0.35) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) rel.emplace_back(perm[i], perm[j]);
  return FinitePoset(n, rel);
}

// ---------------------------------------------------------------------------
// Sets of odd integers
// ---------------------------------------------------------------------------

/// Sorted, duplicate-free, nonempty, every member odd and >= 3.
using OddSet = std::vector<BigInt>;

inline OddSet make_odd_set(std::vector<BigInt> members) {
  if (members.empty()) throw InvalidParameter("odd sets must be nonempty");
  for (const auto& m : members)
    if (m < 3 || m % 2 == 0) throw InvalidParameter("odd set member " + m.str() + " is not an odd integer >= 3");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

inline OddSet make_odd_set(std::initializer_list<long long> members) {
  std::vector<BigInt> v(members.begin(), members.end());
  return make_odd_set(std::move(v));
}

/// A <= B iff every a in A is divisible by some b in B.
inline bool leq_P(const OddSet& a, const OddSet& b) {
  for (const auto& x : a) {
    bool hit = false;
    for (const auto& y : b)
      if (x % y == 0) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

inline std::string to_string(const OddSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
  return out + "}";
}

/// Primes assigned along a processing order and the products they induce.
struct PrimeAssignment {
  std::vector<std::size_t> order;  // order[k] = element processed k-th
  std::vector<BigInt> prime;       // per element
  std::vector<BigInt> product;     // per element, Phi(x)
};

/// x <=_f y and x <=_b y for processing positions pos.
namespace detail {

inline std::vector<std::size_t> positions(const FinitePoset& q, const std::vector<std::size_t>& order) {
  if (order.size() != q.size()) throw InvalidParameter("processing order must list every element once");
  std::vector<std::size_t> pos(q.size(), q.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= q.size() || pos[order[k]] != q.size())
      throw InvalidParameter("processing order must list every element once");
    pos[order[k]] = k;
  }
  return pos;
}

inline std::vector<BigInt> odd_primes(std::size_t count) {
  std::vector<BigInt> out;
  for (std::uint64_t c = 3; out.size() < count; c += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= c; d += 2)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.emplace_back(c);
  }
  return out;
}

inline std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

}  // namespace detail

inline bool leq_forward(const FinitePoset& q, const std::vector<std::size_t>& pos, std::size_t x, std::size_t y) {
  return q.leq(x, y) && pos[x] <= pos[y];
}

inline bool leq_backward(const FinitePoset& q, const std::vector<std::size_t>& pos, std::size_t x, std::size_t y) {
  return q.leq(x, y) && pos[x] >= pos[y];
}

/// Phi(x) = product of the primes of the up-set of x in <=_b, so that
/// x <=_b y iff Phi(y) divides Phi(x).
inline PrimeAssignment embed_divisibility(const FinitePoset& q, std::vector<std::size_t> order) {
  auto pos = detail::positions(q, order);
  auto primes = detail::odd_primes(q.size());
  PrimeAssignment pa;
  pa.order = std::move(order);
  pa.prime.resize(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) pa.prime[pa.order[k]] = primes[k];
  pa.product.assign(q.size(), BigInt(1));
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (leq_backward(q, pos, x, y)) pa.product[x] *= pa.prime[y];
  return pa;
}

inline PrimeAssignment embed_divisibility(const FinitePoset& q) {
  return embed_divisibility(q, detail::identity_order(q.size()));
}

/// Element-indexed odd sets U(x) = { Phi(y) : y <=_f x }.
struct OddSetFamily {
  std::vector<std::string> elements;
  std::vector<OddSet> sets;
  PrimeAssignment primes;
};

inline OddSetFamily embed_poset_to_odd_sets(const FinitePoset& q, std::vector<std::size_t> order) {
  auto pos = detail::positions(q, order);
  OddSetFamily fam;
  fam.elements = q.names();
  fam.primes = embed_divisibility(q, std::move(order));
  for (std::size_t x = 0; x < q.size(); ++x) {
    std::vector<BigInt> u;
    for (std::size_t y = 0; y < q.size(); ++y)
      if (leq_forward(q, pos, y, x)) u.push_back(fam.primes.product[y]);
    fam.sets.push_back(make_odd_set(std::move(u)));
  }
  return fam;
}

inline OddSetFamily embed_poset_to_odd_sets(const FinitePoset& q) {
  return embed_poset_to_odd_sets(q, detail::identity_order(q.size()));
}

/// Element order giving the smallest total of all odd-set members, ties to
/// the lexicographically first order. Exhaustive, so only for small posets;
/// larger ones get the identity order.
inline std::vector<std::size_t> compact_order(const FinitePoset& q, std::size_t exhaustive_limit = 7) {
  auto order = detail::identity_order(q.size());
  if (q.size() > exhaustive_limit) return order;
  auto best = order;
  std::optional<BigInt> best_total;
  do {
    BigInt total = 0;
    for (const auto& s : embed_poset_to_odd_sets(q, order).sets)
      for (const auto& p : s) total += p;
    if (!best_total || total < *best_total) {
      best_total = total;
      best = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline constexpr std::size_t kDefaultCycleFamilyBound = 10000;

/// Disjoint union of directed cycles of the lengths in A, smallest first.
inline Digraph odd_sets_to_cycle_family(const OddSet& a, std::size_t max_vertices = kDefaultCycleFamilyBound) {
  if (a.empty()) throw InvalidParameter("odd sets must be nonempty");
  BigInt total = 0;
  for (const auto& p : a) total += p;
  if (total > max_vertices)
    throw PreconditionViolation("cycle family for " + to_string(a) + " needs " + total.str() +
                                " vertices, above the bound of " + std::to_string(max_vertices));
  std::vector<Digraph> parts;
  std::vector<std::string> labels;
  for (const auto& p : a) {
    auto len = p.convert_to<std::size_t>();
    parts.push_back(directed_cycle(len));
    for (std::size_t i = 0; i < len; ++i) labels.push_back("C" + p.str() + ":" + std::to_string(i));
  }
  return disjoint_union(std::span<const Digraph>(parts)).with_labels(std::move(labels));
}

}  // namespace homlab

#endif  // HOMLAB_UNIVERSAL_HPP
