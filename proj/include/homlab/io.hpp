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

// JSON and DOT for graphs, posets, embeddings and reports. Big integers are
// written as decimal strings. Elapsed times are left out unless asked for,
// so equal inputs give byte-identical output.

#ifndef HOMLAB_IO_HPP
#define HOMLAB_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "homlab/error.hpp"
#include "homlab/fractal.hpp"
#include "homlab/gadgets.hpp"
#include "homlab/graph.hpp"
#include "homlab/universal.hpp"
#include "json.hpp"

namespace homlab {

using Json = nlohmann::ordered_json;

namespace detail {

template <typename G>
Json labels_json(const G& g) {
  Json out = Json::object();
  if (!g.has_labels()) return out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.label(v).empty()) out[std::to_string(v)] = std::string(g.label(v));
  return out;
}

inline std::size_t json_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

struct RawGraph {
  std::size_t n = 0;
  bool directed = false;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
};

inline RawGraph raw_graph(const Json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  if (!j.contains("n")) throw ParseError("graph is missing \"n\"");
  RawGraph g;
  g.n = json_index(j["n"], "\"n\"");
  if (j.contains("directed")) {
    if (!j["directed"].is_boolean()) throw ParseError("\"directed\" must be a boolean");
    g.directed = j["directed"].get<bool>();
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
      auto u = json_index(e[0], "edge endpoint"), v = json_index(e[1], "edge endpoint");
      if (u >= g.n || v >= g.n) throw ParseError("edge endpoint out of range");
      if (u == v) throw ParseError("loops are not allowed");
      g.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (!l.is_object()) throw ParseError("\"labels\" must be an object from vertex to string");
    g.labels.assign(g.n, "");
    for (const auto& [k, val] : l.items()) {
      std::size_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoul(k, &used);
        if (used != k.size()) throw std::invalid_argument(k);
      } catch (const std::exception&) {
        throw ParseError("label key '" + k + "' is not a vertex index");
      }
      if (v >= g.n) throw ParseError("label key '" + k + "' out of range");
      if (!val.is_string()) throw ParseError("labels must be strings");
      g.labels[v] = val.get<std::string>();
    }
  }
  return g;
}

}  // namespace detail

inline Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["directed"] = false;
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  auto labels = detail::labels_json(g);
  if (!labels.empty()) j["labels"] = std::move(labels);
  return j;
}

inline Json to_json(const Digraph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["directed"] = true;
  Json arcs = Json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  j["edges"] = std::move(arcs);
  auto labels = detail::labels_json(g);
  if (!labels.empty()) j["labels"] = std::move(labels);
  return j;
}

inline Graph graph_from_json(const Json& j) {
  auto r = detail::raw_graph(j);
  if (r.directed) throw ParseError("expected an undirected graph");
  Graph g(r.n, r.edges);
  return r.labels.empty() ? g : g.with_labels(std::move(r.labels));
}

inline Digraph digraph_from_json(const Json& j) {
  auto r = detail::raw_graph(j);
  if (!r.directed) throw ParseError("expected a directed graph (\"directed\": true)");
  Digraph g(r.n, r.edges);
  return r.labels.empty() ? g : g.with_labels(std::move(r.labels));
}

inline Json to_json(const FinitePoset& q) {
  Json j;
  j["elements"] = q.names();
  Json leq = Json::array();
  for (auto [x, y] : q.strict_pairs()) leq.push_back({q.name(x), q.name(y)});
  j["leq"] = std::move(leq);
  return j;
}

inline FinitePoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements")) throw ParseError("poset needs \"elements\"");
  if (!j["elements"].is_array()) throw ParseError("\"elements\" must be an array of strings");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("\"elements\" must be an array of strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> leq;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw ParseError("\"leq\" must be an array of pairs");
    for (const auto& p : j["leq"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw ParseError("each \"leq\" entry must be a pair of element names");
      leq.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return FinitePoset(std::move(names), leq);
}

inline Json to_json(const OddSet& s) {
  Json j = Json::array();
  for (const auto& p : s) j.push_back(p.str());
  return j;
}

inline OddSet odd_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("odd set must be an array");
  std::vector<BigInt> members;
  for (const auto& m : j) {
    if (m.is_number_integer())
      members.emplace_back(m.get<long long>());
    else if (m.is_string()) {
      try {
        members.emplace_back(m.get<std::string>());
      } catch (const std::exception&) {
        throw ParseError("odd set member '" + m.get<std::string>() + "' is not an integer");
      }
    } else
      throw ParseError("odd set members must be integers or decimal strings");
  }
  return make_odd_set(std::move(members));
}

inline Json to_json(const OddSetFamily& f) {
  Json j;
  Json elems = Json::array();
  for (std::size_t x = 0; x < f.elements.size(); ++x) {
    Json e;
    e["name"] = f.elements[x];
    if (x < f.primes.prime.size()) {
      e["prime"] = f.primes.prime[x].str();
      e["product"] = f.primes.product[x].str();
    }
    e["odd_set"] = to_json(f.sets[x]);
    elems.push_back(std::move(e));
  }
  Json order = Json::array();
  for (auto x : f.primes.order) order.push_back(f.elements[x]);
  j["order"] = std::move(order);
  j["elements"] = std::move(elems);
  return j;
}

inline Json to_json(const PointedGraph& p) {
  Json j;
  j["graph"] = to_json(p.graph);
  j["a"] = p.a;
  j["b"] = p.b;
  return j;
}

inline PointedGraph pointed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("a") || !j.contains("b"))
    throw ParseError("pointed graph needs \"graph\", \"a\" and \"b\"");
  PointedGraph p{graph_from_json(j["graph"]), static_cast<Vertex>(detail::json_index(j["a"], "\"a\"")),
                 static_cast<Vertex>(detail::json_index(j["b"], "\"b\""))};
  try {
    p.validate();
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
  return p;
}

inline Json to_json(const Check& c, bool timings = false) {
  Json j;
  j["check"] = c.name;
  j["passed"] = c.passed;
  j["evidence"] = c.evidence;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (timings) j["seconds"] = c.seconds;
  return j;
}

template <typename T>
Json checks_json(const VerifiedConstruction<T>& v, bool timings = false) {
  Json j = Json::array();
  for (const auto& c : v.checks) j.push_back(to_json(c, timings));
  return j;
}

inline Json to_json(const VerificationReport& r, bool timings = false) {
  Json j;
  j["passed"] = r.passed();
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json e;
    e["claim"] = c.claim;
    e["instance"] = c.instance;
    e["verdict"] = to_string(c.verdict);
    e["evidence"] = c.evidence;
    if (timings) e["seconds"] = c.seconds;
    claims.push_back(std::move(e));
  }
  j["claims"] = std::move(claims);
  return j;
}

inline Json to_json(const IntervalEmbedding& e, bool timings = false) {
  Json j;
  j["strategy"] = to_string(e.strategy);
  j["poset"] = to_json(e.poset);
  j["g1"] = to_json(e.g1);
  j["g2"] = to_json(e.g2);
  j["family"] = to_json(e.family);
  Json elems = Json::array();
  for (std::size_t x = 0; x < e.assignment.size(); ++x) {
    Json el;
    el["name"] = e.poset.name(x);
    el["odd_set"] = to_json(e.family.sets[x]);
    el["graph"] = to_json(e.assignment[x]);
    elems.push_back(std::move(el));
  }
  j["assignment"] = std::move(elems);
  if (e.gadget) j["gadget"] = to_json(*e.gadget);
  j["provenance"] = e.provenance;
  j["report"] = to_json(e.report, timings);
  return j;
}

/// Reads back what to_json(IntervalEmbedding) wrote; the report is not read
/// (verify recomputes it). Phi digraphs are rebuilt from the odd sets.
inline IntervalEmbedding embedding_from_json(const Json& j) {
  for (const char* key : {"strategy", "poset", "g1", "g2", "assignment"})
    if (!j.contains(key)) throw ParseError(std::string("embedding is missing \"") + key + "\"");
  IntervalEmbedding e;
  try {
    e.strategy = parse_strategy(j["strategy"].get<std::string>());
  } catch (const InvalidParameter& err) {
    throw ParseError(err.what());
  }
  e.poset = poset_from_json(j["poset"]);
  e.g1 = graph_from_json(j["g1"]);
  e.g2 = graph_from_json(j["g2"]);
  if (j.contains("gadget")) e.gadget = pointed_from_json(j["gadget"]);
  if (!j["assignment"].is_array() || j["assignment"].size() != e.poset.size())
    throw ParseError("\"assignment\" must list one graph per poset element");
  e.assignment.resize(e.poset.size());
  std::vector<OddSet> sets(e.poset.size());
  std::vector<char> seen(e.poset.size(), 0);
  for (const auto& el : j["assignment"]) {
    if (!el.contains("name") || !el.contains("graph")) throw ParseError("assignment entries need name and graph");
    auto x = e.poset.index_of(el["name"].get<std::string>());
    if (seen[x]) throw ParseError("element assigned twice");
    seen[x] = 1;
    e.assignment[x] = graph_from_json(el["graph"]);
    if (el.contains("odd_set")) sets[x] = odd_set_from_json(el["odd_set"]);
  }
  if (j.contains("family") && j["family"].contains("order")) {
    std::vector<std::size_t> order;
    for (const auto& name : j["family"]["order"]) order.push_back(e.poset.index_of(name.get<std::string>()));
    try {
      e.family = embed_poset_to_odd_sets(e.poset, order);
    } catch (const InvalidParameter& err) {
      throw ParseError(err.what());
    }
    for (std::size_t x = 0; x < sets.size(); ++x)
      if (!sets[x].empty() && sets[x] != e.family.sets[x])
        throw ParseError("odd set of '" + e.poset.name(x) + "' does not match the recorded order");
    sets = e.family.sets;
  } else {
    e.family.elements = e.poset.names();
    e.family.sets = sets;
  }
  if (e.strategy == Strategy::phi && e.gadget &&
      std::all_of(sets.begin(), sets.end(), [](const OddSet& s) { return !s.empty(); }))
    for (const auto& s : sets) e.digraphs.push_back(odd_sets_to_cycle_family(s));
  if (j.contains("provenance")) e.provenance = j["provenance"].get<std::vector<std::string>>();
  return e;
}

// ---------------------------------------------------------------------------
// DOT
// ---------------------------------------------------------------------------

namespace detail {

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <typename G>
void dot_vertices(std::ostringstream& os, const G& g, const std::vector<Vertex>& marked) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    std::string label = g.has_labels() && !g.label(v).empty() ? std::string(g.label(v)) : std::to_string(v);
    os << " [label=\"" << dot_escape(label) << "\"";
    if (std::find(marked.begin(), marked.end(), v) != marked.end()) os << ", style=filled, fillcolor=gray";
    os << "];\n";
  }
}

}  // namespace detail

/// `marked` vertices are filled (a, b, u and so on).
inline std::string to_dot(const Graph& g, const std::string& name = "G", const std::vector<Vertex>& marked = {}) {
  std::ostringstream os;
  os << "graph \"" << detail::dot_escape(name) << "\" {\n";
  detail::dot_vertices(os, g, marked);
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Digraph& g, const std::string& name = "G", const std::vector<Vertex>& marked = {}) {
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(name) << "\" {\n";
  detail::dot_vertices(os, g, marked);
  for (auto [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const PointedGraph& p, const std::string& name = "I") {
  return to_dot(p.graph, name, {p.a, p.b});
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace homlab

#endif  // HOMLAB_IO_HPP
