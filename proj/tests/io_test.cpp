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

#include "homlab/io.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace homlab {
namespace {

bool same_labels(const Graph& a, const Graph& b) {
  for (Vertex v = 0; v < a.vertex_count(); ++v)
    if (a.label(v) != b.label(v)) return false;
  return true;
}

// A small phi-strategy embedding assembled by hand, no solver involved.
IntervalEmbedding tiny_embedding() {
  IntervalEmbedding e;
  e.poset = FinitePoset({"x", "y", "z"}, {{"x", "y"}});
  e.g1 = cycle(5);
  e.g2 = complete(3);
  e.family = embed_poset_to_odd_sets(e.poset, compact_order(e.poset));
  e.gadget = PointedGraph{cycle(7), 0, 3};
  for (const auto& s : e.family.sets) {
    e.digraphs.push_back(odd_sets_to_cycle_family(s));
    e.assignment.push_back(indicate(e.digraphs.back(), *e.gadget));
  }
  e.provenance = {"by hand"};
  e.report.claims.push_back({"G1 -> graph(x)", "x", ClaimVerdict::pass, "witness", 0.25});
  return e;
}

TEST(JsonTest, GraphRoundTripKeepsLabels) {
  GraphBuilder b;
  b.append(grotzsch(), "G.");
  b.add_path(0, 5, 3, "P.");
  Graph g = b.build();
  Graph back = graph_from_json(Json::parse(dump(to_json(g))));
  EXPECT_EQ(back, g);
  EXPECT_TRUE(same_labels(back, g));
  EXPECT_EQ(dump(to_json(back)), dump(to_json(g)));
}

TEST(JsonTest, RandomGraphsRoundTrip) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = oracle::random_graph(rng, rng() % 12, 0.4);
    EXPECT_EQ(graph_from_json(to_json(g)), g);
  }
}

TEST(JsonTest, DigraphRoundTrip) {
  Digraph d = odd_sets_to_cycle_family(make_odd_set({3, 5}));
  Digraph back = digraph_from_json(Json::parse(dump(to_json(d))));
  EXPECT_EQ(back, d);
  for (Vertex v = 0; v < d.vertex_count(); ++v) EXPECT_EQ(back.label(v), d.label(v));
}

TEST(JsonTest, MalformedGraphsRejected) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges": []})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": -1})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "directed": true, "edges": [[0, 1]]})")), ParseError);
  EXPECT_THROW(digraph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1]]})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "labels": {"x": "a"}})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "labels": {"5": "a"}})")), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/graph.json"), ParseError);
}

TEST(JsonTest, PosetRoundTrip) {
  std::mt19937_64 rng(62);
  for (int iter = 0; iter < 20; ++iter) {
    auto q = random_poset(rng, 1 + rng() % 6);
    auto back = poset_from_json(Json::parse(dump(to_json(q))));
    ASSERT_EQ(back.names(), q.names());
    for (std::size_t x = 0; x < q.size(); ++x)
      for (std::size_t y = 0; y < q.size(); ++y) EXPECT_EQ(back.leq(x, y), q.leq(x, y));
  }
  EXPECT_THROW(poset_from_json(Json::parse(R"({"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})")),
               InvalidParameter);
  EXPECT_THROW(poset_from_json(Json::parse(R"({"elements": ["a"], "leq": [["a"]]})")), ParseError);
}

TEST(JsonTest, OddSetsKeepBigMembers) {
  BigInt big = 1;
  for (auto p : detail::odd_primes(30)) big *= p;
  OddSet s = make_odd_set({big, BigInt(3)});
  EXPECT_EQ(odd_set_from_json(Json::parse(dump(to_json(s)))), s);
  EXPECT_EQ(odd_set_from_json(Json::parse("[15, \"3\"]")), make_odd_set({3, 15}));
  EXPECT_THROW(odd_set_from_json(Json::parse("[\"x\"]")), ParseError);
  EXPECT_THROW(odd_set_from_json(Json::parse("[4]")), InvalidParameter);
}

TEST(JsonTest, PointedGraphRoundTrip) {
  PointedGraph p{cycle(7), 2, 5};
  auto back = pointed_from_json(to_json(p));
  EXPECT_EQ(back.graph, p.graph);
  EXPECT_EQ(back.a, 2u);
  EXPECT_EQ(back.b, 5u);
  EXPECT_THROW(pointed_from_json(Json::parse(R"({"graph": {"n": 2}, "a": 1, "b": 1})")), ParseError);
}

TEST(JsonTest, EmbeddingRoundTripIsByteIdentical) {
  auto e = tiny_embedding();
  std::string text = dump(to_json(e));
  auto back = embedding_from_json(Json::parse(text));
  EXPECT_EQ(back.assignment, e.assignment);
  EXPECT_EQ(back.digraphs, e.digraphs);
  EXPECT_EQ(back.family.sets, e.family.sets);
  back.report = e.report;
  EXPECT_EQ(dump(to_json(back)), text);
}

TEST(JsonTest, EmbeddingRejectsInconsistentSets) {
  auto j = to_json(tiny_embedding());
  j["assignment"][0]["odd_set"] = Json::array({"7"});
  EXPECT_THROW(embedding_from_json(j), ParseError);
  j = to_json(tiny_embedding());
  j["strategy"] = "other";
  EXPECT_THROW(embedding_from_json(j), ParseError);
  j.erase("poset");
  EXPECT_THROW(embedding_from_json(j), ParseError);
}

TEST(JsonTest, TimingsOnlyWhenAsked) {
  auto e = tiny_embedding();
  EXPECT_FALSE(to_json(e)["report"]["claims"][0].contains("seconds"));
  EXPECT_TRUE(to_json(e, true)["report"]["claims"][0].contains("seconds"));
  // identical inputs give identical bytes
  EXPECT_EQ(dump(to_json(tiny_embedding())), dump(to_json(tiny_embedding())));
}

TEST(DotTest, Shapes) {
  std::string g = to_dot(cycle(3));
  EXPECT_EQ(g.rfind("graph \"G\" {\n", 0), 0u);
  EXPECT_NE(g.find("  0 -- 1;\n"), std::string::npos);
  EXPECT_EQ(g.back(), '\n');
  std::string d = to_dot(directed_cycle(3), "C3");
  EXPECT_EQ(d.rfind("digraph \"C3\" {\n", 0), 0u);
  EXPECT_NE(d.find("  2 -> 0;\n"), std::string::npos);
  std::string p = to_dot(PointedGraph{cycle(7), 0, 3});
  EXPECT_NE(p.find("0 [label=\"0\", style=filled"), std::string::npos);
  EXPECT_NE(p.find("3 [label=\"3\", style=filled"), std::string::npos);
  EXPECT_EQ(p.find("1 [label=\"1\", style=filled"), std::string::npos);
}

TEST(DotTest, LabelsEscaped) {
  Graph g = Graph(2, {{0, 1}}).with_labels({"say \"hi\"", "back\\slash"});
  std::string s = to_dot(g);
  EXPECT_NE(s.find("label=\"say \\\"hi\\\"\""), std::string::npos);
  EXPECT_NE(s.find("label=\"back\\\\slash\""), std::string::npos);
}

}  // namespace
}  // namespace homlab
