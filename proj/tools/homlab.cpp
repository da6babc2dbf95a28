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

// homlab command-line tool.
//
// Exit codes: 0 success (or the claim holds), 1 definitive negative,
// 2 usage, budget or precondition problems. Never mixed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homlab/fractal.hpp"
#include "homlab/gadgets.hpp"
#include "homlab/graph.hpp"
#include "homlab/hom.hpp"
#include "homlab/io.hpp"
#include "homlab/universal.hpp"

namespace {

using namespace homlab;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kTrouble = 2;

struct Globals {
  double timeout_secs = 300;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  bool timings = false;

  SolverBudget budget() const { return SolverBudget{timeout_secs, std::nullopt}; }
};

/// Writes to --output or stdout.
void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw Error("cannot write '" + g.output + "'");
  out << text;
}

void emit_json(const Globals& g, const Json& j) { emit(g, dump(j)); }

/// Graph JSON or DOT depending on --format.
void emit_graph(const Globals& g, const Graph& graph, Json extra = Json::object(),
                const std::vector<Vertex>& marked = {}) {
  if (g.format == "dot") {
    emit(g, to_dot(graph, "G", marked));
    return;
  }
  extra["graph"] = to_json(graph);
  emit_json(g, extra);
}

bool is_directed_file(const Json& j) { return j.is_object() && j.value("directed", false); }

int report_search(const Globals& g, const SearchResult& r) {
  if (r.exceeded()) {
    std::cerr << "UNKNOWN (budget exceeded after " << r.nodes << " nodes)\n";
    return kTrouble;
  }
  if (r.none()) {
    emit(g, "NONE (search exhausted)\n");
    return kNegative;
  }
  Json j;
  j["found"] = true;
  j["mapping"] = r.mapping;
  emit_json(g, j);
  return kOk;
}

std::vector<Vertex> gadget_marks(const PointedGraph& p) { return {p.a, p.b}; }

// ---------------------------------------------------------------------------

int cmd_hom(const Globals& g, const std::string& a, const std::string& b) {
  auto ja = read_json_file(a), jb = read_json_file(b);
  if (is_directed_file(ja) != is_directed_file(jb))
    throw ParseError("both inputs must be directed or both undirected");
  if (is_directed_file(ja)) return report_search(g, hom_exists(digraph_from_json(ja), digraph_from_json(jb), g.budget()));
  return report_search(g, hom_exists(graph_from_json(ja), graph_from_json(jb), g.budget()));
}

int cmd_compare(const Globals& g, const std::string& a, const std::string& b) {
  auto c = compare(graph_from_json(read_json_file(a)), graph_from_json(read_json_file(b)), g.budget());
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["forward"] = c.forward.has_value();
  j["backward"] = c.backward.has_value();
  emit_json(g, j);
  return kOk;
}

int cmd_core(const Globals& g, const std::string& a) {
  Graph graph = graph_from_json(read_json_file(a));
  Core c = core_of(graph, g.budget());
  Json j;
  j["vertices"] = c.vertices;
  j["retraction"] = c.retraction;
  emit_graph(g, c.graph, j);
  return kOk;
}

int cmd_rigid(const Globals& g, const std::string& a) {
  bool rigid = is_rigid(graph_from_json(read_json_file(a)), g.budget());
  emit(g, rigid ? "rigid\n" : "not rigid\n");
  return rigid ? kOk : kNegative;
}

int cmd_analyze(const Globals& g, const std::string& a) {
  Graph graph = graph_from_json(read_json_file(a));
  auto p = analyze(graph);
  Json j;
  j["vertices"] = graph.vertex_count();
  j["edges"] = graph.edge_count();
  j["connected"] = p.connected;
  j["bipartite"] = p.bipartite;
  j["girth"] = p.girth ? Json(*p.girth) : Json(nullptr);
  j["odd_girth"] = p.odd_girth ? Json(*p.odd_girth) : Json(nullptr);
  emit_json(g, j);
  return kOk;
}

int cmd_path_threshold(const Globals& g, const std::string& a) {
  emit(g, std::to_string(path_threshold(graph_from_json(read_json_file(a)))) + "\n");
  return kOk;
}

int cmd_embed_poset(const Globals& g, const std::string& a, const std::string& order_kind) {
  auto q = poset_from_json(read_json_file(a));
  std::vector<std::size_t> order;
  if (order_kind == "compact")
    order = compact_order(q);
  else if (order_kind == "identity")
    order = detail::identity_order(q.size());
  else
    throw InvalidParameter("--order must be compact or identity");
  auto fam = embed_poset_to_odd_sets(q, order);
  Json j = to_json(fam);
  for (std::size_t x = 0; x < q.size(); ++x) {
    BigInt total = 0;
    for (const auto& p : fam.sets[x]) total += p;
    j["elements"][x]["cycle_family"] =
        total <= kDefaultCycleFamilyBound ? to_json(odd_sets_to_cycle_family(fam.sets[x])) : Json(nullptr);
  }
  emit_json(g, j);
  return kOk;
}

struct BuildArgs {
  std::size_t l = 5;
  std::size_t p = 3;
  std::string set = "3";
  std::vector<std::string> files;
};

OddSet parse_set(const std::string& s) {
  std::vector<BigInt> members;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      members.emplace_back(item);
    } catch (const std::exception&) {
      throw InvalidParameter("'" + item + "' is not an integer");
    }
  }
  return make_odd_set(std::move(members));
}

void need_files(const BuildArgs& b, std::size_t n, const char* usage) {
  if (b.files.size() != n) throw CLI::ValidationError(std::string("expected ") + usage);
}

/// Shared front half of build hp / ha: I_l and F for [G1, G2].
struct HaParts {
  PreparedInterval iv;
  VerifiedConstruction<Indicator> ind;
  VerifiedConstruction<NamedGraph> f;
  GadgetRecipe recipe;
};

HaParts ha_parts(const Globals& g, const std::string& f1, const std::string& f2) {
  auto iv = prepare_interval(graph_from_json(read_json_file(f1)), graph_from_json(read_json_file(f2)), g.budget());
  std::size_t l = choose_l(iv.g2);
  auto ind = build_indicator(l, g.budget());
  auto f = find_sparse_incomparable(iv.g1, iv.g2, l, default_sparse_stream(l), g.budget());
  GadgetRecipe recipe{l, 0, iv.g2.vertex_count()};
  return {std::move(iv), std::move(ind), std::move(f), recipe};
}

int cmd_build(const Globals& g, const std::string& what, const BuildArgs& b) {
  if (what == "indicator") {
    auto ind = build_indicator(b.l, g.budget());
    Json j;
    j["a"] = ind.value.pointed.a;
    j["b"] = ind.value.pointed.b;
    j["l"] = ind.value.l;
    const auto& p = ind.value.profile;
    j["profile"] = {{"ab", p.ab}, {"ac", p.ac}, {"bc", p.bc}, {"ad", p.ad}, {"bd", p.bd}, {"cd", p.cd}};
    j["checks"] = checks_json(ind, g.timings);
    j["notes"] = ind.notes;
    emit_graph(g, ind.value.pointed.graph, j, gadget_marks(ind.value.pointed));
    return kOk;
  }
  if (what == "hp" || what == "ha") {
    need_files(b, 2, "G1.json G2.json");
    auto parts = ha_parts(g, b.files[0], b.files[1]);
    Graph out = what == "hp" ? build_Hp(b.p, parts.recipe, parts.f.value.graph, parts.ind.value.pointed)
                             : build_HA(parse_set(b.set), parts.recipe, parts.f.value.graph, parts.ind.value.pointed,
                                        parts.iv.g1);
    Json j;
    j["l"] = parts.recipe.l;
    j["F"] = parts.f.value.name;
    j["notes"] = parts.iv.notes;
    emit_graph(g, out, j);
    return kOk;
  }
  if (what == "pair") {
    need_files(b, 2, "G1.json G2.json");
    auto iv = prepare_interval(graph_from_json(read_json_file(b.files[0])), graph_from_json(read_json_file(b.files[1])),
                               g.budget());
    auto pair = incomparable_pair(iv.g1, iv.g2, g.budget());
    Json j;
    j["H"] = pair.value.h_name;
    j["H_prime"] = pair.value.h_prime_name;
    j["H1"] = to_json(pair.value.h1);
    j["H2"] = to_json(pair.value.h2);
    j["checks"] = checks_json(pair, g.timings);
    emit_json(g, j);
    return kOk;
  }
  if (what == "density") {
    need_files(b, 2, "G1.json G2.json");
    auto w = density_witness(graph_from_json(read_json_file(b.files[0])), graph_from_json(read_json_file(b.files[1])),
                             g.budget());
    Json j;
    j["name"] = w.value.name;
    j["checks"] = checks_json(w, g.timings);
    emit_graph(g, w.value.graph, j);
    return kOk;
  }
  if (what == "gadget" || what == "phi") {
    need_files(b, what == "gadget" ? 2 : 3, what == "gadget" ? "G1.json G2.json" : "D.json G1.json G2.json");
    std::size_t off = what == "phi" ? 1 : 0;
    auto iv = prepare_interval(graph_from_json(read_json_file(b.files[off])),
                               graph_from_json(read_json_file(b.files[off + 1])), g.budget());
    auto gadget = interval_gadget_for(iv, g.budget());
    const auto& pg = gadget.value.pointed;
    Json j;
    j["notes"] = gadget.notes;
    j["checks"] = checks_json(gadget, g.timings);
    if (what == "gadget") {
      j["a"] = pg.a;
      j["b"] = pg.b;
      emit_graph(g, pg.graph, j, gadget_marks(pg));
    } else {
      auto d = digraph_from_json(read_json_file(b.files[0]));
      emit_graph(g, phi(d, pg), j, [&] {
        std::vector<Vertex> v(d.vertex_count());
        std::iota(v.begin(), v.end(), Vertex{0});
        return v;
      }());
    }
    return kOk;
  }
  throw CLI::ValidationError("unknown build target '" + what + "'");
}

int finish_embedding_report(const Globals& g, const VerificationReport& r, Json j) {
  emit_json(g, j);
  if (r.passed()) return kOk;
  for (const auto& c : r.claims)
    if (c.verdict == ClaimVerdict::fail) return kNegative;
  return kTrouble;
}

int cmd_embed_interval(const Globals& g, const std::vector<std::string>& files, const std::string& strategy) {
  if (files.size() != 3) throw CLI::ValidationError("expected Q.json G1.json G2.json");
  auto q = poset_from_json(read_json_file(files[0]));
  auto e = embed_poset_into_interval(q, graph_from_json(read_json_file(files[1])),
                                     graph_from_json(read_json_file(files[2])), parse_strategy(strategy), g.budget());
  return finish_embedding_report(g, e.report, to_json(e, g.timings));
}

int cmd_verify(const Globals& g, const std::string& file) {
  auto e = embedding_from_json(read_json_file(file));
  auto r = verify_embedding(e, g.budget());
  return finish_embedding_report(g, r, to_json(r, g.timings));
}

int cmd_generate(const Globals& g, const std::string& name, const GeneratorParams& p, std::size_t base_cycle) {
  if (name == "poset") {
    if (!p.n) throw InvalidParameter("poset needs --n");
    std::mt19937_64 rng(g.seed);
    emit_json(g, to_json(random_poset(rng, *p.n)));
    return kOk;
  }
  if (name == "antichain" || name == "chain") {
    if (!p.n) throw InvalidParameter(name + " needs --n");
    emit_json(g, to_json(name == "chain" ? chain(*p.n) : antichain(*p.n)));
    return kOk;
  }
  if (name == "directed_cycle") {
    if (!p.length) throw InvalidParameter("directed_cycle needs --length");
    auto d = directed_cycle(*p.length);
    emit(g, g.format == "dot" ? to_dot(d) : dump(to_json(d)));
    return kOk;
  }
  GeneratorParams q = p;
  if (base_cycle) q.base = cycle(base_cycle);
  Graph out = generate(name, q);
  emit(g, g.format == "dot" ? to_dot(out) : dump(to_json(out)));
  return kOk;
}

/// The (C5, K3) pipeline end to end, one line per stage.
int cmd_demo(const Globals& g) {
  Graph g1 = cycle(5), g2 = complete(3);
  bool ok = true;
  auto line = [&](const std::string& stage, bool passed, const std::string& what) {
    ok = ok && passed;
    std::cout << (passed ? "PASS " : "FAIL ") << stage << ": " << what << "\n" << std::flush;
  };
  for (std::size_t l : {5, 7}) {
    auto ind = build_indicator(l, g.budget());
    line("indicator l=" + std::to_string(l), ind.passed(),
         std::to_string(ind.value.pointed.graph.vertex_count()) + " vertices");
  }
  auto f = find_sparse_incomparable(g1, g2, 7, default_sparse_stream(7), g.budget());
  line("sparse incomparable", f.passed(), f.value.name);
  auto pair = incomparable_pair(g1, g2, g.budget());
  line("incomparable pair", pair.passed(), pair.value.h_name + " / " + pair.value.h_prime_name);
  auto dw = density_witness(g1, g2, g.budget());
  line("density witness", dw.passed(), std::to_string(dw.value.graph.vertex_count()) + " vertices");
  auto gadget = interval_gadget_for(prepare_interval(g1, g2, g.budget()), g.budget());
  line("interval gadget", gadget.passed(),
       std::to_string(gadget.value.pointed.graph.vertex_count()) + " vertices, rigid");
  std::vector<std::pair<std::string, FinitePoset>> posets{
      {"antichain(2)", antichain(2)}, {"chain(2)", chain(2)}, {"V", FinitePoset({"b", "l", "r"}, {{"b", "l"}, {"b", "r"}})}};
  for (const auto& [name, q] : posets) {
    auto e = embed_poset_into_interval(q, g1, g2, Strategy::phi, g.budget());
    line("embed " + name, e.report.passed(), std::to_string(e.report.claims.size()) + " claims");
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homlab: graph homomorphism order toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* timeout = app.add_option("--timeout-secs", g.timeout_secs,
                                 "Solver budget per call, in seconds (env HOMLAB_TIMEOUT_SECS; the flag wins)")
                     ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized generators");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--output,-o", g.output, "Write output to this file");
  app.add_flag("--timings", g.timings, "Include elapsed times in reports");

  std::string a, b, order_kind = "compact", strategy = "phi", what, gen_name;
  std::vector<std::string> files;
  BuildArgs build;
  GeneratorParams gen;
  std::size_t base_cycle = 0;

  auto* hom = app.add_subcommand("hom", "Search for a homomorphism G -> H");
  hom->add_option("G", a)->required();
  hom->add_option("H", b)->required();
  auto* cmp = app.add_subcommand("compare", "Compare two graphs in the homomorphism order");
  cmp->add_option("G", a)->required();
  cmp->add_option("H", b)->required();
  auto* core = app.add_subcommand("core", "Core of a graph with its retraction");
  core->add_option("G", a)->required();
  auto* rigid = app.add_subcommand("rigid", "Is the identity the only endomorphism");
  rigid->add_option("G", a)->required();
  auto* an = app.add_subcommand("analyze", "Connectivity, bipartiteness, girth, odd girth");
  an->add_option("G", a)->required();
  auto* pt = app.add_subcommand("path-threshold", "Least l with walks of every length >= l between all pairs");
  pt->add_option("G", a)->required();
  auto* ep = app.add_subcommand("embed-poset", "Poset -> odd sets -> cycle families");
  ep->add_option("Q", a)->required();
  ep->add_option("--order", order_kind, "Element order: compact or identity");
  auto* bd = app.add_subcommand("build", "Build a verified construction");
  bd->add_option("what", what, "indicator | hp | ha | pair | density | gadget | phi")
      ->required()
      ->check(CLI::IsMember({"indicator", "hp", "ha", "pair", "density", "gadget", "phi"}));
  bd->add_option("files", build.files, "Input graphs, in the order the target needs");
  bd->add_option("--l", build.l, "Indicator length (odd, >= 5)");
  bd->add_option("--p", build.p, "Odd p for hp");
  bd->add_option("--set", build.set, "Comma-separated odd set for ha");
  auto* ei = app.add_subcommand("embed-interval", "Embed a poset into the interval [G1, G2]");
  ei->add_option("files", files, "Q.json G1.json G2.json")->required()->expected(3);
  ei->add_option("--strategy", strategy)->check(CLI::IsMember({"phi", "ha"}));
  auto* ve = app.add_subcommand("verify", "Re-verify an embedding file");
  ve->add_option("E", a)->required();
  auto* demo = app.add_subcommand("demo", "Run the (C5, K3) pipeline end to end");
  auto* ge = app.add_subcommand("generate", "Emit a named graph or poset");
  ge->add_option("name", gen_name, "complete | path | cycle | directed_cycle | grotzsch | generalized_mycielski | "
                                   "iterated_mycielski | subdivided_complete | circular_clique | poset | chain | antichain")
      ->required();
  ge->add_option("--n", gen.n);
  ge->add_option("--q", gen.q);
  ge->add_option("--length", gen.length);
  ge->add_option("--levels", gen.levels);
  ge->add_option("--iterations", gen.iterations);
  ge->add_option("--base-cycle", base_cycle, "Odd cycle length used as the Mycielski base");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kTrouble;
  }

  if (timeout->count() == 0)
    if (const char* env = std::getenv("HOMLAB_TIMEOUT_SECS")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0)) {
        std::cerr << "usage: HOMLAB_TIMEOUT_SECS must be a positive number\n";
        return kTrouble;
      }
      g.timeout_secs = v;
    }

  try {
    if (*hom) return cmd_hom(g, a, b);
    if (*cmp) return cmd_compare(g, a, b);
    if (*core) return cmd_core(g, a);
    if (*rigid) return cmd_rigid(g, a);
    if (*an) return cmd_analyze(g, a);
    if (*pt) return cmd_path_threshold(g, a);
    if (*ep) return cmd_embed_poset(g, a, order_kind);
    if (*bd) return cmd_build(g, what, build);
    if (*ei) return cmd_embed_interval(g, files, strategy);
    if (*ve) return cmd_verify(g, a);
    if (*demo) return cmd_demo(g);
    if (*ge) return cmd_generate(g, gen_name, gen, base_cycle);
  } catch (const ConstructionRejected& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kNegative;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kTrouble;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTrouble;
  }
  return kTrouble;
}
