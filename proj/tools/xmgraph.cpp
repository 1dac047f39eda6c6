// Command line front end: bundle I/O, constructions, verification
// commands, worked examples and DOT export.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "xmg/bundle.hpp"
#include "xmg/dot.hpp"
#include "xmg/random.hpp"

using namespace xmg;

namespace {

HomOptions g_hom_options;

GraphPtr get_graph(const Bundle& b, const std::string& name) {
  auto it = b.graphs.find(name);
  if (it == b.graphs.end())
    throw UsageError("no graph named '" + name + "' in the bundle");
  return it->second;
}

const GraphMorphism& get_morphism(const Bundle& b, const std::string& name) {
  auto it = b.morphisms.find(name);
  if (it == b.morphisms.end())
    throw UsageError("no morphism named '" + name + "' in the bundle");
  return it->second;
}

void print_tables(const GraphMorphism& m) {
  std::cout << "fv:";
  for (Idx v : m.fV) std::cout << " " << v;
  std::cout << "\nfa:";
  for (Idx a : m.fA) std::cout << " " << a;
  std::cout << "\n";
}

void print_graph_summary(const XMGraph& g) {
  std::cout << "vertices: " << g.nV << "\n";
  std::cout << "arcs: " << g.nA << "\n";
  auto classes = classify_arcs(g);
  Idx nonloop = 0, fixed = 0, unfixed = 0, distinguished = 0;
  for (const auto& c : classes) {
    switch (c.kind) {
      case ArcClassKind::nonloop: ++nonloop; break;
      case ArcClassKind::fixed_loop: ++fixed; break;
      case ArcClassKind::unfixed_loop: ++unfixed; break;
      case ArcClassKind::distinguished_loop: ++distinguished; break;
    }
  }
  std::cout << "orbits: " << classes.size() << " (nonloop " << nonloop
            << ", fixed-loop " << fixed << ", unfixed-loop " << unfixed
            << ", distinguished-loop " << distinguished << ")\n";
}

void save_result(const Bundle& in, const std::string& out_path,
                 const std::string& name, const GraphPtr& g) {
  if (out_path.empty()) return;
  Bundle out;
  out.theory = g->theory;
  if (in.theory && same_theory(*in.theory, *g->theory))
    out.theory_kind = in.theory_kind;
  out.graphs[name] = g;
  save_bundle_file(out, out_path);
  std::cout << "saved " << name << " to " << out_path << "\n";
}

void cmd_validate(const std::string& path) {
  Bundle b = load_bundle_file(path);
  if (b.theory)
    std::cout << "theory: |X| = " << b.theory->x_size() << ", |M| = "
              << b.theory->m_size()
              << (b.theory->reflexive ? ", reflexive" : "") << "\n";
  for (const auto& [name, g] : b.graphs)
    std::cout << "graph " << name << ": OK (" << g->nV << " vertices, "
              << g->nA << " arcs)\n";
  for (const auto& [name, h] : b.hypergraphs)
    std::cout << "hypergraph " << name << ": OK (" << h.nV << " vertices, "
              << h.edges.size() << " edges)\n";
  for (const auto& [name, p] : b.powergraphs)
    std::cout << "powergraph " << name << ": OK (" << p.nV << " vertices, "
              << p.edges.size() << " edges)\n";
  for (const auto& [name, r] : b.rfgraphs)
    std::cout << "rfgraph " << name << ": OK (" << r.nParts << " parts, "
              << r.vertex_parts.size() << " vertices)\n";
  for (const auto& [name, m] : b.morphisms) {
    (void)m;
    std::cout << "morphism " << name << ": OK\n";
  }
  std::cout << "bundle OK\n";
}

void cmd_example(const std::string& name) {
  if (name == "ex-2-3") {
    auto g = walking_band_graph();
    std::cout << "reflexive symmetric graph with a band (|X| = 2)\n";
    print_graph_summary(*g);
    for (const auto& c : classify_arcs(*g)) {
      std::cout << "orbit";
      for (Idx a : c.orbit) std::cout << " a" << a;
      std::cout << ": " << arc_class_kind_name(c.kind);
      if (c.kind == ArcClassKind::unfixed_loop)
        std::cout << " at v" << g->incidence(c.orbit[0], 0) << " (size "
                  << c.orbit.size() << ")";
      std::cout << "\n";
    }
    std::cout << dot_string(*g, DotMode::undirected);
    return;
  }
  if (name == "yoneda-x2") {
    std::cout << "representable shapes for |X| = 2\n";
    const struct {
      MonoidKind k;
      const char* label;
    } kinds[] = {
        {MonoidKind::oriented, "oriented"},
        {MonoidKind::symmetric, "symmetric"},
        {MonoidKind::reflexive_oriented, "reflexive-oriented"},
        {MonoidKind::reflexive_symmetric, "reflexive-symmetric"},
    };
    for (const auto& spec : kinds) {
      auto t = standard_theory(2, spec.k);
      auto A = representable(t, Obj::A);
      std::cout << spec.label << " A: (" << A->nV << ", " << A->nA << ")\n";
    }
    auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
    auto V = representable(t, Obj::V);
    bool dist =
        classify_arcs(*V)[0].kind == ArcClassKind::distinguished_loop;
    std::cout << "reflexive V: (" << V->nV << ", " << V->nA
              << ") distinguished loop: " << (dist ? "yes" : "no") << "\n";
    return;
  }
  if (name == "ex-4-1") {
    std::cout << "exponential of the vertex representable by itself\n";
    for (Idx n : {2u, 3u}) {
      auto t = standard_theory(n, MonoidKind::symmetric);
      auto V = representable(t, Obj::V);
      Exponential E = exponential(V, V);
      bool loop = E.graph->nA == 1 && is_loop_arc(*E.graph, 0);
      std::cout << "symmetric |X| = " << n << ": " << E.graph->nV
                << " vertex, " << E.graph->nA
                << " arc, fixed loop: " << (loop ? "yes" : "no") << "\n";
    }
    std::cout << "powers by the vertex representable (seeded trials)\n";
    auto t = standard_theory(2, MonoidKind::symmetric);
    auto V = representable(t, Obj::V);
    SplitMix64 rng(41);
    for (int trial = 1; trial <= 5; ++trial) {
      auto G = random_graph(t, 3, 6, rng);
      Exponential E = exponential(G, V);
      std::uint64_t expect = 1;
      for (Idx x = 0; x < t->x_size(); ++x) expect *= G->nV;
      std::cout << "trial " << trial << ": |G(V)| = " << G->nV
                << ", |G^V(A)| = " << E.graph->nA << ", expected " << expect
                << (E.graph->nA == expect ? " ok" : " MISMATCH") << "\n";
    }
    return;
  }
  if (name == "ex-4-2") {
    auto t = standard_theory(2, MonoidKind::symmetric);
    auto L = loop_pair_graph(t);
    auto A = representable(t, Obj::A);
    Exponential E = exponential(L, A);
    std::cout << "two-loop graph to the arc representable (symmetric, "
                 "|X| = 2)\n";
    print_graph_summary(*E.graph);
    auto digits = [&](Idx p) {
      return std::to_string(E.arcs[p].g[0]) + std::to_string(E.arcs[p].g[1]);
    };
    for (const auto& c : classify_arcs(*E.graph)) {
      std::cout << "orbit";
      for (Idx a : c.orbit) std::cout << " " << digits(a);
      std::cout << ": " << arc_class_kind_name(c.kind) << "\n";
    }
    GraphMorphism ev = eval_morphism(E);
    bool all = true;
    for (Idx p = 0; p < E.graph->nA; ++p)
      all = all && ev.fA[p * A->nA + 0] == E.arcs[p].g[0];
    std::cout << "eval(xy, a_1) = x for all arcs: " << (all ? "yes" : "no")
              << "\n";
    return;
  }
  if (name == "ex-4-3") {
    auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
    auto L = loop_pair_graph(t);
    auto A = representable(t, Obj::A);
    Exponential E = exponential(L, A);
    std::cout << "two-loop reflexive graph to the arc representable "
                 "(reflexive symmetric, |X| = 2)\n";
    std::cout << "vertices: " << E.graph->nV << "\n";
    std::cout << "arcs: " << E.graph->nA << "\n";
    Idx fixed = 0, unfixed_orbits = 0, cross_orbits = 0;
    Idx per_vertex[2] = {0, 0};
    for (const auto& c : classify_arcs(*E.graph)) {
      switch (c.kind) {
        case ArcClassKind::fixed_loop:
          fixed += static_cast<Idx>(c.orbit.size());
          per_vertex[E.graph->incidence(c.orbit[0], 0)] +=
              static_cast<Idx>(c.orbit.size());
          break;
        case ArcClassKind::distinguished_loop:
          ++fixed;
          per_vertex[E.graph->incidence(c.orbit[0], 0)]++;
          break;
        case ArcClassKind::unfixed_loop: ++unfixed_orbits; break;
        case ArcClassKind::nonloop: ++cross_orbits; break;
      }
    }
    std::cout << "fixed loops: " << fixed << " (" << per_vertex[0]
              << " at vertex 0, " << per_vertex[1]
              << " at vertex 1, 1 distinguished each)\n";
    std::cout << "unfixed-loop orbits of size 2: " << unfixed_orbits << "\n";
    std::cout << "cross-edge orbits of size 2: " << cross_orbits << "\n";
    std::cout << "total: " << fixed << " + " << 2 * unfixed_orbits << " + "
              << 2 * cross_orbits << " = " << E.graph->nA << "\n";
    return;
  }
  throw UsageError("unknown example '" + name +
                   "' (try ex-2-3, yoneda-x2, ex-4-1, ex-4-2, ex-4-3)");
}

void cmd_adjunction_check(const std::string& flavor_name_, Idx trials,
                          std::uint64_t seed, Idx x_size) {
  auto flavor = flavor_from_name(flavor_name_);
  if (!flavor) throw UsageError("unknown flavor '" + flavor_name_ + "'");
  MonoidKind kind = *flavor == FGraphFlavor::rpower
                        ? MonoidKind::reflexive_symmetric
                        : MonoidKind::symmetric;
  auto t = standard_theory(x_size, kind);
  SplitMix64 rng(seed);
  Idx passes = 0;
  for (Idx trial = 1; trial <= trials; ++trial) {
    auto G = random_graph(t, 3, 8, rng);
    std::size_t lhs = 0, rhs = 0;
    switch (*flavor) {
      case FGraphFlavor::hyper: {
        Hypergraph H = random_hypergraph(3, 3, 3, rng);
        lhs = hyper_homs(hyper_realize(G).hg, H).size();
        rhs = enumerate_homs(G, hyper_nerve(H, t).graph, g_hom_options).size();
        break;
      }
      case FGraphFlavor::power: {
        PowerGraph P = random_powergraph(x_size, 3, 3, rng);
        lhs = power_homs(power_realize(G).pg, P).size();
        rhs = enumerate_homs(G, power_nerve(P, t).graph, g_hom_options).size();
        break;
      }
      case FGraphFlavor::rpower: {
        ReflexiveFGraph R = random_rfgraph(x_size, 3, 2, rng);
        lhs = rpower_homs(rpower_realize(G).rg, R).size();
        rhs = enumerate_homs(G, rpower_nerve(R, t).graph, g_hom_options).size();
        break;
      }
    }
    bool ok = lhs == rhs;
    passes += ok;
    std::cout << "trial " << trial << ": |hom(R(G),H)| = " << lhs
              << ", |hom(G,N(H))| = " << rhs << (ok ? " ok" : " MISMATCH")
              << "\n";
  }
  std::cout << passes << "/" << trials << " bijection passes\n";
  if (passes != trials) throw ValidationError("adjunction check failed");
}

void cmd_fixed_point(const Bundle& b, const std::string& name,
                     const std::string& flavor_name_, Idx x_size) {
  auto flavor = flavor_from_name(flavor_name_);
  if (!flavor) throw UsageError("unknown flavor '" + flavor_name_ + "'");
  if (b.graphs.count(name)) {
    auto unit = nerve_unit(b.graphs.at(name), *flavor);
    std::cout << "unit vertex-bijective: "
              << (unit.vertex_bijective ? "yes" : "no") << "\n";
    std::cout << "unit arc-bijective: "
              << (unit.arc_bijective ? "yes" : "no") << "\n";
    std::cout << "fixed point: " << (unit.iso() ? "yes" : "no") << "\n";
    return;
  }
  MonoidKind kind = *flavor == FGraphFlavor::rpower
                        ? MonoidKind::reflexive_symmetric
                        : MonoidKind::symmetric;
  CounitReport rep;
  if (*flavor == FGraphFlavor::hyper && b.hypergraphs.count(name)) {
    rep = hyper_counit(b.hypergraphs.at(name), standard_theory(x_size, kind));
  } else if (*flavor == FGraphFlavor::power && b.powergraphs.count(name)) {
    const PowerGraph& p = b.powergraphs.at(name);
    rep = power_counit(p, standard_theory(p.arity, kind));
  } else if (*flavor == FGraphFlavor::rpower && b.rfgraphs.count(name)) {
    const ReflexiveFGraph& r = b.rfgraphs.at(name);
    rep = rpower_counit(r, standard_theory(r.arity, kind));
  } else {
    throw UsageError("no object named '" + name + "' for flavor " +
                     flavor_name_);
  }
  std::cout << "counit edge-bijective: "
            << (rep.edge_bijective ? "yes" : "no") << "\n";
  std::cout << "counit vertex-bijective: "
            << (rep.vertex_bijective ? "yes" : "no") << "\n";
  std::cout << "fixed point: " << (rep.iso() ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite graph calculus over two-object theories"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("XMGRAPH_BUDGET"))
    g_hom_options.budget = std::strtoull(env, nullptr, 10);

  std::string bundle_path, name_a, name_b, name_c, name_d;
  std::string out_path, out_name = "result";
  std::string flavor = "hyper", mode = "auto", case_name = "power-graph";
  Idx x_size = 2;
  Idx trials = 20;
  std::uint64_t seed = 1;
  std::uint64_t max_vertices = 1'000'000, max_arcs = 1'000'000;
  bool count_only = false, serial = false;

  auto* validate = app.add_subcommand("validate", "load and re-check a bundle");
  validate->add_option("bundle", bundle_path)->required();

  auto* homs = app.add_subcommand("homs", "enumerate morphisms G -> H");
  homs->add_option("bundle", bundle_path)->required();
  homs->add_option("G", name_a)->required();
  homs->add_option("H", name_b)->required();
  homs->add_flag("--count-only", count_only);
  homs->add_flag("--serial", serial);

  auto* prod = app.add_subcommand("product", "pointwise product");
  auto* coprod = app.add_subcommand("coproduct", "disjoint union");
  for (auto* cmd : {prod, coprod}) {
    cmd->add_option("bundle", bundle_path)->required();
    cmd->add_option("G", name_a)->required();
    cmd->add_option("H", name_b)->required();
    cmd->add_option("--out", out_path);
    cmd->add_option("--name", out_name);
  }

  auto* eq = app.add_subcommand("equalizer", "equalizer of a parallel pair");
  auto* coeq =
      app.add_subcommand("coequalizer", "coequalizer of a parallel pair");
  for (auto* cmd : {eq, coeq}) {
    cmd->add_option("bundle", bundle_path)->required();
    cmd->add_option("f", name_a)->required();
    cmd->add_option("g", name_b)->required();
    cmd->add_option("--out", out_path);
    cmd->add_option("--name", out_name);
  }

  auto* expo = app.add_subcommand("exponential", "exponential object G^H");
  expo->add_option("bundle", bundle_path)->required();
  expo->add_option("G", name_a)->required();
  expo->add_option("H", name_b)->required();
  expo->add_option("--max-vertices", max_vertices);
  expo->add_option("--max-arcs", max_arcs);
  expo->add_option("--out", out_path);
  expo->add_option("--name", out_name);

  auto* curry_cmd = app.add_subcommand("curry", "transpose h : FxH -> G");
  curry_cmd->add_option("bundle", bundle_path)->required();
  curry_cmd->add_option("morphism", name_a)->required();
  curry_cmd->add_option("F", name_b)->required();
  curry_cmd->add_option("H", name_c)->required();
  curry_cmd->add_option("G", name_d)->required();

  auto* uncurry_cmd =
      app.add_subcommand("uncurry", "transpose k : F -> G^H back");
  uncurry_cmd->add_option("bundle", bundle_path)->required();
  uncurry_cmd->add_option("morphism", name_a)->required();
  uncurry_cmd->add_option("F", name_b)->required();
  uncurry_cmd->add_option("H", name_c)->required();
  uncurry_cmd->add_option("G", name_d)->required();

  auto* nerve = app.add_subcommand("nerve", "nerve of a conventional object");
  nerve->add_option("bundle", bundle_path)->required();
  nerve->add_option("name", name_a)->required();
  nerve->add_option("--flavor", flavor);
  nerve->add_option("--x-size", x_size);
  nerve->add_option("--out", out_path);
  nerve->add_option("--name-out", out_name);

  auto* realize = app.add_subcommand("realize", "realization of a graph");
  realize->add_option("bundle", bundle_path)->required();
  realize->add_option("G", name_a)->required();
  realize->add_option("--flavor", flavor);
  realize->add_option("--out", out_path);
  realize->add_option("--name-out", out_name);

  auto* fixed = app.add_subcommand("fixed-point",
                                   "unit/counit bijectivity report");
  fixed->add_option("bundle", bundle_path)->required();
  fixed->add_option("name", name_a)->required();
  fixed->add_option("--flavor", flavor);
  fixed->add_option("--x-size", x_size);

  auto* adj = app.add_subcommand("adjunction-check",
                                 "seeded random hom-set comparisons");
  adj->add_option("--flavor", flavor);
  adj->add_option("--trials", trials);
  adj->add_option("--seed", seed);
  adj->add_option("--x-size", x_size);

  auto* obstruction =
      app.add_subcommand("obstruction", "non-existence certificate");
  obstruction->add_option("--case", case_name);
  obstruction->add_option("--x-size", x_size);

  auto* example = app.add_subcommand("example", "worked examples");
  example->add_option("name", name_a)->required();

  auto* dot = app.add_subcommand("export-dot", "DOT description of a graph");
  dot->add_option("bundle", bundle_path)->required();
  dot->add_option("G", name_a)->required();
  dot->add_option("--out", out_path);
  dot->add_option("--mode", mode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) {
      cmd_validate(bundle_path);
    } else if (homs->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      HomOptions opts = g_hom_options;
      opts.parallel = !serial;
      auto list =
          enumerate_homs(get_graph(b, name_a), get_graph(b, name_b), opts);
      std::cout << "homs: " << list.size() << "\n";
      if (!count_only) {
        for (std::size_t i = 0; i < list.size(); ++i) {
          std::cout << "hom " << i << "\n";
          print_tables(list[i]);
        }
      }
    } else if (prod->parsed() || coprod->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      auto G = get_graph(b, name_a);
      auto H = get_graph(b, name_b);
      GraphPtr r =
          prod->parsed() ? product(G, H).graph : coproduct(G, H).graph;
      print_graph_summary(*r);
      save_result(b, out_path, out_name, r);
    } else if (eq->parsed() || coeq->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      const auto& f = get_morphism(b, name_a);
      const auto& g = get_morphism(b, name_b);
      GraphPtr r =
          eq->parsed() ? equalizer(f, g).graph : coequalizer(f, g).graph;
      print_graph_summary(*r);
      save_result(b, out_path, out_name, r);
    } else if (expo->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      ExpoOptions opts;
      opts.max_vertices = max_vertices;
      opts.max_arcs = max_arcs;
      opts.hom = g_hom_options;
      Exponential E =
          exponential(get_graph(b, name_a), get_graph(b, name_b), opts);
      print_graph_summary(*E.graph);
      save_result(b, out_path, out_name, E.graph);
    } else if (curry_cmd->parsed() || uncurry_cmd->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      const auto& h = get_morphism(b, name_a);
      auto F = get_graph(b, name_b);
      auto H = get_graph(b, name_c);
      auto G = get_graph(b, name_d);
      Exponential E = exponential(G, H);
      GraphMorphism r =
          curry_cmd->parsed() ? curry(h, F, H, E) : uncurry(h, F, H, E);
      print_tables(r);
    } else if (nerve->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      auto fl = flavor_from_name(flavor);
      if (!fl) throw UsageError("unknown flavor '" + flavor + "'");
      NerveResult N;
      if (*fl == FGraphFlavor::hyper) {
        if (!b.hypergraphs.count(name_a))
          throw UsageError("no hypergraph named '" + name_a + "'");
        N = hyper_nerve(b.hypergraphs.at(name_a),
                        standard_theory(x_size, MonoidKind::symmetric));
      } else if (*fl == FGraphFlavor::power) {
        if (!b.powergraphs.count(name_a))
          throw UsageError("no powergraph named '" + name_a + "'");
        const PowerGraph& p = b.powergraphs.at(name_a);
        N = power_nerve(p, standard_theory(p.arity, MonoidKind::symmetric));
      } else {
        if (!b.rfgraphs.count(name_a))
          throw UsageError("no rfgraph named '" + name_a + "'");
        const ReflexiveFGraph& r = b.rfgraphs.at(name_a);
        N = rpower_nerve(
            r, standard_theory(r.arity, MonoidKind::reflexive_symmetric));
      }
      print_graph_summary(*N.graph);
      if (!out_path.empty()) {
        Bundle out;
        out.theory = N.graph->theory;
        out.graphs[out_name] = N.graph;
        save_bundle_file(out, out_path);
        std::cout << "saved " << out_name << " to " << out_path << "\n";
      }
    } else if (realize->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      auto fl = flavor_from_name(flavor);
      if (!fl) throw UsageError("unknown flavor '" + flavor + "'");
      auto G = get_graph(b, name_a);
      Bundle out;
      if (*fl == FGraphFlavor::hyper) {
        auto r = hyper_realize(G);
        std::cout << "hypergraph: " << r.hg.nV << " vertices, "
                  << r.hg.edges.size() << " edges\n";
        for (const auto& e : r.hg.edges) {
          std::cout << "edge:";
          for (Idx v : e) std::cout << " " << v;
          std::cout << "\n";
        }
        out.hypergraphs[out_name] = r.hg;
      } else if (*fl == FGraphFlavor::power) {
        auto r = power_realize(G);
        std::cout << "powergraph: " << r.pg.nV << " vertices, "
                  << r.pg.edges.size() << " edges\n";
        for (const auto& e : r.pg.edges) {
          std::cout << "edge:";
          for (Idx v : e) std::cout << " " << v;
          std::cout << "\n";
        }
        out.powergraphs[out_name] = r.pg;
      } else {
        auto r = rpower_realize(G);
        std::cout << "rfgraph: " << r.rg.nParts << " parts, "
                  << r.rg.vertex_parts.size() << " vertices\n";
        out.rfgraphs[out_name] = r.rg;
      }
      if (!out_path.empty()) {
        save_bundle_file(out, out_path);
        std::cout << "saved " << out_name << " to " << out_path << "\n";
      }
    } else if (fixed->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      cmd_fixed_point(b, name_a, flavor, x_size);
    } else if (adj->parsed()) {
      cmd_adjunction_check(flavor, trials, seed, x_size);
    } else if (obstruction->parsed()) {
      auto c = obstruction_case_from_name(case_name);
      if (!c) throw UsageError("unknown case '" + case_name + "'");
      auto cert = obstruction_certificate(*c, x_size);
      std::cout << certificate_report(cert);
      if (!cert.verified) return 2;
    } else if (example->parsed()) {
      cmd_example(name_a);
    } else if (dot->parsed()) {
      Bundle b = load_bundle_file(bundle_path);
      auto G = get_graph(b, name_a);
      DotMode m = DotMode::automatic;
      if (mode == "undirected") m = DotMode::undirected;
      else if (mode == "directed") m = DotMode::directed;
      else if (mode != "auto") throw UsageError("unknown mode '" + mode + "'");
      if (out_path.empty()) {
        export_dot(*G, std::cout, m);
      } else {
        std::ofstream os(out_path);
        if (!os) throw UsageError("cannot write " + out_path);
        export_dot(*G, os, m);
        std::cout << "wrote " << out_path << "\n";
      }
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
