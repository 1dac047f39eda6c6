#include "xmg/random.hpp"

#include <algorithm>

namespace xmg {

namespace {

// Classifying morphism of a vertex: the unique map V_ -> G naming v.
GraphMorphism vertex_name(const GraphPtr& reprV, const GraphPtr& G, Idx v) {
  GraphMorphism f;
  f.src = reprV;
  f.dst = G;
  f.fV = {v};
  if (G->theory->reflexive) f.fA = {G->loop_of(v)};
  return f;
}

}  // namespace

GraphPtr random_graph(const TheoryPtr& theory, Idx max_vertices, Idx max_arcs,
                      SplitMix64& rng) {
  GraphPtr reprV = representable(theory, Obj::V);
  GraphPtr reprA = representable(theory, Obj::A);

  // sum of a few representables
  Idx n_arc_blocks = 1 + rng.below(2);
  Idx n_vert_blocks = rng.below(3);
  GraphPtr g = initial_graph(theory);
  for (Idx i = 0; i < n_arc_blocks; ++i) g = coproduct(g, reprA).graph;
  for (Idx i = 0; i < n_vert_blocks; ++i) g = coproduct(g, reprV).graph;

  // a few random vertex identifications
  Idx merges = rng.below(4);
  for (Idx i = 0; i < merges && g->nV > 1; ++i) {
    Idx u = rng.below(g->nV);
    Idx v = rng.below(g->nV);
    if (u == v) continue;
    g = coequalizer(vertex_name(reprV, g, u), vertex_name(reprV, g, v)).graph;
  }

  // shrink to the requested size by keeping random arc orbits
  for (int guard = 0; guard < 64; ++guard) {
    if (g->nA <= max_arcs && g->nV <= max_vertices) break;
    auto classes = classify_arcs(*g);
    std::vector<Idx> seeds;
    for (const auto& cls : classes) {
      bool essential = g->theory->reflexive &&
                       cls.kind == ArcClassKind::distinguished_loop;
      if (essential) continue;
      if (rng.coin()) seeds.push_back(cls.orbit.front());
    }
    if (seeds.size() == classes.size()) seeds.pop_back();
    GraphPtr smaller = arc_generated_subgraph(g, seeds, {}).graph;
    if (smaller->nA == g->nA && smaller->nV == g->nV && !seeds.empty())
      continue;
    if (smaller->nA == 0 && smaller->nV == 0) {
      // keep at least one vertex so the graph stays interesting
      Idx keep = g->nV > 0 ? rng.below(g->nV) : 0;
      smaller = arc_generated_subgraph(
                    g, {}, g->nV > 0 ? std::vector<Idx>{keep}
                                     : std::vector<Idx>{})
                    .graph;
    }
    g = smaller;
  }
  return g;
}

Hypergraph random_hypergraph(Idx max_vertices, Idx max_edges, Idx max_card,
                             SplitMix64& rng) {
  Hypergraph h;
  h.nV = 1 + rng.below(max_vertices);
  Idx n_edges = rng.below(max_edges + 1);
  for (Idx e = 0; e < n_edges; ++e) {
    Idx card = rng.below(std::min(max_card, h.nV) + 1);
    std::vector<Idx> pool(h.nV);
    for (Idx v = 0; v < h.nV; ++v) pool[v] = v;
    for (Idx i = 0; i < card; ++i)
      std::swap(pool[i], pool[i + rng.below(h.nV - i)]);
    std::vector<Idx> edge(pool.begin(), pool.begin() + card);
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  validate_hypergraph(h);
  return h;
}

PowerGraph random_powergraph(Idx arity, Idx max_vertices, Idx max_edges,
                             SplitMix64& rng) {
  PowerGraph p;
  p.arity = arity;
  p.nV = 1 + rng.below(max_vertices);
  Idx n_edges = rng.below(max_edges + 1);
  for (Idx e = 0; e < n_edges; ++e) {
    std::vector<Idx> ms(arity);
    for (Idx i = 0; i < arity; ++i) ms[i] = rng.below(p.nV);
    std::sort(ms.begin(), ms.end());
    p.edges.push_back(std::move(ms));
  }
  validate_powergraph(p);
  return p;
}

ReflexiveFGraph random_rfgraph(Idx arity, Idx max_vertices, Idx max_edges,
                               SplitMix64& rng) {
  ReflexiveFGraph r;
  r.arity = arity;
  Idx nv = 1 + rng.below(max_vertices);
  Idx ne = rng.below(max_edges + 1);
  r.nParts = nv + ne;
  for (Idx v = 0; v < nv; ++v) {
    r.vertex_parts.push_back(v);
    r.inc.push_back(std::vector<Idx>(arity, v));
  }
  for (Idx e = 0; e < ne; ++e) {
    std::vector<Idx> ms(arity);
    for (Idx i = 0; i < arity; ++i) ms[i] = rng.below(nv);
    std::sort(ms.begin(), ms.end());
    r.inc.push_back(std::move(ms));
  }
  validate_rfgraph(r);
  return r;
}

}  // namespace xmg
