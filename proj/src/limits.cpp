#include "xmg/limits.hpp"

#include <algorithm>
#include <numeric>

namespace xmg {

namespace {

void require_same_theory(const XMGraph& a, const XMGraph& b) {
  if (!same_theory(*a.theory, *b.theory))
    throw UsageError("graphs live over different theories");
}

void require_parallel(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(*f.src == *g.src) || !(*f.dst == *g.dst))
    throw UsageError("morphisms do not form a parallel pair");
}

// Union-find with least-index representatives.
struct UF {
  std::vector<Idx> parent;
  explicit UF(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Idx find(Idx a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  // Returns true if a merge happened.
  bool unite(Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<Idx> class_index(UF& uf, std::size_t n, Idx& count) {
  std::vector<Idx> reps;
  for (Idx i = 0; i < n; ++i)
    if (uf.find(i) == i) reps.push_back(i);
  std::vector<Idx> idx(n);
  for (Idx i = 0; i < n; ++i) {
    Idx r = uf.find(i);
    idx[i] = static_cast<Idx>(
        std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
  }
  count = static_cast<Idx>(reps.size());
  return idx;
}

}  // namespace

GraphPtr terminal_graph(TheoryPtr theory) {
  const Theory& t = *theory;
  std::vector<Idx> inc(t.x_size(), 0);
  std::vector<Idx> act(t.m_size(), 0);
  std::vector<Idx> loops;
  if (t.reflexive) loops = {0};
  return make_graph(std::move(theory), 1, std::move(inc), std::move(act),
                    std::move(loops));
}

GraphPtr initial_graph(TheoryPtr theory) {
  return make_graph(std::move(theory), 0, {}, {}, {});
}

ProductResult product(const GraphPtr& G, const GraphPtr& H) {
  require_same_theory(*G, *H);
  const Theory& t = *G->theory;
  XMGraph p;
  p.theory = G->theory;
  p.nV = G->nV * H->nV;
  p.nA = G->nA * H->nA;
  p.inc.resize(static_cast<std::size_t>(p.nA) * t.x_size());
  p.act.resize(static_cast<std::size_t>(p.nA) * t.m_size());
  auto vid = [&](Idx a, Idx b) { return a * H->nV + b; };
  auto aid = [&](Idx a, Idx b) { return a * H->nA + b; };
  for (Idx a = 0; a < G->nA; ++a) {
    for (Idx b = 0; b < H->nA; ++b) {
      Idx arc = aid(a, b);
      for (Idx x = 0; x < t.x_size(); ++x)
        p.inc[arc * t.x_size() + x] = vid(G->incidence(a, x), H->incidence(b, x));
      for (Idx m = 0; m < t.m_size(); ++m)
        p.act[arc * t.m_size() + m] = aid(G->action(a, m), H->action(b, m));
    }
  }
  if (t.reflexive) {
    p.loops.resize(p.nV);
    for (Idx u = 0; u < G->nV; ++u)
      for (Idx v = 0; v < H->nV; ++v)
        p.loops[vid(u, v)] = aid(G->loop_of(u), H->loop_of(v));
  }
  validate_graph(p);

  ProductResult out;
  out.graph = std::make_shared<const XMGraph>(std::move(p));
  out.proj1.src = out.graph;
  out.proj1.dst = G;
  out.proj2.src = out.graph;
  out.proj2.dst = H;
  out.proj1.fV.resize(out.graph->nV);
  out.proj2.fV.resize(out.graph->nV);
  out.proj1.fA.resize(out.graph->nA);
  out.proj2.fA.resize(out.graph->nA);
  for (Idx u = 0; u < G->nV; ++u)
    for (Idx v = 0; v < H->nV; ++v) {
      out.proj1.fV[vid(u, v)] = u;
      out.proj2.fV[vid(u, v)] = v;
    }
  for (Idx a = 0; a < G->nA; ++a)
    for (Idx b = 0; b < H->nA; ++b) {
      out.proj1.fA[aid(a, b)] = a;
      out.proj2.fA[aid(a, b)] = b;
    }
  return out;
}

CoproductResult coproduct(const GraphPtr& G, const GraphPtr& H) {
  require_same_theory(*G, *H);
  const Theory& t = *G->theory;
  XMGraph c;
  c.theory = G->theory;
  c.nV = G->nV + H->nV;
  c.nA = G->nA + H->nA;
  c.inc.resize(static_cast<std::size_t>(c.nA) * t.x_size());
  c.act.resize(static_cast<std::size_t>(c.nA) * t.m_size());
  for (Idx a = 0; a < G->nA; ++a) {
    for (Idx x = 0; x < t.x_size(); ++x)
      c.inc[a * t.x_size() + x] = G->incidence(a, x);
    for (Idx m = 0; m < t.m_size(); ++m)
      c.act[a * t.m_size() + m] = G->action(a, m);
  }
  for (Idx b = 0; b < H->nA; ++b) {
    Idx arc = G->nA + b;
    for (Idx x = 0; x < t.x_size(); ++x)
      c.inc[arc * t.x_size() + x] = G->nV + H->incidence(b, x);
    for (Idx m = 0; m < t.m_size(); ++m)
      c.act[arc * t.m_size() + m] = G->nA + H->action(b, m);
  }
  if (t.reflexive) {
    c.loops.resize(c.nV);
    for (Idx v = 0; v < G->nV; ++v) c.loops[v] = G->loop_of(v);
    for (Idx v = 0; v < H->nV; ++v) c.loops[G->nV + v] = G->nA + H->loop_of(v);
  }
  validate_graph(c);

  CoproductResult out;
  out.graph = std::make_shared<const XMGraph>(std::move(c));
  out.inj1.src = G;
  out.inj1.dst = out.graph;
  out.inj2.src = H;
  out.inj2.dst = out.graph;
  out.inj1.fV.resize(G->nV);
  out.inj1.fA.resize(G->nA);
  out.inj2.fV.resize(H->nV);
  out.inj2.fA.resize(H->nA);
  for (Idx v = 0; v < G->nV; ++v) out.inj1.fV[v] = v;
  for (Idx a = 0; a < G->nA; ++a) out.inj1.fA[a] = a;
  for (Idx v = 0; v < H->nV; ++v) out.inj2.fV[v] = G->nV + v;
  for (Idx a = 0; a < H->nA; ++a) out.inj2.fA[a] = G->nA + a;
  return out;
}

EqualizerResult equalizer(const GraphMorphism& f, const GraphMorphism& g) {
  require_parallel(f, g);
  const XMGraph& G = *f.src;
  const Theory& t = *G.theory;
  std::vector<Idx> keepV, keepA;
  for (Idx v = 0; v < G.nV; ++v)
    if (f.fV[v] == g.fV[v]) keepV.push_back(v);
  for (Idx a = 0; a < G.nA; ++a)
    if (f.fA[a] == g.fA[a]) keepA.push_back(a);

  std::vector<Idx> vmap(G.nV, kNoIdx), amap(G.nA, kNoIdx);
  for (Idx i = 0; i < keepV.size(); ++i) vmap[keepV[i]] = i;
  for (Idx i = 0; i < keepA.size(); ++i) amap[keepA[i]] = i;

  XMGraph e;
  e.theory = G.theory;
  e.nV = static_cast<Idx>(keepV.size());
  e.nA = static_cast<Idx>(keepA.size());
  e.inc.resize(static_cast<std::size_t>(e.nA) * t.x_size());
  e.act.resize(static_cast<std::size_t>(e.nA) * t.m_size());
  for (Idx i = 0; i < e.nA; ++i) {
    Idx a = keepA[i];
    for (Idx x = 0; x < t.x_size(); ++x)
      e.inc[i * t.x_size() + x] = vmap[G.incidence(a, x)];
    for (Idx m = 0; m < t.m_size(); ++m)
      e.act[i * t.m_size() + m] = amap[G.action(a, m)];
  }
  if (t.reflexive) {
    e.loops.resize(e.nV);
    for (Idx i = 0; i < e.nV; ++i) e.loops[i] = amap[G.loop_of(keepV[i])];
  }
  validate_graph(e);

  EqualizerResult out;
  out.graph = std::make_shared<const XMGraph>(std::move(e));
  out.include.src = out.graph;
  out.include.dst = f.src;
  out.include.fV = keepV;
  out.include.fA = keepA;
  return out;
}

CoequalizerResult coequalizer(const GraphMorphism& f, const GraphMorphism& g) {
  require_parallel(f, g);
  const XMGraph& H = *f.dst;
  const Theory& t = *H.theory;
  UF ufV(H.nV), ufA(H.nA);
  for (Idx v = 0; v < f.src->nV; ++v) ufV.unite(f.fV[v], g.fV[v]);
  for (Idx a = 0; a < f.src->nA; ++a) ufA.unite(f.fA[a], g.fA[a]);

  // close the congruence under incidence, action and loops
  bool changed = true;
  while (changed) {
    changed = false;
    for (Idx a = 0; a < H.nA; ++a) {
      Idx r = ufA.find(a);
      if (r == a) continue;
      for (Idx m = 0; m < t.m_size(); ++m)
        changed |= ufA.unite(H.action(a, m), H.action(r, m));
      for (Idx x = 0; x < t.x_size(); ++x)
        changed |= ufV.unite(H.incidence(a, x), H.incidence(r, x));
    }
    if (t.reflexive) {
      for (Idx v = 0; v < H.nV; ++v) {
        Idx r = ufV.find(v);
        if (r != v) changed |= ufA.unite(H.loop_of(v), H.loop_of(r));
      }
    }
  }

  Idx nV = 0, nA = 0;
  std::vector<Idx> vmap = class_index(ufV, H.nV, nV);
  std::vector<Idx> amap = class_index(ufA, H.nA, nA);

  XMGraph q;
  q.theory = H.theory;
  q.nV = nV;
  q.nA = nA;
  q.inc.resize(static_cast<std::size_t>(nA) * t.x_size());
  q.act.resize(static_cast<std::size_t>(nA) * t.m_size());
  for (Idx a = 0; a < H.nA; ++a) {
    Idx arc = amap[a];
    for (Idx x = 0; x < t.x_size(); ++x)
      q.inc[arc * t.x_size() + x] = vmap[H.incidence(a, x)];
    for (Idx m = 0; m < t.m_size(); ++m)
      q.act[arc * t.m_size() + m] = amap[H.action(a, m)];
  }
  if (t.reflexive) {
    q.loops.resize(nV);
    for (Idx v = 0; v < H.nV; ++v) q.loops[vmap[v]] = amap[H.loop_of(v)];
  }
  validate_graph(q);

  CoequalizerResult out;
  out.graph = std::make_shared<const XMGraph>(std::move(q));
  out.quotient.src = f.dst;
  out.quotient.dst = out.graph;
  out.quotient.fV = std::move(vmap);
  out.quotient.fA = std::move(amap);
  return out;
}

SubgraphResult arc_generated_subgraph(const GraphPtr& G,
                                      const std::vector<Idx>& seed_arcs,
                                      const std::vector<Idx>& extra_vertices) {
  const Theory& t = *G->theory;
  std::vector<bool> keepA(G->nA, false), keepV(G->nV, false);
  for (Idx a : seed_arcs) {
    keepA[a] = true;
    for (Idx m = 0; m < t.m_size(); ++m) keepA[G->action(a, m)] = true;
  }
  for (Idx a = 0; a < G->nA; ++a)
    if (keepA[a])
      for (Idx x = 0; x < t.x_size(); ++x) keepV[G->incidence(a, x)] = true;
  for (Idx v : extra_vertices) keepV[v] = true;
  if (t.reflexive)
    for (Idx v = 0; v < G->nV; ++v)
      if (keepV[v]) keepA[G->loop_of(v)] = true;

  std::vector<Idx> keptV, keptA;
  for (Idx v = 0; v < G->nV; ++v)
    if (keepV[v]) keptV.push_back(v);
  for (Idx a = 0; a < G->nA; ++a)
    if (keepA[a]) keptA.push_back(a);
  std::vector<Idx> vmap(G->nV, kNoIdx), amap(G->nA, kNoIdx);
  for (Idx i = 0; i < keptV.size(); ++i) vmap[keptV[i]] = i;
  for (Idx i = 0; i < keptA.size(); ++i) amap[keptA[i]] = i;

  XMGraph s;
  s.theory = G->theory;
  s.nV = static_cast<Idx>(keptV.size());
  s.nA = static_cast<Idx>(keptA.size());
  s.inc.resize(static_cast<std::size_t>(s.nA) * t.x_size());
  s.act.resize(static_cast<std::size_t>(s.nA) * t.m_size());
  for (Idx i = 0; i < s.nA; ++i) {
    Idx a = keptA[i];
    for (Idx x = 0; x < t.x_size(); ++x)
      s.inc[i * t.x_size() + x] = vmap[G->incidence(a, x)];
    for (Idx m = 0; m < t.m_size(); ++m)
      s.act[i * t.m_size() + m] = amap[G->action(a, m)];
  }
  if (t.reflexive) {
    s.loops.resize(s.nV);
    for (Idx i = 0; i < s.nV; ++i) s.loops[i] = amap[G->loop_of(keptV[i])];
  }
  validate_graph(s);

  SubgraphResult out;
  out.graph = std::make_shared<const XMGraph>(std::move(s));
  out.include.src = out.graph;
  out.include.dst = G;
  out.include.fV = keptV;
  out.include.fA = keptA;
  return out;
}

}  // namespace xmg
