#include "xmg/bridge.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "xmg/detail/uf.hpp"

namespace xmg {

namespace {

bool sorted_unique(const std::vector<Idx>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

bool sorted_multiset(const std::vector<Idx>& v) {
  return std::is_sorted(v.begin(), v.end());
}

void require_flavor_theory(const TheoryPtr& theory, FGraphFlavor flavor) {
  MonoidKind kind = flavor == FGraphFlavor::rpower
                        ? MonoidKind::reflexive_symmetric
                        : MonoidKind::symmetric;
  Theory want = make_standard_theory(static_cast<Idx>(theory->x_size()), kind);
  if (!same_theory(*theory, want))
    throw UsageError(std::string("this operation needs the standard ") +
                     monoid_kind_name(kind) + " theory");
}

// All maps X -> {0..n-1} in lexicographic order.
std::vector<std::vector<Idx>> all_tuples(Idx n, Idx k) {
  std::vector<std::vector<Idx>> out;
  if (n == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  std::vector<Idx> cur(k, 0);
  while (true) {
    out.push_back(cur);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++cur[pos] < n) break;
      cur[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

bool is_bijection(const std::vector<Idx>& f, Idx target_size) {
  if (f.size() != target_size) return false;
  std::vector<bool> hit(target_size, false);
  for (Idx v : f) {
    if (v >= target_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

bool ReflexiveFGraph::is_vertex(Idx p) const {
  return std::binary_search(vertex_parts.begin(), vertex_parts.end(), p);
}

void validate_hypergraph(const Hypergraph& h) {
  for (const auto& e : h.edges) {
    if (!sorted_unique(e))
      throw ValidationError("hypergraph edge is not a sorted vertex set");
    for (Idx v : e)
      if (v >= h.nV) throw ValidationError("hypergraph edge vertex out of range");
  }
}

void validate_powergraph(const PowerGraph& p) {
  for (const auto& e : p.edges) {
    if (e.size() != p.arity)
      throw ValidationError("power graph edge has the wrong multiset size");
    if (!sorted_multiset(e))
      throw ValidationError("power graph edge multiset is not sorted");
    for (Idx v : e)
      if (v >= p.nV) throw ValidationError("power graph edge vertex out of range");
  }
}

void validate_rfgraph(const ReflexiveFGraph& r) {
  if (!sorted_unique(r.vertex_parts) ||
      (!r.vertex_parts.empty() && r.vertex_parts.back() >= r.nParts))
    throw ValidationError("vertex subset is not a sorted subset of parts");
  if (r.inc.size() != r.nParts)
    throw ValidationError("incidence table size mismatch");
  for (Idx p = 0; p < r.nParts; ++p) {
    const auto& ms = r.inc[p];
    if (ms.size() != r.arity)
      throw ValidationError("part incidence has the wrong multiset size");
    if (!sorted_multiset(ms))
      throw ValidationError("part incidence multiset is not sorted");
    for (Idx v : ms)
      if (!r.is_vertex(v))
        throw ValidationError("part incidence names a non-vertex part");
    if (r.is_vertex(p)) {
      for (Idx v : ms)
        if (v != p)
          throw ValidationError("vertex part " + std::to_string(p) +
                                " is not a degenerate edge");
    }
  }
}

const char* flavor_name(FGraphFlavor f) {
  switch (f) {
    case FGraphFlavor::hyper: return "hyper";
    case FGraphFlavor::power: return "power";
    case FGraphFlavor::rpower: return "rpower";
  }
  return "?";
}

std::optional<FGraphFlavor> flavor_from_name(const std::string& s) {
  if (s == "hyper") return FGraphFlavor::hyper;
  if (s == "power") return FGraphFlavor::power;
  if (s == "rpower") return FGraphFlavor::rpower;
  return std::nullopt;
}

void validate_hyper_morphism(const Hypergraph& A, const Hypergraph& B,
                             const FGraphMorphism& f) {
  if (f.fE.size() != A.edges.size() || f.fV.size() != A.nV)
    throw ValidationError("morphism table size mismatch");
  for (Idx e : f.fE)
    if (e >= B.edges.size()) throw ValidationError("edge image out of range");
  for (Idx v : f.fV)
    if (v >= B.nV) throw ValidationError("vertex image out of range");
  for (Idx e = 0; e < A.edges.size(); ++e)
    if (image_set(f.fV, A.edges[e]) != B.edges[f.fE[e]])
      throw ValidationError("incidence square fails at edge " +
                            std::to_string(e));
}

void validate_power_morphism(const PowerGraph& A, const PowerGraph& B,
                             const FGraphMorphism& f) {
  if (A.arity != B.arity) throw UsageError("power graph arity mismatch");
  if (f.fE.size() != A.edges.size() || f.fV.size() != A.nV)
    throw ValidationError("morphism table size mismatch");
  for (Idx e : f.fE)
    if (e >= B.edges.size()) throw ValidationError("edge image out of range");
  for (Idx v : f.fV)
    if (v >= B.nV) throw ValidationError("vertex image out of range");
  for (Idx e = 0; e < A.edges.size(); ++e)
    if (multiset_map(f.fV, A.edges[e]) != B.edges[f.fE[e]])
      throw ValidationError("incidence square fails at edge " +
                            std::to_string(e));
}

void validate_rpower_morphism(const ReflexiveFGraph& A,
                              const ReflexiveFGraph& B,
                              const RFGraphMorphism& f) {
  if (A.arity != B.arity) throw UsageError("arity mismatch");
  if (f.fP.size() != A.nParts)
    throw ValidationError("morphism table size mismatch");
  for (Idx p : f.fP)
    if (p >= B.nParts) throw ValidationError("part image out of range");
  for (Idx v : A.vertex_parts)
    if (!B.is_vertex(f.fP[v]))
      throw ValidationError("vertex part mapped to a non-vertex part");
  for (Idx p = 0; p < A.nParts; ++p) {
    std::vector<Idx> img(A.arity);
    for (Idx i = 0; i < A.arity; ++i) img[i] = f.fP[A.inc[p][i]];
    std::sort(img.begin(), img.end());
    if (img != B.inc[f.fP[p]])
      throw ValidationError("incidence square fails at part " +
                            std::to_string(p));
  }
}

std::vector<std::vector<Idx>> multiset_power(Idx n, Idx k) {
  std::vector<std::vector<Idx>> out;
  std::vector<Idx> cur;
  // nondecreasing tuples of length k over {0..n-1}
  auto rec = [&](auto&& self, Idx start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Idx v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (n == 0) return out;
  rec(rec, 0);
  return out;
}

std::vector<Idx> multiset_map(const std::vector<Idx>& f,
                              const std::vector<Idx>& ms) {
  std::vector<Idx> out;
  out.reserve(ms.size());
  for (Idx v : ms) out.push_back(f[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Idx> image_set(const std::vector<Idx>& f,
                           const std::vector<Idx>& tuple) {
  std::vector<Idx> out;
  out.reserve(tuple.size());
  for (Idx v : tuple) out.push_back(f[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UniformityProfile uniformity_profile(const Hypergraph& h) {
  UniformityProfile out;
  out.cardinality.reserve(h.edges.size());
  for (const auto& e : h.edges)
    out.cardinality.push_back(static_cast<Idx>(e.size()));
  return out;
}

bool UniformityProfile::is_k_uniform(Idx k) const {
  return std::all_of(cardinality.begin(), cardinality.end(),
                     [&](Idx c) { return c == k; });
}

namespace {

// Builds the nerve graph shared by all three flavors. `vertices` is the
// nerve vertex count, `pairs` the (edge-or-part, tuple) arc list already
// in lexicographic order, and `accept` decided membership beforehand.
NerveResult assemble_nerve(const TheoryPtr& theory, Idx vertices,
                           std::vector<std::pair<Idx, std::vector<Idx>>> pairs,
                           const std::vector<Idx>* loop_arc_of_vertex) {
  const Theory& t = *theory;
  const std::size_t nx = t.x_size();
  const std::size_t nm = t.m_size();

  auto arc_index = [&](Idx e, const std::vector<Idx>& tuple) -> Idx {
    auto it = std::lower_bound(
        pairs.begin(), pairs.end(), std::make_pair(e, tuple),
        [](const auto& a, const auto& b) { return a < b; });
    if (it == pairs.end() || it->first != e || it->second != tuple)
      throw ValidationError("nerve action left the arc set");
    return static_cast<Idx>(it - pairs.begin());
  };

  XMGraph g;
  g.theory = theory;
  g.nV = vertices;
  g.nA = static_cast<Idx>(pairs.size());
  g.inc.resize(static_cast<std::size_t>(g.nA) * nx);
  g.act.resize(static_cast<std::size_t>(g.nA) * nm);
  for (Idx a = 0; a < g.nA; ++a) {
    const auto& [e, f] = pairs[a];
    for (Idx x = 0; x < nx; ++x) g.inc[a * nx + x] = f[x];
    for (Idx m = 0; m < nm; ++m) {
      if (t.reflexive && t.fix_index_of[m] != kNoIdx) {
        // constants extract the distinguished loop of an incidence vertex
        Idx v = f[t.fix_index_of[m]];
        g.act[a * nm + m] = (*loop_arc_of_vertex)[v];
      } else {
        std::vector<Idx> comp(nx);
        for (Idx x = 0; x < nx; ++x) comp[x] = f[t.x_act(x, m)];
        g.act[a * nm + m] = arc_index(e, comp);
      }
    }
  }
  if (t.reflexive) {
    g.loops.resize(vertices);
    for (Idx v = 0; v < vertices; ++v) g.loops[v] = (*loop_arc_of_vertex)[v];
  }
  validate_graph(g);

  NerveResult out;
  out.graph = std::make_shared<const XMGraph>(std::move(g));
  out.arc_pairs = std::move(pairs);
  return out;
}

}  // namespace

NerveResult hyper_nerve(const Hypergraph& h, const TheoryPtr& theory) {
  validate_hypergraph(h);
  require_flavor_theory(theory, FGraphFlavor::hyper);
  const Idx k = static_cast<Idx>(theory->x_size());
  std::vector<std::pair<Idx, std::vector<Idx>>> pairs;
  const auto tuples = all_tuples(h.nV, k);
  for (Idx e = 0; e < h.edges.size(); ++e) {
    std::vector<Idx> idf(h.nV);
    for (Idx v = 0; v < h.nV; ++v) idf[v] = v;
    for (const auto& f : tuples)
      if (image_set(idf, f) == h.edges[e]) pairs.emplace_back(e, f);
  }
  return assemble_nerve(theory, h.nV, std::move(pairs), nullptr);
}

NerveResult power_nerve(const PowerGraph& p, const TheoryPtr& theory) {
  validate_powergraph(p);
  require_flavor_theory(theory, FGraphFlavor::power);
  if (p.arity != theory->x_size())
    throw UsageError("power graph arity differs from |X|");
  const Idx k = p.arity;
  std::vector<std::pair<Idx, std::vector<Idx>>> pairs;
  const auto tuples = all_tuples(p.nV, k);
  for (Idx e = 0; e < p.edges.size(); ++e) {
    for (const auto& f : tuples) {
      std::vector<Idx> ms = f;
      std::sort(ms.begin(), ms.end());
      if (ms == p.edges[e]) pairs.emplace_back(e, f);
    }
  }
  return assemble_nerve(theory, p.nV, std::move(pairs), nullptr);
}

NerveResult rpower_nerve(const ReflexiveFGraph& r, const TheoryPtr& theory) {
  validate_rfgraph(r);
  require_flavor_theory(theory, FGraphFlavor::rpower);
  if (r.arity != theory->x_size())
    throw UsageError("reflexive graph arity differs from |X|");
  const Idx k = r.arity;
  const Idx nv = static_cast<Idx>(r.vertex_parts.size());
  // nerve vertices are positions within the vertex part list
  auto vertex_pos = [&](Idx part) -> Idx {
    return static_cast<Idx>(
        std::lower_bound(r.vertex_parts.begin(), r.vertex_parts.end(), part) -
        r.vertex_parts.begin());
  };
  std::vector<std::pair<Idx, std::vector<Idx>>> pairs;
  const auto tuples = all_tuples(nv, k);
  for (Idx p = 0; p < r.nParts; ++p) {
    for (const auto& f : tuples) {
      std::vector<Idx> ms(k);
      for (Idx x = 0; x < k; ++x) ms[x] = r.vertex_parts[f[x]];
      std::sort(ms.begin(), ms.end());
      if (ms == r.inc[p]) pairs.emplace_back(p, f);
    }
  }
  std::vector<Idx> loop_arc(nv, kNoIdx);
  for (Idx a = 0; a < pairs.size(); ++a) {
    const auto& [p, f] = pairs[a];
    if (!r.is_vertex(p)) continue;
    // the unique pair at a vertex part is (p, const position(p))
    loop_arc[vertex_pos(p)] = static_cast<Idx>(a);
  }
  for (Idx v = 0; v < nv; ++v)
    if (loop_arc[v] == kNoIdx)
      throw ValidationError("vertex part lacks its degenerate arc");
  return assemble_nerve(theory, nv, std::move(pairs), &loop_arc);
}

namespace {

struct OrbitData {
  std::vector<Idx> arc_to_class;
  std::vector<Idx> reps;  // per class, least arc
};

OrbitData arc_orbits(const XMGraph& g) {
  const auto classes = classify_arcs(g);
  OrbitData out;
  out.arc_to_class.resize(g.nA);
  out.reps.reserve(classes.size());
  for (Idx c = 0; c < classes.size(); ++c) {
    out.reps.push_back(classes[c].orbit.front());
    for (Idx a : classes[c].orbit) out.arc_to_class[a] = c;
  }
  return out;
}

}  // namespace

HyperRealizeResult hyper_realize(const GraphPtr& G) {
  require_flavor_theory(G->theory, FGraphFlavor::hyper);
  OrbitData orbits = arc_orbits(*G);
  HyperRealizeResult out;
  out.hg.nV = G->nV;
  for (Idx rep : orbits.reps) {
    std::vector<Idx> profile(G->theory->x_size());
    for (Idx x = 0; x < profile.size(); ++x) profile[x] = G->incidence(rep, x);
    std::sort(profile.begin(), profile.end());
    profile.erase(std::unique(profile.begin(), profile.end()), profile.end());
    out.hg.edges.push_back(std::move(profile));
  }
  out.arc_to_edge = std::move(orbits.arc_to_class);
  validate_hypergraph(out.hg);
  return out;
}

PowerRealizeResult power_realize(const GraphPtr& G) {
  require_flavor_theory(G->theory, FGraphFlavor::power);
  OrbitData orbits = arc_orbits(*G);
  PowerRealizeResult out;
  out.pg.arity = static_cast<Idx>(G->theory->x_size());
  out.pg.nV = G->nV;
  for (Idx rep : orbits.reps) {
    std::vector<Idx> profile(G->theory->x_size());
    for (Idx x = 0; x < profile.size(); ++x) profile[x] = G->incidence(rep, x);
    std::sort(profile.begin(), profile.end());
    out.pg.edges.push_back(std::move(profile));
  }
  out.arc_to_edge = std::move(orbits.arc_to_class);
  validate_powergraph(out.pg);
  return out;
}

RPowerRealizeResult rpower_realize(const GraphPtr& G) {
  require_flavor_theory(G->theory, FGraphFlavor::rpower);
  OrbitData orbits = arc_orbits(*G);
  RPowerRealizeResult out;
  out.rg.arity = static_cast<Idx>(G->theory->x_size());
  out.rg.nParts = static_cast<Idx>(orbits.reps.size());
  out.arc_to_part = orbits.arc_to_class;
  out.vertex_to_part.resize(G->nV);
  for (Idx v = 0; v < G->nV; ++v)
    out.vertex_to_part[v] = orbits.arc_to_class[G->loop_of(v)];
  out.rg.vertex_parts = out.vertex_to_part;
  std::sort(out.rg.vertex_parts.begin(), out.rg.vertex_parts.end());
  out.rg.vertex_parts.erase(
      std::unique(out.rg.vertex_parts.begin(), out.rg.vertex_parts.end()),
      out.rg.vertex_parts.end());
  out.rg.inc.resize(out.rg.nParts);
  for (Idx c = 0; c < out.rg.nParts; ++c) {
    Idx rep = orbits.reps[c];
    std::vector<Idx> ms(G->theory->x_size());
    for (Idx x = 0; x < ms.size(); ++x)
      ms[x] = out.vertex_to_part[G->incidence(rep, x)];
    std::sort(ms.begin(), ms.end());
    out.rg.inc[c] = std::move(ms);
  }
  validate_rfgraph(out.rg);
  return out;
}

namespace {

Idx nerve_arc_index(const NerveResult& N, Idx e, const std::vector<Idx>& f) {
  auto it = std::lower_bound(
      N.arc_pairs.begin(), N.arc_pairs.end(), std::make_pair(e, f),
      [](const auto& a, const auto& b) { return a < b; });
  if (it == N.arc_pairs.end() || it->first != e || it->second != f)
    throw ValidationError("expected nerve arc is missing");
  return static_cast<Idx>(it - N.arc_pairs.begin());
}

UnitReport finish_unit(GraphMorphism unit, Idx target_nV, Idx target_nA) {
  validate_morphism(unit);
  UnitReport out;
  out.vertex_bijective = is_bijection(unit.fV, target_nV);
  out.arc_bijective = is_bijection(unit.fA, target_nA);
  out.unit = std::move(unit);
  return out;
}

}  // namespace

UnitReport nerve_unit(const GraphPtr& G, FGraphFlavor flavor) {
  const Theory& t = *G->theory;
  const Idx nx = static_cast<Idx>(t.x_size());
  GraphMorphism unit;
  unit.src = G;
  if (flavor == FGraphFlavor::hyper) {
    auto real = hyper_realize(G);
    auto nerve = hyper_nerve(real.hg, G->theory);
    unit.dst = nerve.graph;
    unit.fV.resize(G->nV);
    for (Idx v = 0; v < G->nV; ++v) unit.fV[v] = v;
    unit.fA.resize(G->nA);
    for (Idx a = 0; a < G->nA; ++a) {
      std::vector<Idx> profile(nx);
      for (Idx x = 0; x < nx; ++x) profile[x] = G->incidence(a, x);
      unit.fA[a] = nerve_arc_index(nerve, real.arc_to_edge[a], profile);
    }
    return finish_unit(std::move(unit), nerve.graph->nV, nerve.graph->nA);
  }
  if (flavor == FGraphFlavor::power) {
    auto real = power_realize(G);
    auto nerve = power_nerve(real.pg, G->theory);
    unit.dst = nerve.graph;
    unit.fV.resize(G->nV);
    for (Idx v = 0; v < G->nV; ++v) unit.fV[v] = v;
    unit.fA.resize(G->nA);
    for (Idx a = 0; a < G->nA; ++a) {
      std::vector<Idx> profile(nx);
      for (Idx x = 0; x < nx; ++x) profile[x] = G->incidence(a, x);
      unit.fA[a] = nerve_arc_index(nerve, real.arc_to_edge[a], profile);
    }
    return finish_unit(std::move(unit), nerve.graph->nV, nerve.graph->nA);
  }
  auto real = rpower_realize(G);
  auto nerve = rpower_nerve(real.rg, G->theory);
  auto vertex_pos = [&](Idx part) -> Idx {
    return static_cast<Idx>(std::lower_bound(real.rg.vertex_parts.begin(),
                                             real.rg.vertex_parts.end(),
                                             part) -
                            real.rg.vertex_parts.begin());
  };
  unit.dst = nerve.graph;
  unit.fV.resize(G->nV);
  for (Idx v = 0; v < G->nV; ++v)
    unit.fV[v] = vertex_pos(real.vertex_to_part[v]);
  unit.fA.resize(G->nA);
  for (Idx a = 0; a < G->nA; ++a) {
    std::vector<Idx> tuple(nx);
    for (Idx x = 0; x < nx; ++x)
      tuple[x] = vertex_pos(real.vertex_to_part[G->incidence(a, x)]);
    unit.fA[a] = nerve_arc_index(nerve, real.arc_to_part[a], tuple);
  }
  return finish_unit(std::move(unit), nerve.graph->nV, nerve.graph->nA);
}

CounitReport hyper_counit(const Hypergraph& h, const TheoryPtr& theory) {
  auto nerve = hyper_nerve(h, theory);
  auto real = hyper_realize(nerve.graph);
  CounitReport out;
  out.fV.resize(h.nV);
  for (Idx v = 0; v < h.nV; ++v) out.fV[v] = v;
  out.fE.resize(real.hg.edges.size());
  for (Idx a = 0; a < nerve.arc_pairs.size(); ++a)
    out.fE[real.arc_to_edge[a]] = nerve.arc_pairs[a].first;
  FGraphMorphism counit{out.fE, out.fV};
  validate_hyper_morphism(real.hg, h, counit);
  out.vertex_bijective = is_bijection(out.fV, h.nV);
  out.edge_bijective = is_bijection(out.fE, static_cast<Idx>(h.edges.size()));
  return out;
}

CounitReport power_counit(const PowerGraph& p, const TheoryPtr& theory) {
  auto nerve = power_nerve(p, theory);
  auto real = power_realize(nerve.graph);
  CounitReport out;
  out.fV.resize(p.nV);
  for (Idx v = 0; v < p.nV; ++v) out.fV[v] = v;
  out.fE.resize(real.pg.edges.size());
  for (Idx a = 0; a < nerve.arc_pairs.size(); ++a)
    out.fE[real.arc_to_edge[a]] = nerve.arc_pairs[a].first;
  FGraphMorphism counit{out.fE, out.fV};
  validate_power_morphism(real.pg, p, counit);
  out.vertex_bijective = is_bijection(out.fV, p.nV);
  out.edge_bijective = is_bijection(out.fE, static_cast<Idx>(p.edges.size()));
  return out;
}

CounitReport rpower_counit(const ReflexiveFGraph& r, const TheoryPtr& theory) {
  auto nerve = rpower_nerve(r, theory);
  auto real = rpower_realize(nerve.graph);
  CounitReport out;
  out.fE.resize(real.rg.nParts);
  for (Idx a = 0; a < nerve.arc_pairs.size(); ++a)
    out.fE[real.arc_to_part[a]] = nerve.arc_pairs[a].first;
  RFGraphMorphism counit{out.fE};
  validate_rpower_morphism(real.rg, r, counit);
  out.edge_bijective = is_bijection(out.fE, r.nParts);
  // vertex parts map bijectively onto vertex parts?
  std::vector<Idx> on_vertices;
  for (Idx p : real.rg.vertex_parts) on_vertices.push_back(out.fE[p]);
  std::sort(on_vertices.begin(), on_vertices.end());
  on_vertices.erase(std::unique(on_vertices.begin(), on_vertices.end()),
                    on_vertices.end());
  out.vertex_bijective = on_vertices == r.vertex_parts;
  return out;
}

ReflexiveFGraph rf_coproduct(const ReflexiveFGraph& a,
                             const ReflexiveFGraph& b) {
  if (a.arity != b.arity) throw UsageError("arity mismatch");
  ReflexiveFGraph out;
  out.arity = a.arity;
  out.nParts = a.nParts + b.nParts;
  out.vertex_parts = a.vertex_parts;
  for (Idx v : b.vertex_parts) out.vertex_parts.push_back(a.nParts + v);
  out.inc = a.inc;
  for (const auto& ms : b.inc) {
    std::vector<Idx> shifted = ms;
    for (Idx& v : shifted) v += a.nParts;
    out.inc.push_back(std::move(shifted));
  }
  validate_rfgraph(out);
  return out;
}

RFCoequalizerResult rf_coequalizer(const ReflexiveFGraph& A,
                                   const ReflexiveFGraph& B,
                                   const RFGraphMorphism& f,
                                   const RFGraphMorphism& g) {
  validate_rpower_morphism(A, B, f);
  validate_rpower_morphism(A, B, g);
  detail::UnionFind uf(B.nParts);
  for (Idx p = 0; p < A.nParts; ++p) uf.unite(f.fP[p], g.fP[p]);
  Idx n = 0;
  std::vector<Idx> reps;
  std::vector<Idx> cls = uf.classes(n, &reps);

  RFCoequalizerResult out;
  out.graph.arity = B.arity;
  out.graph.nParts = n;
  for (Idx v : B.vertex_parts) out.graph.vertex_parts.push_back(cls[v]);
  std::sort(out.graph.vertex_parts.begin(), out.graph.vertex_parts.end());
  out.graph.vertex_parts.erase(
      std::unique(out.graph.vertex_parts.begin(),
                  out.graph.vertex_parts.end()),
      out.graph.vertex_parts.end());
  out.graph.inc.resize(n);
  for (Idx c = 0; c < n; ++c) {
    std::vector<Idx> ms(B.arity);
    for (Idx i = 0; i < B.arity; ++i) ms[i] = cls[B.inc[reps[c]][i]];
    std::sort(ms.begin(), ms.end());
    out.graph.inc[c] = std::move(ms);
  }
  validate_rfgraph(out.graph);
  out.quotient.fP = std::move(cls);
  return out;
}

std::vector<FGraphMorphism> hyper_homs(const Hypergraph& A,
                                       const Hypergraph& B,
                                       std::uint64_t budget) {
  std::uint64_t nodes = 0;
  auto tick = [&] {
    if (++nodes > budget)
      throw CapacityError("hom search exceeded the node budget");
  };
  std::vector<FGraphMorphism> out;
  for (const auto& fV : all_tuples(B.nV, A.nV)) {
    tick();
    std::vector<std::vector<Idx>> cand(A.edges.size());
    bool ok = true;
    for (Idx e = 0; e < A.edges.size() && ok; ++e) {
      std::vector<Idx> img = image_set(fV, A.edges[e]);
      for (Idx e2 = 0; e2 < B.edges.size(); ++e2)
        if (B.edges[e2] == img) cand[e].push_back(e2);
      ok = !cand[e].empty();
    }
    if (!ok) continue;
    std::vector<Idx> pick(A.edges.size(), 0);
    while (true) {
      tick();
      FGraphMorphism m;
      m.fV = fV;
      m.fE.resize(A.edges.size());
      for (Idx e = 0; e < A.edges.size(); ++e) m.fE[e] = cand[e][pick[e]];
      out.push_back(std::move(m));
      std::size_t pos = A.edges.size();
      bool done = A.edges.empty();
      while (pos > 0) {
        --pos;
        if (++pick[pos] < cand[pos].size()) break;
        pick[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
  return out;
}

std::vector<FGraphMorphism> power_homs(const PowerGraph& A,
                                       const PowerGraph& B,
                                       std::uint64_t budget) {
  if (A.arity != B.arity) throw UsageError("arity mismatch");
  std::uint64_t nodes = 0;
  auto tick = [&] {
    if (++nodes > budget)
      throw CapacityError("hom search exceeded the node budget");
  };
  std::vector<FGraphMorphism> out;
  for (const auto& fV : all_tuples(B.nV, A.nV)) {
    tick();
    std::vector<std::vector<Idx>> cand(A.edges.size());
    bool ok = true;
    for (Idx e = 0; e < A.edges.size() && ok; ++e) {
      std::vector<Idx> img = multiset_map(fV, A.edges[e]);
      for (Idx e2 = 0; e2 < B.edges.size(); ++e2)
        if (B.edges[e2] == img) cand[e].push_back(e2);
      ok = !cand[e].empty();
    }
    if (!ok) continue;
    std::vector<Idx> pick(A.edges.size(), 0);
    while (true) {
      tick();
      FGraphMorphism m;
      m.fV = fV;
      m.fE.resize(A.edges.size());
      for (Idx e = 0; e < A.edges.size(); ++e) m.fE[e] = cand[e][pick[e]];
      out.push_back(std::move(m));
      std::size_t pos = A.edges.size();
      bool done = A.edges.empty();
      while (pos > 0) {
        --pos;
        if (++pick[pos] < cand[pos].size()) break;
        pick[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
  return out;
}

std::vector<RFGraphMorphism> rpower_homs(const ReflexiveFGraph& A,
                                         const ReflexiveFGraph& B,
                                         std::uint64_t budget) {
  if (A.arity != B.arity) throw UsageError("arity mismatch");
  std::uint64_t nodes = 0;
  auto tick = [&] {
    if (++nodes > budget)
      throw CapacityError("hom search exceeded the node budget");
  };
  std::vector<RFGraphMorphism> out;
  const Idx nv = static_cast<Idx>(A.vertex_parts.size());
  const Idx nbv = static_cast<Idx>(B.vertex_parts.size());
  for (const auto& vassign : all_tuples(nbv, nv)) {
    tick();
    std::vector<Idx> fP(A.nParts, kNoIdx);
    for (Idx i = 0; i < nv; ++i)
      fP[A.vertex_parts[i]] = B.vertex_parts[vassign[i]];
    // candidates for the remaining parts
    std::vector<Idx> free_parts;
    for (Idx p = 0; p < A.nParts; ++p)
      if (fP[p] == kNoIdx) free_parts.push_back(p);
    std::vector<std::vector<Idx>> cand(free_parts.size());
    bool ok = true;
    for (Idx i = 0; i < free_parts.size() && ok; ++i) {
      Idx p = free_parts[i];
      std::vector<Idx> img(A.arity);
      for (Idx j = 0; j < A.arity; ++j) img[j] = fP[A.inc[p][j]];
      std::sort(img.begin(), img.end());
      for (Idx q = 0; q < B.nParts; ++q)
        if (B.inc[q] == img) cand[i].push_back(q);
      ok = !cand[i].empty();
    }
    // vertex parts must also respect their own incidence, which is
    // automatic: degenerate goes to degenerate
    if (!ok) continue;
    std::vector<Idx> pick(free_parts.size(), 0);
    while (true) {
      tick();
      RFGraphMorphism m;
      m.fP = fP;
      for (Idx i = 0; i < free_parts.size(); ++i)
        m.fP[free_parts[i]] = cand[i][pick[i]];
      out.push_back(std::move(m));
      std::size_t pos = free_parts.size();
      bool done = free_parts.empty();
      while (pos > 0) {
        --pos;
        if (++pick[pos] < cand[pos].size()) break;
        pick[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RFGraphMorphism& a, const RFGraphMorphism& b) {
              return a.fP < b.fP;
            });
  return out;
}

GraphMorphism hyper_nerve_morphism(const FGraphMorphism& f,
                                   const NerveResult& NA,
                                   const NerveResult& NB) {
  GraphMorphism out;
  out.src = NA.graph;
  out.dst = NB.graph;
  out.fV = f.fV;
  out.fA.resize(NA.arc_pairs.size());
  for (Idx a = 0; a < NA.arc_pairs.size(); ++a) {
    const auto& [e, g] = NA.arc_pairs[a];
    std::vector<Idx> img(g.size());
    for (Idx x = 0; x < g.size(); ++x) img[x] = f.fV[g[x]];
    out.fA[a] = nerve_arc_index(NB, f.fE[e], img);
  }
  validate_morphism(out);
  return out;
}

GraphMorphism power_nerve_morphism(const FGraphMorphism& f,
                                   const NerveResult& NA,
                                   const NerveResult& NB) {
  return hyper_nerve_morphism(f, NA, NB);  // same shape of data
}

GraphMorphism rpower_nerve_morphism(const ReflexiveFGraph& A,
                                    const ReflexiveFGraph& B,
                                    const RFGraphMorphism& f,
                                    const NerveResult& NA,
                                    const NerveResult& NB) {
  auto pos_in = [](const std::vector<Idx>& sorted, Idx v) -> Idx {
    return static_cast<Idx>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };
  GraphMorphism out;
  out.src = NA.graph;
  out.dst = NB.graph;
  out.fV.resize(A.vertex_parts.size());
  for (Idx i = 0; i < A.vertex_parts.size(); ++i)
    out.fV[i] = pos_in(B.vertex_parts, f.fP[A.vertex_parts[i]]);
  out.fA.resize(NA.arc_pairs.size());
  for (Idx a = 0; a < NA.arc_pairs.size(); ++a) {
    const auto& [p, g] = NA.arc_pairs[a];
    std::vector<Idx> img(g.size());
    for (Idx x = 0; x < g.size(); ++x)
      img[x] = pos_in(B.vertex_parts, f.fP[A.vertex_parts[g[x]]]);
    out.fA[a] = nerve_arc_index(NB, f.fP[p], img);
  }
  validate_morphism(out);
  return out;
}

Hypergraph hyper_interp_V() {
  Hypergraph h;
  h.nV = 1;
  return h;
}

Hypergraph hyper_interp_A(Idx k) {
  Hypergraph h;
  h.nV = k;
  std::vector<Idx> full(k);
  for (Idx i = 0; i < k; ++i) full[i] = i;
  h.edges.push_back(std::move(full));
  return h;
}

PowerGraph power_interp_V(Idx k) {
  PowerGraph p;
  p.arity = k;
  p.nV = 1;
  return p;
}

PowerGraph power_interp_A(Idx k) {
  PowerGraph p;
  p.arity = k;
  p.nV = k;
  std::vector<Idx> full(k);
  for (Idx i = 0; i < k; ++i) full[i] = i;
  p.edges.push_back(std::move(full));
  return p;
}

ReflexiveFGraph rpower_interp_V(Idx k) {
  ReflexiveFGraph r;
  r.arity = k;
  r.nParts = 1;
  r.vertex_parts = {0};
  r.inc = {std::vector<Idx>(k, 0)};
  return r;
}

ReflexiveFGraph rpower_interp_A(Idx k) {
  auto [monoid, xset] = build_standard_monoid(k, MonoidKind::reflexive_symmetric);
  MAQuotient q = m_a_quotient(monoid);
  if (q.n_classes != k + 1)
    throw ValidationError("arc classifier quotient is not X plus a point");
  std::vector<Idx> fix = fix_set(monoid);
  ReflexiveFGraph r;
  r.arity = k;
  r.nParts = q.n_classes;
  std::vector<Idx> fix_class(fix.size());
  for (Idx i = 0; i < fix.size(); ++i) {
    fix_class[i] = q.class_of[fix[i]];
    r.vertex_parts.push_back(q.class_of[fix[i]]);
  }
  std::sort(r.vertex_parts.begin(), r.vertex_parts.end());
  r.inc.resize(r.nParts);
  for (Idx c = 0; c < r.nParts; ++c) {
    if (std::binary_search(r.vertex_parts.begin(), r.vertex_parts.end(), c)) {
      r.inc[c] = std::vector<Idx>(k, c);
    } else {
      // the invertible class: the full multiset of constants
      std::vector<Idx> ms = fix_class;
      std::sort(ms.begin(), ms.end());
      r.inc[c] = std::move(ms);
    }
  }
  validate_rfgraph(r);
  return r;
}

MAQuotient m_a_quotient(const FiniteMonoid& monoid) {
  const std::vector<Idx> units = invertibles(monoid);
  detail::UnionFind uf(monoid.size());
  for (Idx m = 0; m < monoid.size(); ++m)
    for (Idx n : units) uf.unite(m, monoid.product(n, m));
  MAQuotient out;
  out.class_of = uf.classes(out.n_classes, &out.reps);
  out.action.resize(static_cast<std::size_t>(out.n_classes) * monoid.size());
  for (Idx c = 0; c < out.n_classes; ++c)
    for (Idx m = 0; m < monoid.size(); ++m)
      out.action[c * monoid.size() + m] =
          out.class_of[monoid.product(out.reps[c], m)];
  return out;
}

const char* obstruction_case_name(ObstructionCase c) {
  switch (c) {
    case ObstructionCase::k_uniform: return "k-uniform";
    case ObstructionCase::power_graph: return "power-graph";
    case ObstructionCase::reflexive_power_graph:
      return "reflexive-power-graph";
  }
  return "?";
}

std::optional<ObstructionCase> obstruction_case_from_name(
    const std::string& s) {
  if (s == "k-uniform") return ObstructionCase::k_uniform;
  if (s == "power-graph") return ObstructionCase::power_graph;
  if (s == "reflexive-power-graph")
    return ObstructionCase::reflexive_power_graph;
  return std::nullopt;
}

GraphPtr loop_pair_graph(const TheoryPtr& theory) {
  const Theory& t = *theory;
  std::vector<Idx> inc(2 * t.x_size());
  std::fill(inc.begin(), inc.end(), 0);
  std::vector<Idx> act(2 * t.m_size());
  for (Idx m = 0; m < t.m_size(); ++m) {
    act[0 * t.m_size() + m] = 0;
    bool to_loop = t.reflexive && t.fix_index_of[m] != kNoIdx;
    act[1 * t.m_size() + m] = to_loop ? 0 : 1;
  }
  std::vector<Idx> loops;
  if (t.reflexive) loops = {0};
  return make_graph(theory, 1, std::move(inc), std::move(act),
                    std::move(loops));
}

GraphPtr walking_band_graph() {
  TheoryPtr t = standard_theory(2, MonoidKind::reflexive_symmetric);
  // arcs: 0,1 edge pair a-b; 2,3 band at b; 4,5 edge pair b-c;
  // 6,7,8 distinguished loops of a,b,c
  std::vector<Idx> inc = {
      0, 1,  // a0
      1, 0,  // a1
      1, 1,  // b0
      1, 1,  // b1
      1, 2,  // g0
      2, 1,  // g1
      0, 0,  // la
      1, 1,  // lb
      2, 2,  // lc
  };
  // monoid order for the reflexive symmetric theory on two elements:
  // [id, c_s, i, c_t]
  std::vector<Idx> act = {
      0, 6, 1, 7,  //
      1, 7, 0, 6,  //
      2, 7, 3, 7,  //
      3, 7, 2, 7,  //
      4, 7, 5, 8,  //
      5, 8, 4, 7,  //
      6, 6, 6, 6,  //
      7, 7, 7, 7,  //
      8, 8, 8, 8,  //
  };
  return make_graph(t, 3, std::move(inc), std::move(act), {6, 7, 8});
}

ObstructionCertificate obstruction_certificate(ObstructionCase kind,
                                               Idx x_size) {
  if (x_size < 2)
    throw UsageError("obstruction certificates need |X| >= 2");
  ObstructionCertificate cert;
  cert.kind = kind;
  auto note = [&](std::string s) { cert.transcript.push_back(std::move(s)); };

  if (kind == ObstructionCase::k_uniform) {
    cert.theory = standard_theory(x_size, MonoidKind::symmetric);
    cert.G = representable(cert.theory, Obj::V);
    cert.H = representable(cert.theory, Obj::V);
    cert.expo = exponential(cert.G, cert.H);
    cert.witness_arc = 0;
    const XMGraph& E = *cert.expo.graph;
    note("exponential of the vertex representable by itself has " +
         std::to_string(E.nV) + " vertex and " + std::to_string(E.nA) +
         " arc");
    bool loop = is_loop_arc(E, cert.witness_arc);
    note(std::string("witness arc is a loop: ") + (loop ? "yes" : "no"));
    std::vector<Idx> profile(cert.theory->x_size());
    for (Idx x = 0; x < profile.size(); ++x)
      profile[x] = E.incidence(cert.witness_arc, x);
    std::sort(profile.begin(), profile.end());
    profile.erase(std::unique(profile.begin(), profile.end()), profile.end());
    note("witness incidence image has cardinality " +
         std::to_string(profile.size()) + " < |X| = " +
         std::to_string(x_size) +
         "; arcs in the nerve of a k-uniform hypergraph have image "
         "cardinality exactly |X|");
    cert.verified = loop && profile.size() < x_size;
    return cert;
  }

  MonoidKind mk = kind == ObstructionCase::power_graph
                      ? MonoidKind::symmetric
                      : MonoidKind::reflexive_symmetric;
  cert.theory = standard_theory(x_size, mk);
  cert.G = loop_pair_graph(cert.theory);
  cert.H = representable(cert.theory, Obj::A);
  cert.expo = exponential(cert.G, cert.H);
  const XMGraph& E = *cert.expo.graph;
  const std::vector<Idx> units = invertibles(cert.theory->monoid);

  bool found = false;
  for (Idx a = 0; a < E.nA && !found; ++a) {
    if (!is_loop_arc(E, a)) continue;
    for (Idx u : units) {
      if (E.action(a, u) != a) {
        cert.witness_arc = a;
        cert.sigma = u;
        found = true;
        break;
      }
    }
  }
  if (!found)
    throw ValidationError("no unfixed loop found in the exponential");

  // re-verify from the raw tables
  bool loop = is_loop_arc(E, cert.witness_arc);
  note(std::string("witness arc ") + std::to_string(cert.witness_arc) +
       " is a loop: " + (loop ? "yes" : "no"));
  bool moved = E.action(cert.witness_arc, *cert.sigma) != cert.witness_arc;
  note("sigma = " + cert.theory->monoid.names[*cert.sigma] +
       " moves the witness arc: " + (moved ? "yes" : "no"));
  bool invertible = inverse_of(cert.theory->monoid, *cert.sigma).has_value();
  note(std::string("sigma is invertible: ") + (invertible ? "yes" : "no"));
  note("the nerve of any " +
       std::string(kind == ObstructionCase::power_graph
                       ? "power graph"
                       : "reflexive power graph") +
       " contains only fixed loops, so this exponential is outside the "
       "nerve image");
  cert.verified = loop && moved && invertible;
  return cert;
}

std::string certificate_report(const ObstructionCertificate& cert) {
  std::ostringstream os;
  const Theory& t = *cert.theory;
  os << "obstruction certificate: " << obstruction_case_name(cert.kind)
     << "\n";
  os << "theory: |X| = " << t.x_size() << ", |M| = " << t.m_size()
     << (t.reflexive ? ", reflexive" : "") << "\n";
  os << "G: " << cert.G->nV << " vertices, " << cert.G->nA << " arcs\n";
  os << "H: " << cert.H->nV << " vertices, " << cert.H->nA << " arcs\n";
  os << "G^H: " << cert.expo.graph->nV << " vertices, "
     << cert.expo.graph->nA << " arcs\n";
  const ExponentialArc& arc = cert.expo.arcs[cert.witness_arc];
  os << "witness arc " << cert.witness_arc << ": family = (";
  for (std::size_t i = 0; i < arc.family.size(); ++i)
    os << (i ? " " : "") << arc.family[i];
  os << "), g = (";
  for (std::size_t i = 0; i < arc.g.size(); ++i)
    os << (i ? " " : "") << arc.g[i];
  os << ")\n";
  if (cert.sigma)
    os << "witness sigma: " << t.monoid.names[*cert.sigma] << "\n";
  else
    os << "witness degeneracy: incidence image smaller than |X|\n";
  for (const auto& line : cert.transcript) os << "  - " << line << "\n";
  os << (cert.verified ? "VERIFIED" : "NOT VERIFIED") << "\n";
  return os.str();
}

}  // namespace xmg
