#include "xmg/expo.hpp"

#include <algorithm>

namespace xmg {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

void decode_tuple(std::uint64_t code, Idx radix, std::vector<Idx>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Idx>(code % radix);
    code /= radix;
  }
}

// Shared context for the arc enumeration.
struct ExpoBuild {
  const XMGraph& G;
  const XMGraph& H;
  const Theory& t;
  const Exponential& E;

  // Candidate G-arcs for one family and one H-arc.
  std::vector<Idx> candidates(const std::vector<Idx>& family, Idx j) const {
    std::vector<Idx> profile(t.x_size());
    for (Idx x = 0; x < t.x_size(); ++x)
      profile[x] = E.vertex_apply(family[x], H.incidence(j, x));
    return matching_arcs(G, profile);
  }

  std::uint64_t family_arc_count(const std::vector<Idx>& family,
                                 std::uint64_t cap) const {
    std::uint64_t n = 1;
    for (Idx j = 0; j < H.nA && n > 0; ++j) {
      std::uint64_t c = candidates(family, j).size();
      if (c != 0 && n > cap / c) return cap + 1;
      n *= c;
    }
    return n;
  }

  void emit_family(const std::vector<Idx>& family,
                   std::vector<ExponentialArc>& out) const {
    std::vector<std::vector<Idx>> cand(H.nA);
    for (Idx j = 0; j < H.nA; ++j) {
      cand[j] = candidates(family, j);
      if (cand[j].empty()) return;
    }
    std::vector<Idx> pick(H.nA, 0);
    while (true) {
      ExponentialArc arc;
      arc.family = family;
      arc.g.resize(H.nA);
      for (Idx j = 0; j < H.nA; ++j) arc.g[j] = cand[j][pick[j]];
      out.push_back(std::move(arc));
      std::size_t pos = H.nA;
      while (pos > 0) {
        --pos;
        if (++pick[pos] < cand[pos].size()) break;
        pick[pos] = 0;
        if (pos == 0) return;
      }
      if (H.nA == 0) return;
    }
  }
};

}  // namespace

std::vector<Idx> matching_arcs(const XMGraph& G,
                               const std::vector<Idx>& profile) {
  const std::size_t nx = G.theory->x_size();
  if (profile.size() != nx)
    throw UsageError("profile length differs from |X|");
  std::vector<Idx> out;
  for (Idx b = 0; b < G.nA; ++b) {
    bool ok = true;
    for (std::size_t x = 0; x < nx && ok; ++x)
      ok = G.incidence(b, static_cast<Idx>(x)) == profile[x];
    if (ok) out.push_back(b);
  }
  return out;
}

Exponential exponential(const GraphPtr& G, const GraphPtr& H,
                        const ExpoOptions& opts) {
  if (!same_theory(*G->theory, *H->theory))
    throw UsageError("exponential needs graphs over the same theory");
  const Theory& t = *G->theory;
  const std::size_t nx = t.x_size();
  const std::size_t nm = t.m_size();

  Exponential E;
  E.base = G;
  E.power = H;
  E.reflexive = t.reflexive;

  if (E.reflexive) {
    E.vertex_homs = enumerate_homs(H, G, opts.hom);
    if (E.vertex_homs.size() > opts.max_vertices)
      throw CapacityError("exponential vertex set exceeds the cap of " +
                          std::to_string(opts.max_vertices));
  } else {
    std::uint64_t count = checked_pow(G->nV, H->nV, opts.max_vertices);
    if (count > opts.max_vertices)
      throw CapacityError("exponential vertex set " + std::to_string(G->nV) +
                          "^" + std::to_string(H->nV) + " exceeds the cap of " +
                          std::to_string(opts.max_vertices));
    E.vertex_maps.resize(count, std::vector<Idx>(H->nV, 0));
    for (std::uint64_t c = 0; c < count; ++c)
      decode_tuple(c, G->nV == 0 ? 1 : G->nV, E.vertex_maps[c]);
  }
  const std::uint64_t n_vert = E.vertex_count();

  // Enumerate the arc pairs family by family, in lexicographic order.
  const std::uint64_t n_fam = checked_pow(n_vert, nx, opts.max_families);
  if (n_fam > opts.max_families)
    throw CapacityError("exponential family space exceeds the cap of " +
                        std::to_string(opts.max_families));
  ExpoBuild build{*G, *H, t, E};

  const std::uint64_t kBlock = 1024;
  const std::uint64_t n_blocks = n_fam == 0 ? 0 : (n_fam - 1) / kBlock + 1;
  std::vector<std::uint64_t> block_count(n_blocks, 0);
  bool over = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel && n_blocks > 1)
#endif
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(n_blocks); ++blk) {
    std::vector<Idx> family(nx);
    std::uint64_t lo = blk * kBlock, hi = std::min(n_fam, lo + kBlock);
    std::uint64_t subtotal = 0;
    for (std::uint64_t f = lo; f < hi; ++f) {
      decode_tuple(f, static_cast<Idx>(n_vert == 0 ? 1 : n_vert), family);
      subtotal += build.family_arc_count(family, opts.max_arcs);
      if (subtotal > opts.max_arcs) break;
    }
    block_count[blk] = subtotal;
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : block_count) {
    total += c;
    if (total > opts.max_arcs) over = true;
  }
  if (over)
    throw CapacityError("exponential arc set exceeds the cap of " +
                        std::to_string(opts.max_arcs));

  std::vector<std::uint64_t> block_offset(n_blocks + 1, 0);
  for (std::uint64_t b = 0; b < n_blocks; ++b)
    block_offset[b + 1] = block_offset[b] + block_count[b];
  E.arcs.resize(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel && n_blocks > 1)
#endif
  for (std::int64_t blk = 0; blk < static_cast<std::int64_t>(n_blocks); ++blk) {
    std::vector<Idx> family(nx);
    std::uint64_t lo = blk * kBlock, hi = std::min(n_fam, lo + kBlock);
    std::vector<ExponentialArc> local;
    for (std::uint64_t f = lo; f < hi; ++f) {
      decode_tuple(f, static_cast<Idx>(n_vert == 0 ? 1 : n_vert), family);
      build.emit_family(family, local);
    }
    std::move(local.begin(), local.end(), E.arcs.begin() + block_offset[blk]);
  }

  // Assemble the graph. Arc index lookup is binary search over the sorted
  // arc list.
  auto arc_index = [&](const ExponentialArc& a) -> Idx {
    auto it = std::lower_bound(E.arcs.begin(), E.arcs.end(), a);
    if (it == E.arcs.end() || !(*it == a))
      throw ValidationError(
          "exponential action leaves the arc set; this monoid is outside "
          "the supported range (elements must be invertible or fixed)");
    return static_cast<Idx>(it - E.arcs.begin());
  };

  XMGraph g;
  g.theory = G->theory;
  g.nV = static_cast<Idx>(n_vert);
  g.nA = static_cast<Idx>(E.arcs.size());
  g.inc.resize(static_cast<std::size_t>(g.nA) * nx);
  g.act.resize(static_cast<std::size_t>(g.nA) * nm);

  std::vector<std::optional<Idx>> inverse(nm);
  for (Idx m = 0; m < nm; ++m) inverse[m] = inverse_of(t.monoid, m);

  for (Idx p = 0; p < g.nA; ++p) {
    const ExponentialArc& arc = E.arcs[p];
    for (Idx x = 0; x < nx; ++x) g.inc[p * nx + x] = arc.family[x];
    for (Idx m = 0; m < nm; ++m) {
      ExponentialArc img;
      img.family.resize(nx);
      for (Idx x = 0; x < nx; ++x)
        img.family[x] = arc.family[t.x_act(x, m)];
      img.g.resize(H->nA);
      if (inverse[m]) {
        for (Idx j = 0; j < H->nA; ++j)
          img.g[j] = G->action(arc.g[H->action(j, *inverse[m])], m);
      } else if (t.reflexive && t.fix_index_of[m] != kNoIdx) {
        img.g = E.vertex_homs[arc.family[t.fix_index_of[m]]].fA;
      } else {
        // No transport rule applies; fall back to precomposition. Valid
        // for commutative actions, rejected by validation otherwise.
        for (Idx j = 0; j < H->nA; ++j) img.g[j] = arc.g[H->action(j, m)];
      }
      g.act[p * nm + m] = arc_index(img);
    }
  }
  if (t.reflexive) {
    g.loops.resize(g.nV);
    for (Idx k = 0; k < g.nV; ++k) {
      ExponentialArc l;
      l.family.assign(nx, k);
      l.g = E.vertex_homs[k].fA;
      g.loops[k] = arc_index(l);
    }
  }
  validate_graph(g);
  E.graph = std::make_shared<const XMGraph>(std::move(g));
  return E;
}

std::uint64_t exponential_arc_count_formula(const GraphPtr& G,
                                            const GraphPtr& H,
                                            const ExpoOptions& opts) {
  if (!same_theory(*G->theory, *H->theory))
    throw UsageError("exponential needs graphs over the same theory");
  const Theory& t = *G->theory;
  const std::size_t nx = t.x_size();

  // Vertex part, as in the construction.
  std::vector<std::vector<Idx>> vmaps;
  std::vector<GraphMorphism> vhoms;
  if (t.reflexive) {
    vhoms = enumerate_homs(H, G, opts.hom);
  } else {
    std::uint64_t count = checked_pow(G->nV, H->nV, opts.max_vertices);
    if (count > opts.max_vertices)
      throw CapacityError("exponential vertex set exceeds the cap");
    vmaps.resize(count, std::vector<Idx>(H->nV, 0));
    for (std::uint64_t c = 0; c < count; ++c)
      decode_tuple(c, G->nV == 0 ? 1 : G->nV, vmaps[c]);
  }
  const std::uint64_t n_vert = t.reflexive ? vhoms.size() : vmaps.size();

  // Incidence profiles are read off the product with the arc representable:
  // the arc (identity, j) of A_ x H has x-incidence (x, j.x).
  GraphPtr reprA = representable(G->theory, Obj::A);
  ProductResult prod = product(reprA, H);
  const Idx id_arc = t.monoid.identity;

  const std::uint64_t n_fam = checked_pow(n_vert, nx, opts.max_families);
  if (n_fam > opts.max_families)
    throw CapacityError("exponential family space exceeds the cap");

  std::uint64_t total = 0;
  std::vector<Idx> family(nx);
  std::vector<Idx> profile(nx);
  for (std::uint64_t f = 0; f < n_fam; ++f) {
    decode_tuple(f, static_cast<Idx>(n_vert == 0 ? 1 : n_vert), family);
    std::uint64_t fam_total = 1;
    for (Idx j = 0; j < H->nA && fam_total > 0; ++j) {
      Idx pair_arc = id_arc * H->nA + j;
      for (Idx x = 0; x < nx; ++x) {
        Idx pair_vertex = prod.graph->incidence(pair_arc, x);
        Idx hv = prod.proj2.fV[pair_vertex];  // second coordinate
        profile[x] =
            t.reflexive ? vhoms[family[x]].fV[hv] : vmaps[family[x]][hv];
      }
      fam_total *= matching_arcs(*G, profile).size();
    }
    total += fam_total;
    if (total > opts.max_arcs)
      throw CapacityError("exponential arc set exceeds the cap");
  }
  return total;
}

GraphMorphism eval_morphism(const Exponential& E) {
  ProductResult prod = product(E.graph, E.power);
  const XMGraph& H = *E.power;
  GraphMorphism ev;
  ev.src = prod.graph;
  ev.dst = E.base;
  ev.fV.resize(prod.graph->nV);
  ev.fA.resize(prod.graph->nA);
  for (Idx h = 0; h < E.graph->nV; ++h)
    for (Idx v = 0; v < H.nV; ++v)
      ev.fV[h * H.nV + v] = E.vertex_apply(h, v);
  for (Idx p = 0; p < E.graph->nA; ++p)
    for (Idx j = 0; j < H.nA; ++j)
      ev.fA[p * H.nA + j] = E.arcs[p].g[j];
  validate_morphism(ev);
  return ev;
}

namespace {

Idx find_vertex_map(const Exponential& E, const std::vector<Idx>& table) {
  // vertex maps are exactly the mixed-radix codes
  const Idx radix = E.base->nV == 0 ? 1 : E.base->nV;
  std::uint64_t code = 0;
  for (Idx v : table) code = code * radix + v;
  return static_cast<Idx>(code);
}

Idx find_vertex_hom(const Exponential& E, const std::vector<Idx>& fV,
                    const std::vector<Idx>& fA) {
  auto it = std::lower_bound(
      E.vertex_homs.begin(), E.vertex_homs.end(), std::tie(fV, fA),
      [](const GraphMorphism& m, const auto& key) {
        return std::tie(m.fV, m.fA) < key;
      });
  if (it == E.vertex_homs.end() || it->fV != fV || it->fA != fA)
    throw ValidationError("transpose is not a morphism H -> G");
  return static_cast<Idx>(it - E.vertex_homs.begin());
}

Idx find_arc(const Exponential& E, const ExponentialArc& a) {
  auto it = std::lower_bound(E.arcs.begin(), E.arcs.end(), a);
  if (it == E.arcs.end() || !(*it == a))
    throw ValidationError("transpose arc is not an exponential arc");
  return static_cast<Idx>(it - E.arcs.begin());
}

}  // namespace

GraphMorphism curry(const GraphMorphism& h, const GraphPtr& F,
                    const GraphPtr& H, const Exponential& E) {
  ProductResult prod = product(F, H);
  if (!(*h.src == *prod.graph))
    throw UsageError("curry: the morphism domain is not the canonical "
                     "product F x H");
  if (!(*h.dst == *E.base))
    throw UsageError("curry: the morphism codomain is not the exponential "
                     "base");
  const Theory& t = *F->theory;
  GraphMorphism k;
  k.src = F;
  k.dst = E.graph;
  k.fV.resize(F->nV);
  k.fA.resize(F->nA);
  for (Idx u = 0; u < F->nV; ++u) {
    std::vector<Idx> table(H->nV);
    for (Idx v = 0; v < H->nV; ++v) table[v] = h.fV[u * H->nV + v];
    if (E.reflexive) {
      std::vector<Idx> fa(H->nA);
      for (Idx j = 0; j < H->nA; ++j)
        fa[j] = h.fA[F->loop_of(u) * H->nA + j];
      k.fV[u] = find_vertex_hom(E, table, fa);
    } else {
      k.fV[u] = find_vertex_map(E, table);
    }
  }
  for (Idx c = 0; c < F->nA; ++c) {
    ExponentialArc arc;
    arc.family.resize(t.x_size());
    for (Idx x = 0; x < t.x_size(); ++x)
      arc.family[x] = k.fV[F->incidence(c, x)];
    arc.g.resize(H->nA);
    for (Idx j = 0; j < H->nA; ++j) arc.g[j] = h.fA[c * H->nA + j];
    k.fA[c] = find_arc(E, arc);
  }
  validate_morphism(k);
  return k;
}

GraphMorphism uncurry(const GraphMorphism& k, const GraphPtr& F,
                      const GraphPtr& H, const Exponential& E) {
  if (!(*k.dst == *E.graph))
    throw UsageError("uncurry: the morphism codomain is not the exponential");
  if (!(*k.src == *F))
    throw UsageError("uncurry: the morphism domain is not F");
  ProductResult prod = product(F, H);
  GraphMorphism h;
  h.src = prod.graph;
  h.dst = E.base;
  h.fV.resize(prod.graph->nV);
  h.fA.resize(prod.graph->nA);
  for (Idx u = 0; u < F->nV; ++u)
    for (Idx v = 0; v < H->nV; ++v)
      h.fV[u * H->nV + v] = E.vertex_apply(k.fV[u], v);
  for (Idx c = 0; c < F->nA; ++c)
    for (Idx j = 0; j < H->nA; ++j)
      h.fA[c * H->nA + j] = E.arcs[k.fA[c]].g[j];
  validate_morphism(h);
  return h;
}

}  // namespace xmg
