#include "xmg/homs.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace xmg {

namespace {

// Backtracking search for morphisms G -> H. Vertex images are assigned in
// index order; every arc whose incident vertices are all assigned must have
// at least one incidence-compatible image or the branch dies. Once all
// vertices are placed, arcs are assigned in index order and each assignment
// is propagated along the whole monoid action orbit.
struct HomSearch {
  const XMGraph& G;
  const XMGraph& H;
  std::atomic<std::uint64_t>& nodes;
  std::uint64_t budget;

  std::size_t nx;
  std::size_t nm;
  std::vector<std::vector<Idx>> arcs_ready_at;  // vertex v -> arcs to prune
  std::vector<Idx> fV;
  std::vector<Idx> fA;
  std::vector<std::pair<std::vector<Idx>, std::vector<Idx>>> found;

  HomSearch(const XMGraph& g, const XMGraph& h,
            std::atomic<std::uint64_t>& node_counter, std::uint64_t budget_)
      : G(g), H(h), nodes(node_counter), budget(budget_) {
    nx = G.theory->x_size();
    nm = G.theory->m_size();
    arcs_ready_at.resize(G.nV);
    for (Idx a = 0; a < G.nA; ++a) {
      Idx hi = 0;
      for (std::size_t x = 0; x < nx; ++x)
        hi = std::max(hi, G.incidence(a, static_cast<Idx>(x)));
      if (G.nV > 0 && nx > 0) arcs_ready_at[hi].push_back(a);
    }
    fV.assign(G.nV, kNoIdx);
    fA.assign(G.nA, kNoIdx);
  }

  void tick() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
      throw CapacityError("hom search exceeded the node budget of " +
                          std::to_string(budget));
  }

  bool incidence_matches(Idx a, Idx b) const {
    for (std::size_t x = 0; x < nx; ++x)
      if (H.incidence(b, static_cast<Idx>(x)) !=
          fV[G.incidence(a, static_cast<Idx>(x))])
        return false;
    return true;
  }

  bool has_candidate(Idx a) const {
    for (Idx b = 0; b < H.nA; ++b)
      if (incidence_matches(a, b)) return true;
    return false;
  }

  // Sets fA[a] = b and forces the whole action orbit; records changes on
  // the trail. Returns false on conflict.
  bool force(Idx a, Idx b, std::vector<Idx>& trail) {
    if (fA[a] != kNoIdx) return fA[a] == b;
    fA[a] = b;
    trail.push_back(a);
    for (std::size_t m = 0; m < nm; ++m) {
      Idx ga = G.action(a, static_cast<Idx>(m));
      Idx hb = H.action(b, static_cast<Idx>(m));
      if (fA[ga] == kNoIdx) {
        fA[ga] = hb;
        trail.push_back(ga);
      } else if (fA[ga] != hb) {
        return false;
      }
    }
    return true;
  }

  void undo(std::vector<Idx>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      fA[trail.back()] = kNoIdx;
      trail.pop_back();
    }
  }

  void search_arcs(Idx a, std::vector<Idx>& trail) {
    while (a < G.nA && fA[a] != kNoIdx) ++a;
    if (a >= G.nA) {
      found.emplace_back(fV, fA);
      return;
    }
    for (Idx b = 0; b < H.nA; ++b) {
      tick();
      if (!incidence_matches(a, b)) continue;
      std::size_t mark = trail.size();
      if (force(a, b, trail)) search_arcs(a + 1, trail);
      undo(trail, mark);
    }
  }

  void begin_arc_phase() {
    std::vector<Idx> trail;
    if (G.theory->reflexive) {
      // distinguished loops are forced by the vertex assignment
      for (Idx v = 0; v < G.nV; ++v) {
        if (!force(G.loop_of(v), H.loop_of(fV[v]), trail)) {
          undo(trail, 0);
          return;
        }
      }
    }
    // forced arcs must still match on incidence
    for (Idx a = 0; a < G.nA; ++a) {
      if (fA[a] != kNoIdx && !incidence_matches(a, fA[a])) {
        undo(trail, 0);
        return;
      }
    }
    search_arcs(0, trail);
    undo(trail, 0);
  }

  void search_vertices(Idx v) {
    if (v >= G.nV) {
      begin_arc_phase();
      return;
    }
    for (Idx w = 0; w < H.nV; ++w) {
      tick();
      fV[v] = w;
      bool ok = true;
      for (Idx a : arcs_ready_at[v]) {
        if (!has_candidate(a)) {
          ok = false;
          break;
        }
      }
      if (ok) search_vertices(v + 1);
      fV[v] = kNoIdx;
    }
  }

  // Entry point with the first vertex pinned (for the parallel split).
  void run(Idx first_image) {
    if (G.nV == 0) {
      begin_arc_phase();
      return;
    }
    fV[0] = first_image;
    bool ok = true;
    for (Idx a : arcs_ready_at[0]) {
      if (!has_candidate(a)) {
        ok = false;
        break;
      }
    }
    if (ok) search_vertices(1);
    fV[0] = kNoIdx;
  }
};

std::vector<GraphMorphism> finalize(
    const GraphPtr& G, const GraphPtr& H,
    std::vector<std::pair<std::vector<Idx>, std::vector<Idx>>>&& raw) {
  std::sort(raw.begin(), raw.end());
  std::vector<GraphMorphism> out;
  out.reserve(raw.size());
  for (auto& [fv, fa] : raw) {
    GraphMorphism m;
    m.src = G;
    m.dst = H;
    m.fV = std::move(fv);
    m.fA = std::move(fa);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<GraphMorphism> enumerate_homs_serial(const GraphPtr& G,
                                                 const GraphPtr& H,
                                                 const HomOptions& opts) {
  if (!same_theory(*G->theory, *H->theory))
    throw UsageError("hom enumeration needs graphs over the same theory");
  std::atomic<std::uint64_t> nodes{0};
  HomSearch s(*G, *H, nodes, opts.budget);
  if (G->nV == 0) {
    s.run(0);
  } else {
    for (Idx w = 0; w < H->nV; ++w) {
      s.tick();
      s.run(w);
    }
  }
  return finalize(G, H, std::move(s.found));
}

std::vector<GraphMorphism> enumerate_homs(const GraphPtr& G, const GraphPtr& H,
                                          const HomOptions& opts) {
#ifdef _OPENMP
  if (opts.parallel && G->nV > 0 && H->nV > 1) {
    if (!same_theory(*G->theory, *H->theory))
      throw UsageError("hom enumeration needs graphs over the same theory");
    std::atomic<std::uint64_t> nodes{0};
    const int k = static_cast<int>(H->nV);
    std::vector<std::vector<std::pair<std::vector<Idx>, std::vector<Idx>>>>
        buckets(k);
    std::atomic<bool> over_budget{false};
#pragma omp parallel for schedule(dynamic, 1)
    for (int w = 0; w < k; ++w) {
      if (over_budget.load(std::memory_order_relaxed)) continue;
      try {
        HomSearch s(*G, *H, nodes, opts.budget);
        s.tick();
        s.run(static_cast<Idx>(w));
        buckets[w] = std::move(s.found);
      } catch (const CapacityError&) {
        over_budget.store(true, std::memory_order_relaxed);
      }
    }
    if (over_budget.load())
      throw CapacityError("hom search exceeded the node budget of " +
                          std::to_string(opts.budget));
    std::vector<std::pair<std::vector<Idx>, std::vector<Idx>>> raw;
    for (auto& b : buckets)
      for (auto& r : b) raw.push_back(std::move(r));
    return finalize(G, H, std::move(raw));
  }
#endif
  return enumerate_homs_serial(G, H, opts);
}

std::uint64_t count_homs(const GraphPtr& G, const GraphPtr& H,
                         const HomOptions& opts) {
  return enumerate_homs(G, H, opts).size();
}

}  // namespace xmg
