#ifndef XMG_EXPO_HPP_
#define XMG_EXPO_HPP_

#include "xmg/homs.hpp"
#include "xmg/limits.hpp"

namespace xmg {

// An arc of an exponential object: a family of vertices of G^H indexed by
// X together with an arc map g : H(A) -> G(A) satisfying the commuting
// square g(a).x = f_x(a.x).
struct ExponentialArc {
  std::vector<Idx> family;  // |X| entries, indices into the vertex list
  std::vector<Idx> g;       // |H(A)| entries, arcs of G

  bool operator<(const ExponentialArc& o) const {
    if (family != o.family) return family < o.family;
    return g < o.g;
  }
  bool operator==(const ExponentialArc& o) const {
    return family == o.family && g == o.g;
  }
};

// The exponential G^H together with the metadata describing its cells.
// Vertices are vertex maps H(V) -> G(V) (plain theories) or morphisms
// H -> G (reflexive theories); arcs are ExponentialArc pairs. The graph
// field is an ordinary validated XMGraph over the same theory.
struct Exponential {
  GraphPtr graph;
  GraphPtr base;   // G
  GraphPtr power;  // H
  bool reflexive = false;

  std::vector<std::vector<Idx>> vertex_maps;  // plain: tables H(V) -> G(V)
  std::vector<GraphMorphism> vertex_homs;     // reflexive: Hom(H, G)
  std::vector<ExponentialArc> arcs;           // sorted by (family, g)

  std::size_t vertex_count() const {
    return reflexive ? vertex_homs.size() : vertex_maps.size();
  }
  // Applies vertex h of G^H to a vertex of H.
  Idx vertex_apply(Idx h, Idx v) const {
    return reflexive ? vertex_homs[h].fV[v] : vertex_maps[h][v];
  }
};

struct ExpoOptions {
  std::uint64_t max_vertices = 1'000'000;
  std::uint64_t max_families = 10'000'000;
  std::uint64_t max_arcs = 1'000'000;
  HomOptions hom;
  bool parallel = true;
};

// All arcs of G whose incidence profile equals `profile` (an assignment
// X -> G(V)).
std::vector<Idx> matching_arcs(const XMGraph& G,
                               const std::vector<Idx>& profile);

Exponential exponential(const GraphPtr& G, const GraphPtr& H,
                        const ExpoOptions& opts = {});

// Arc count predicted by the indexed-product formula: the sum over vertex
// families of the product over H-arcs of the number of profile-matching
// G-arcs. Computed through the product with the arc representable rather
// than through the pair enumeration, so the two routes cross-check.
std::uint64_t exponential_arc_count_formula(const GraphPtr& G,
                                            const GraphPtr& H,
                                            const ExpoOptions& opts = {});

// Evaluation G^H x H -> G: vertices apply, arcs project to g.
GraphMorphism eval_morphism(const Exponential& E);

// Transposes h : F x H -> G to F -> G^H. The product F x H must be the
// canonical one produced by product(F, H).
GraphMorphism curry(const GraphMorphism& h, const GraphPtr& F,
                    const GraphPtr& H, const Exponential& E);

GraphMorphism uncurry(const GraphMorphism& k, const GraphPtr& F,
                      const GraphPtr& H, const Exponential& E);

}  // namespace xmg

#endif  // XMG_EXPO_HPP_
