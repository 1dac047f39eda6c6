#ifndef XMG_LIMITS_HPP_
#define XMG_LIMITS_HPP_

#include "xmg/graph.hpp"

namespace xmg {

// Pointwise finite (co)limits of graphs over a fixed theory.

GraphPtr terminal_graph(TheoryPtr theory);
GraphPtr initial_graph(TheoryPtr theory);

struct ProductResult {
  GraphPtr graph;
  GraphMorphism proj1;
  GraphMorphism proj2;
};

// Vertex (i, j) has index i * |H(V)| + j; arcs likewise.
ProductResult product(const GraphPtr& G, const GraphPtr& H);

struct CoproductResult {
  GraphPtr graph;
  GraphMorphism inj1;
  GraphMorphism inj2;
};

CoproductResult coproduct(const GraphPtr& G, const GraphPtr& H);

struct EqualizerResult {
  GraphPtr graph;
  GraphMorphism include;
};

EqualizerResult equalizer(const GraphMorphism& f, const GraphMorphism& g);

struct CoequalizerResult {
  GraphPtr graph;
  GraphMorphism quotient;
};

// Quotient of the codomain by the least congruence containing
// f(c) ~ g(c); the congruence is closed under incidence, the monoid
// action and (reflexively) the loop table. Class representatives are
// least indices.
CoequalizerResult coequalizer(const GraphMorphism& f, const GraphMorphism& g);

// Keeps the arcs in the forward action-closure of `seed_arcs` plus every
// incident vertex plus `extra_vertices`; returns the induced subgraph with
// its inclusion. Reindexing preserves relative order.
struct SubgraphResult {
  GraphPtr graph;
  GraphMorphism include;
};

SubgraphResult arc_generated_subgraph(const GraphPtr& G,
                                      const std::vector<Idx>& seed_arcs,
                                      const std::vector<Idx>& extra_vertices);

}  // namespace xmg

#endif  // XMG_LIMITS_HPP_
