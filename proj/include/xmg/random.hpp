#ifndef XMG_RANDOM_HPP_
#define XMG_RANDOM_HPP_

#include "xmg/bridge.hpp"
#include "xmg/rng.hpp"

namespace xmg {

// Random valid graphs, built as quotients of coproducts of representables
// followed by an action-closed shrink. Always satisfies the structure laws
// by construction.
GraphPtr random_graph(const TheoryPtr& theory, Idx max_vertices, Idx max_arcs,
                      SplitMix64& rng);

Hypergraph random_hypergraph(Idx max_vertices, Idx max_edges, Idx max_card,
                             SplitMix64& rng);

PowerGraph random_powergraph(Idx arity, Idx max_vertices, Idx max_edges,
                             SplitMix64& rng);

ReflexiveFGraph random_rfgraph(Idx arity, Idx max_vertices, Idx max_edges,
                               SplitMix64& rng);

}  // namespace xmg

#endif  // XMG_RANDOM_HPP_
