#ifndef XMG_GRAPH_HPP_
#define XMG_GRAPH_HPP_

#include <memory>
#include <string>
#include <vector>

#include "xmg/theory.hpp"

namespace xmg {

// A finite presheaf on a Theory: arcs carry an X-indexed incidence table
// and an action table for the monoid elements; reflexive graphs add the
// distinguished-loop table.
//
// Structure laws (checked by validate_graph):
//   act(a, identity) = a
//   act(a, mul(m, m')) = act(act(a, m'), m)      (actions compose
//                                                 contravariantly)
//   inc(act(a, m), x) = inc(a, x.m)
// and in the reflexive case
//   inc(loops(v), x) = v,  act(loops(v), m) = loops(v),
//   act(a, fix(x)) = loops(inc(a, x)).
struct XMGraph {
  TheoryPtr theory;
  Idx nV = 0;
  Idx nA = 0;
  std::vector<Idx> inc;    // nA * |X|
  std::vector<Idx> act;    // nA * |M|
  std::vector<Idx> loops;  // nV, reflexive theories only

  Idx incidence(Idx a, Idx x) const { return inc[a * theory->x_size() + x]; }
  Idx action(Idx a, Idx m) const { return act[a * theory->m_size() + m]; }
  Idx loop_of(Idx v) const { return loops[v]; }

  bool operator==(const XMGraph& other) const {
    return nV == other.nV && nA == other.nA && inc == other.inc &&
           act == other.act && loops == other.loops &&
           same_theory(*theory, *other.theory);
  }
};

using GraphPtr = std::shared_ptr<const XMGraph>;

// Validates all structure laws; throws ValidationError naming the first
// offending cell.
void validate_graph(const XMGraph& g);

GraphPtr make_graph(TheoryPtr theory, Idx nV, std::vector<Idx> inc,
                    std::vector<Idx> act, std::vector<Idx> loops = {});

// Yoneda presheaves. representable(t, Obj::A) has vertex set X and arc set
// M; representable(t, Obj::V) has one vertex (plus, reflexively, its
// distinguished loop).
GraphPtr representable(TheoryPtr theory, Obj obj);

struct GraphMorphism {
  GraphPtr src;
  GraphPtr dst;
  std::vector<Idx> fV;
  std::vector<Idx> fA;

  bool same_tables(const GraphMorphism& o) const {
    return fV == o.fV && fA == o.fA;
  }
};

void validate_morphism(const GraphMorphism& f);
bool is_morphism(const GraphMorphism& f);

GraphMorphism identity_morphism(GraphPtr g);
// f after g.
GraphMorphism compose_morphisms(const GraphMorphism& f,
                                const GraphMorphism& g);

enum class ArcClassKind { nonloop, fixed_loop, unfixed_loop, distinguished_loop };

const char* arc_class_kind_name(ArcClassKind k);

// An orbit of arcs under the invertible monoid elements, together with its
// loop classification.
struct ArcClass {
  ArcClassKind kind = ArcClassKind::nonloop;
  std::vector<Idx> orbit;  // sorted arc indices
};

// Partitions the arcs into orbits under invertible elements, ordered by
// least arc index.
std::vector<ArcClass> classify_arcs(const XMGraph& g);

bool is_loop_arc(const XMGraph& g, Idx a);

}  // namespace xmg

#endif  // XMG_GRAPH_HPP_
