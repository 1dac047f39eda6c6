#ifndef XMG_BRIDGE_HPP_
#define XMG_BRIDGE_HPP_

#include <optional>

#include "xmg/expo.hpp"

namespace xmg {

// ---------------------------------------------------------------------
// Comma-category objects: hypergraphs (power-set incidence), power graphs
// (multiset incidence of fixed arity) and reflexive power graphs (parts
// with a vertex subset of degenerate edges).
// ---------------------------------------------------------------------

struct Hypergraph {
  Idx nV = 0;
  std::vector<std::vector<Idx>> edges;  // sorted vertex sets, may be empty
};

struct PowerGraph {
  Idx arity = 2;  // |X|
  Idx nV = 0;
  std::vector<std::vector<Idx>> edges;  // sorted multisets of size arity
};

struct ReflexiveFGraph {
  Idx arity = 2;
  Idx nParts = 0;
  std::vector<Idx> vertex_parts;        // sorted subset of parts
  std::vector<std::vector<Idx>> inc;    // per part: sorted multiset of
                                        // vertex parts, size arity
  bool is_vertex(Idx p) const;
};

void validate_hypergraph(const Hypergraph& h);
void validate_powergraph(const PowerGraph& p);
void validate_rfgraph(const ReflexiveFGraph& r);

enum class FGraphFlavor { hyper, power, rpower };
const char* flavor_name(FGraphFlavor f);
std::optional<FGraphFlavor> flavor_from_name(const std::string& s);

// Edge map plus vertex map with the commuting incidence square.
struct FGraphMorphism {
  std::vector<Idx> fE;
  std::vector<Idx> fV;
};

// Single parts map restricting to vertices.
struct RFGraphMorphism {
  std::vector<Idx> fP;
};

void validate_hyper_morphism(const Hypergraph& A, const Hypergraph& B,
                             const FGraphMorphism& f);
void validate_power_morphism(const PowerGraph& A, const PowerGraph& B,
                             const FGraphMorphism& f);
void validate_rpower_morphism(const ReflexiveFGraph& A,
                              const ReflexiveFGraph& B,
                              const RFGraphMorphism& f);

// ---------------------------------------------------------------------
// Multisets
// ---------------------------------------------------------------------

// All multisets of size k over {0..n-1} as sorted tuples in lexicographic
// order.
std::vector<std::vector<Idx>> multiset_power(Idx n, Idx k);

// The induced map on multisets: apply f pointwise and resort.
std::vector<Idx> multiset_map(const std::vector<Idx>& f,
                              const std::vector<Idx>& ms);

// Sorted image set of a multiset/tuple under f.
std::vector<Idx> image_set(const std::vector<Idx>& f,
                           const std::vector<Idx>& tuple);

// ---------------------------------------------------------------------
// Uniformity
// ---------------------------------------------------------------------

struct UniformityProfile {
  std::vector<Idx> cardinality;  // per edge
  bool is_k_uniform(Idx k) const;
};

UniformityProfile uniformity_profile(const Hypergraph& h);

// ---------------------------------------------------------------------
// Nerves and realizations
// ---------------------------------------------------------------------

// A nerve keeps, per arc, the (edge-or-part, X -> vertices) pair it came
// from; arcs are ordered lexicographically by that pair.
struct NerveResult {
  GraphPtr graph;
  std::vector<std::pair<Idx, std::vector<Idx>>> arc_pairs;
};

// theory must be the standard symmetric theory on |X| matching the flavor
// (reflexive symmetric for rpower).
NerveResult hyper_nerve(const Hypergraph& h, const TheoryPtr& theory);
NerveResult power_nerve(const PowerGraph& p, const TheoryPtr& theory);
// Nerve vertices are the vertex parts of r in order.
NerveResult rpower_nerve(const ReflexiveFGraph& r, const TheoryPtr& theory);

struct HyperRealizeResult {
  Hypergraph hg;
  std::vector<Idx> arc_to_edge;  // orbit class per arc
};

struct PowerRealizeResult {
  PowerGraph pg;
  std::vector<Idx> arc_to_edge;
};

struct RPowerRealizeResult {
  ReflexiveFGraph rg;
  std::vector<Idx> arc_to_part;
  std::vector<Idx> vertex_to_part;  // graph vertex -> part of its loop
};

HyperRealizeResult hyper_realize(const GraphPtr& G);
PowerRealizeResult power_realize(const GraphPtr& G);
RPowerRealizeResult rpower_realize(const GraphPtr& G);

// ---------------------------------------------------------------------
// Adjunction units and counits with componentwise bijectivity flags
// ---------------------------------------------------------------------

struct UnitReport {
  GraphMorphism unit;  // G -> N(R(G))
  bool vertex_bijective = false;
  bool arc_bijective = false;
  bool iso() const { return vertex_bijective && arc_bijective; }
};

UnitReport nerve_unit(const GraphPtr& G, FGraphFlavor flavor);

struct CounitReport {
  std::vector<Idx> fE;  // edge/part component of R(N(H)) -> H
  std::vector<Idx> fV;  // vertex component (parts map for rpower is fE)
  bool edge_bijective = false;
  bool vertex_bijective = false;
  bool iso() const { return edge_bijective && vertex_bijective; }
};

CounitReport hyper_counit(const Hypergraph& h, const TheoryPtr& theory);
CounitReport power_counit(const PowerGraph& p, const TheoryPtr& theory);
CounitReport rpower_counit(const ReflexiveFGraph& r, const TheoryPtr& theory);

// ---------------------------------------------------------------------
// Colimits of reflexive F-graphs
// ---------------------------------------------------------------------

ReflexiveFGraph rf_coproduct(const ReflexiveFGraph& a,
                             const ReflexiveFGraph& b);

// Quotient of the codomain parts by the relation f(p) ~ g(p); the vertex
// subset is the image of the codomain vertices.
struct RFCoequalizerResult {
  ReflexiveFGraph graph;
  RFGraphMorphism quotient;
};

RFCoequalizerResult rf_coequalizer(const ReflexiveFGraph& A,
                                   const ReflexiveFGraph& B,
                                   const RFGraphMorphism& f,
                                   const RFGraphMorphism& g);

// ---------------------------------------------------------------------
// Comma-category hom enumeration (complete lists, lexicographic)
// ---------------------------------------------------------------------

std::vector<FGraphMorphism> hyper_homs(const Hypergraph& A,
                                       const Hypergraph& B,
                                       std::uint64_t budget = 10'000'000);
std::vector<FGraphMorphism> power_homs(const PowerGraph& A,
                                       const PowerGraph& B,
                                       std::uint64_t budget = 10'000'000);
std::vector<RFGraphMorphism> rpower_homs(const ReflexiveFGraph& A,
                                         const ReflexiveFGraph& B,
                                         std::uint64_t budget = 10'000'000);

// The nerve on morphisms: (e, g) -> (fE(e), fV o g).
GraphMorphism hyper_nerve_morphism(const FGraphMorphism& f,
                                   const NerveResult& NA,
                                   const NerveResult& NB);
GraphMorphism power_nerve_morphism(const FGraphMorphism& f,
                                   const NerveResult& NA,
                                   const NerveResult& NB);
GraphMorphism rpower_nerve_morphism(const ReflexiveFGraph& A,
                                    const ReflexiveFGraph& B,
                                    const RFGraphMorphism& f,
                                    const NerveResult& NA,
                                    const NerveResult& NB);

// ---------------------------------------------------------------------
// Interpretation objects and the arc-classifier quotient
// ---------------------------------------------------------------------

Hypergraph hyper_interp_V();
Hypergraph hyper_interp_A(Idx k);
PowerGraph power_interp_V(Idx k);
PowerGraph power_interp_A(Idx k);
ReflexiveFGraph rpower_interp_V(Idx k);
ReflexiveFGraph rpower_interp_A(Idx k);

// Quotient of M by m ~ m' iff some invertible n has product(n, m) = m',
// with the right action [m].m' = [product(m, m')]. For the reflexive
// symmetric monoid this is X plus one class of invertibles.
struct MAQuotient {
  Idx n_classes = 0;
  std::vector<Idx> class_of;  // element -> class
  std::vector<Idx> reps;      // class -> least element
  std::vector<Idx> action;    // class * |M| + m -> class
};

MAQuotient m_a_quotient(const FiniteMonoid& monoid);

// ---------------------------------------------------------------------
// Non-existence certificates
// ---------------------------------------------------------------------

enum class ObstructionCase { k_uniform, power_graph, reflexive_power_graph };
const char* obstruction_case_name(ObstructionCase c);
std::optional<ObstructionCase> obstruction_case_from_name(
    const std::string& s);

// A concrete witness that the named conventional category cannot contain
// the exponential computed in the presheaf category: an unfixed loop
// (power graph cases) or an arc with degenerate incidence (k-uniform
// case), re-verified from the raw tables.
struct ObstructionCertificate {
  ObstructionCase kind = ObstructionCase::power_graph;
  TheoryPtr theory;
  GraphPtr G;  // base of the exponential
  GraphPtr H;  // exponent
  Exponential expo;
  Idx witness_arc = 0;
  std::optional<Idx> sigma;  // invertible element moving the witness loop
  bool verified = false;
  std::vector<std::string> transcript;
};

ObstructionCertificate obstruction_certificate(ObstructionCase kind,
                                               Idx x_size = 2);

std::string certificate_report(const ObstructionCertificate& cert);

// ---------------------------------------------------------------------
// Small named graphs used by the command line examples and tests
// ---------------------------------------------------------------------

// One vertex with two monoid-fixed loops; over a reflexive theory the
// first loop is the distinguished one.
GraphPtr loop_pair_graph(const TheoryPtr& theory);

// Three vertices a-b-c with an edge pair a-b, an unfixed loop pair at b,
// an edge pair b-c and the three distinguished loops (reflexive symmetric
// theory on two elements).
GraphPtr walking_band_graph();

}  // namespace xmg

#endif  // XMG_BRIDGE_HPP_
