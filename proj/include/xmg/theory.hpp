#ifndef XMG_THEORY_HPP_
#define XMG_THEORY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "xmg/monoid.hpp"

namespace xmg {

enum class Obj : std::uint8_t { V = 0, A = 1 };

// The two-object category underlying a category of (reflexive) graphs over
// a monoid action: hom(V,A) = X, hom(A,A) = M, hom(V,V) = {Id_V}, and in
// the reflexive case hom(A,V) = {ell} with X indexed by Fix(M).
struct Theory {
  FiniteMonoid monoid;
  RightMSet xset;
  bool reflexive = false;

  // reflexive only: carrier index x <-> the Fix(M) element naming it
  std::vector<Idx> fix_elems;      // x -> monoid element
  std::vector<Idx> fix_index_of;   // monoid element -> x (or kNoIdx)

  std::size_t x_size() const { return xset.size(); }
  std::size_t m_size() const { return monoid.size(); }

  Idx mul(Idx a, Idx b) const { return monoid.product(a, b); }
  Idx x_act(Idx x, Idx m) const { return xset.apply(x, m, monoid.size()); }
};

using TheoryPtr = std::shared_ptr<const Theory>;

// Arrows of a Theory as tagged values, so composition is table lookups.
struct TheoryMorphism {
  enum class Kind : std::uint8_t { IdV, X, M, Ell };
  Obj src = Obj::V;
  Obj dst = Obj::V;
  Kind kind = Kind::IdV;
  Idx index = 0;  // carrier index for X, element index for M

  static TheoryMorphism id_v() { return {Obj::V, Obj::V, Kind::IdV, 0}; }
  static TheoryMorphism id_a(const Theory& t) {
    return {Obj::A, Obj::A, Kind::M, t.monoid.identity};
  }
  static TheoryMorphism x(Idx i) { return {Obj::V, Obj::A, Kind::X, i}; }
  static TheoryMorphism m(Idx i) { return {Obj::A, Obj::A, Kind::M, i}; }
  static TheoryMorphism ell() { return {Obj::A, Obj::V, Kind::Ell, 0}; }

  bool operator==(const TheoryMorphism&) const = default;
};

// Validates the pieces and assembles a Theory. For reflexive theories the
// carrier must be the Fix(M) carrier in canonical order, i.e. carrier x is
// named by the x-th element of fix_set(monoid) and the action satisfies
// act(x, m) = fix-index of product(fix(x), m).
Theory make_theory(FiniteMonoid monoid, RightMSet xset, bool reflexive);

// Convenience: standard theory from a kind.
Theory make_standard_theory(Idx x_size, MonoidKind kind);
TheoryPtr standard_theory(Idx x_size, MonoidKind kind);

bool same_theory(const Theory& a, const Theory& b);

// f after g; throws UsageError for non-composable pairs.
TheoryMorphism compose(const Theory& t, const TheoryMorphism& f,
                       const TheoryMorphism& g);

std::vector<TheoryMorphism> all_morphisms(const Theory& t);
std::string morphism_name(const Theory& t, const TheoryMorphism& f);

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive identity and associativity scan over all composable pairs and
// triples. Violations are reported, not thrown.
AxiomReport check_axioms(const Theory& t);

}  // namespace xmg

#endif  // XMG_THEORY_HPP_
