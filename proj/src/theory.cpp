#include "xmg/theory.hpp"

#include <algorithm>

namespace xmg {

Theory make_theory(FiniteMonoid monoid, RightMSet xset, bool reflexive) {
  monoid.validate();
  xset.validate(monoid);

  Theory t;
  t.monoid = std::move(monoid);
  t.xset = std::move(xset);
  t.reflexive = reflexive;
  if (reflexive) {
    t.fix_elems = fix_set(t.monoid);
    if (t.fix_elems.empty())
      throw UsageError("reflexive theory needs a monoid with nonempty Fix");
    if (t.fix_elems.size() != t.xset.size())
      throw UsageError("carrier size " + std::to_string(t.xset.size()) +
                       " does not match |Fix| = " +
                       std::to_string(t.fix_elems.size()));
    t.fix_index_of.assign(t.monoid.size(), kNoIdx);
    for (Idx x = 0; x < t.fix_elems.size(); ++x)
      t.fix_index_of[t.fix_elems[x]] = x;
    // carrier must be Fix with the action x_f . m = x_{fm}
    for (Idx x = 0; x < t.x_size(); ++x) {
      for (Idx m = 0; m < t.m_size(); ++m) {
        Idx want = t.fix_index_of[t.mul(t.fix_elems[x], m)];
        if (want == kNoIdx || t.x_act(x, m) != want)
          throw UsageError(
              "carrier action disagrees with the Fix(M) action at (x=" +
              t.xset.names[x] + ", m=" + t.monoid.names[m] + ")");
      }
    }
  }
  return t;
}

Theory make_standard_theory(Idx x_size, MonoidKind kind) {
  auto [monoid, xset] = build_standard_monoid(x_size, kind);
  return make_theory(std::move(monoid), std::move(xset),
                     monoid_kind_reflexive(kind));
}

TheoryPtr standard_theory(Idx x_size, MonoidKind kind) {
  return std::make_shared<const Theory>(make_standard_theory(x_size, kind));
}

bool same_theory(const Theory& a, const Theory& b) {
  if (&a == &b) return true;
  return a.reflexive == b.reflexive && a.monoid.mul == b.monoid.mul &&
         a.monoid.identity == b.monoid.identity && a.xset.act == b.xset.act &&
         a.xset.size() == b.xset.size();
}

TheoryMorphism compose(const Theory& t, const TheoryMorphism& f,
                       const TheoryMorphism& g) {
  if (g.dst != f.src)
    throw UsageError("non-composable pair: codomain of the first arrow "
                     "differs from domain of the second");
  using K = TheoryMorphism::Kind;
  if (g.kind == K::IdV) return f;
  if (f.kind == K::IdV) return g;
  switch (f.kind) {
    case K::X:  // f: V->A, g ends at V, g != IdV, so g = ell
      return TheoryMorphism::m(t.fix_elems[f.index]);
    case K::M:
      if (g.kind == K::X) return TheoryMorphism::x(t.x_act(g.index, f.index));
      return TheoryMorphism::m(t.mul(g.index, f.index));  // g then f
    case K::Ell:  // ell after m or after x
      if (g.kind == K::M) return TheoryMorphism::ell();
      return TheoryMorphism::id_v();  // ell after x
    default:
      break;
  }
  throw UsageError("non-composable pair");
}

std::vector<TheoryMorphism> all_morphisms(const Theory& t) {
  std::vector<TheoryMorphism> out;
  out.push_back(TheoryMorphism::id_v());
  for (Idx x = 0; x < t.x_size(); ++x) out.push_back(TheoryMorphism::x(x));
  for (Idx m = 0; m < t.m_size(); ++m) out.push_back(TheoryMorphism::m(m));
  if (t.reflexive) out.push_back(TheoryMorphism::ell());
  return out;
}

std::string morphism_name(const Theory& t, const TheoryMorphism& f) {
  switch (f.kind) {
    case TheoryMorphism::Kind::IdV: return "Id_V";
    case TheoryMorphism::Kind::X: return "x:" + t.xset.names[f.index];
    case TheoryMorphism::Kind::M: return "m:" + t.monoid.names[f.index];
    case TheoryMorphism::Kind::Ell: return "ell";
  }
  return "?";
}

AxiomReport check_axioms(const Theory& t) {
  AxiomReport report;
  const auto arrows = all_morphisms(t);
  const TheoryMorphism idv = TheoryMorphism::id_v();
  const TheoryMorphism ida = TheoryMorphism::id_a(t);

  auto id_for = [&](Obj o) { return o == Obj::V ? idv : ida; };

  for (const auto& f : arrows) {
    TheoryMorphism left = compose(t, id_for(f.dst), f);
    TheoryMorphism right = compose(t, f, id_for(f.src));
    if (!(left == f))
      report.violations.push_back("left identity fails for " +
                                  morphism_name(t, f));
    if (!(right == f))
      report.violations.push_back("right identity fails for " +
                                  morphism_name(t, f));
  }
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      if (g.dst != f.src) continue;
      for (const auto& h : arrows) {
        if (h.dst != g.src) continue;
        TheoryMorphism a = compose(t, compose(t, f, g), h);
        TheoryMorphism b = compose(t, f, compose(t, g, h));
        if (!(a == b))
          report.violations.push_back(
              "associativity fails for " + morphism_name(t, f) + " o " +
              morphism_name(t, g) + " o " + morphism_name(t, h));
      }
    }
  }
  return report;
}

}  // namespace xmg
