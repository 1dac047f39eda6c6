#include "xmg/graph.hpp"

#include <algorithm>

namespace xmg {

namespace {

std::string cell(const char* what, Idx i) {
  return std::string(what) + std::to_string(i);
}

}  // namespace

void validate_graph(const XMGraph& g) {
  if (!g.theory) throw ValidationError("graph has no theory");
  const Theory& t = *g.theory;
  const std::size_t nx = t.x_size();
  const std::size_t nm = t.m_size();
  if (g.inc.size() != static_cast<std::size_t>(g.nA) * nx)
    throw ValidationError("incidence table size mismatch");
  if (g.act.size() != static_cast<std::size_t>(g.nA) * nm)
    throw ValidationError("action table size mismatch");
  if (t.reflexive && g.loops.size() != g.nV)
    throw ValidationError("loop table size mismatch");
  if (!t.reflexive && !g.loops.empty())
    throw ValidationError("loop table present on a non-reflexive theory");
  for (Idx v : g.inc)
    if (v >= g.nV) throw ValidationError("incidence entry out of range");
  for (Idx a : g.act)
    if (a >= g.nA) throw ValidationError("action entry out of range");
  for (Idx a : g.loops)
    if (a >= g.nA) throw ValidationError("loop entry out of range");

  for (Idx a = 0; a < g.nA; ++a) {
    if (g.action(a, t.monoid.identity) != a)
      throw ValidationError("identity action moves arc " + cell("a", a));
    for (Idx m = 0; m < nm; ++m) {
      for (Idx x = 0; x < nx; ++x) {
        if (g.incidence(g.action(a, m), x) != g.incidence(a, t.x_act(x, m)))
          throw ValidationError(
              "incidence/action compatibility fails at (arc " + cell("a", a) +
              ", m=" + t.monoid.names[m] + ", x=" + t.xset.names[x] + ")");
      }
      for (Idx m2 = 0; m2 < nm; ++m2) {
        if (g.action(a, t.mul(m, m2)) != g.action(g.action(a, m2), m))
          throw ValidationError("action law fails at (arc " + cell("a", a) +
                                ", m=" + t.monoid.names[m] +
                                ", m'=" + t.monoid.names[m2] + ")");
      }
    }
  }
  if (t.reflexive) {
    for (Idx v = 0; v < g.nV; ++v) {
      Idx l = g.loop_of(v);
      for (Idx x = 0; x < nx; ++x)
        if (g.incidence(l, x) != v)
          throw ValidationError("distinguished loop of " + cell("v", v) +
                                " is not a loop at its vertex (x=" +
                                t.xset.names[x] + ")");
      for (Idx m = 0; m < nm; ++m)
        if (g.action(l, m) != l)
          throw ValidationError("distinguished loop of " + cell("v", v) +
                                " moved by m=" + t.monoid.names[m]);
    }
    for (Idx a = 0; a < g.nA; ++a) {
      for (Idx x = 0; x < nx; ++x) {
        if (g.action(a, t.fix_elems[x]) != g.loop_of(g.incidence(a, x)))
          throw ValidationError("fix-element action of arc " + cell("a", a) +
                                " at x=" + t.xset.names[x] +
                                " is not the distinguished loop of its "
                                "incidence vertex");
      }
    }
  }
}

GraphPtr make_graph(TheoryPtr theory, Idx nV, std::vector<Idx> inc,
                    std::vector<Idx> act, std::vector<Idx> loops) {
  XMGraph g;
  g.theory = std::move(theory);
  g.nV = nV;
  const std::size_t nx = g.theory->x_size();
  g.nA = nx == 0 ? static_cast<Idx>(g.theory->m_size() == 0
                                        ? 0
                                        : act.size() / g.theory->m_size())
                 : static_cast<Idx>(inc.size() / nx);
  if (nx == 0 && g.theory->m_size() == 0)
    throw ValidationError("theory has an empty monoid");
  g.inc = std::move(inc);
  g.act = std::move(act);
  g.loops = std::move(loops);
  validate_graph(g);
  return std::make_shared<const XMGraph>(std::move(g));
}

GraphPtr representable(TheoryPtr theory, Obj obj) {
  const Theory& t = *theory;
  XMGraph g;
  g.theory = theory;
  if (obj == Obj::V) {
    g.nV = 1;
    if (t.reflexive) {
      g.nA = 1;
      g.inc.assign(t.x_size(), 0);
      g.act.assign(t.m_size(), 0);
      g.loops = {0};
    }
  } else {
    g.nV = static_cast<Idx>(t.x_size());
    g.nA = static_cast<Idx>(t.m_size());
    g.inc.resize(g.nA * t.x_size());
    g.act.resize(g.nA * t.m_size());
    for (Idx n = 0; n < g.nA; ++n) {
      for (Idx x = 0; x < t.x_size(); ++x)
        g.inc[n * t.x_size() + x] = t.x_act(x, n);
      // precomposition: the m-action sends arrow n to mul(m, n)
      for (Idx m = 0; m < t.m_size(); ++m)
        g.act[n * t.m_size() + m] = t.mul(m, n);
    }
    if (t.reflexive) {
      g.loops.resize(g.nV);
      for (Idx x = 0; x < g.nV; ++x) g.loops[x] = t.fix_elems[x];
    }
  }
  validate_graph(g);
  return std::make_shared<const XMGraph>(std::move(g));
}

void validate_morphism(const GraphMorphism& f) {
  if (!f.src || !f.dst) throw ValidationError("morphism lacks endpoints");
  const XMGraph& G = *f.src;
  const XMGraph& H = *f.dst;
  if (!same_theory(*G.theory, *H.theory))
    throw ValidationError("morphism endpoints live over different theories");
  const Theory& t = *G.theory;
  if (f.fV.size() != G.nV || f.fA.size() != G.nA)
    throw ValidationError("morphism table size mismatch");
  for (Idx v : f.fV)
    if (v >= H.nV) throw ValidationError("vertex image out of range");
  for (Idx a : f.fA)
    if (a >= H.nA) throw ValidationError("arc image out of range");
  for (Idx a = 0; a < G.nA; ++a) {
    for (Idx x = 0; x < t.x_size(); ++x)
      if (f.fV[G.incidence(a, x)] != H.incidence(f.fA[a], x))
        throw ValidationError("morphism breaks incidence at (arc a" +
                              std::to_string(a) + ", x=" + t.xset.names[x] +
                              ")");
    for (Idx m = 0; m < t.m_size(); ++m)
      if (f.fA[G.action(a, m)] != H.action(f.fA[a], m))
        throw ValidationError("morphism breaks the action at (arc a" +
                              std::to_string(a) + ", m=" + t.monoid.names[m] +
                              ")");
  }
  if (t.reflexive) {
    for (Idx v = 0; v < G.nV; ++v)
      if (f.fA[G.loop_of(v)] != H.loop_of(f.fV[v]))
        throw ValidationError("morphism breaks distinguished loops at v" +
                              std::to_string(v));
  }
}

bool is_morphism(const GraphMorphism& f) {
  try {
    validate_morphism(f);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

GraphMorphism identity_morphism(GraphPtr g) {
  GraphMorphism f;
  f.src = g;
  f.dst = g;
  f.fV.resize(g->nV);
  f.fA.resize(g->nA);
  for (Idx v = 0; v < g->nV; ++v) f.fV[v] = v;
  for (Idx a = 0; a < g->nA; ++a) f.fA[a] = a;
  return f;
}

GraphMorphism compose_morphisms(const GraphMorphism& f,
                                const GraphMorphism& g) {
  if (!(*g.dst == *f.src))
    throw UsageError("morphisms are not composable: codomain of the first "
                     "differs from domain of the second");
  GraphMorphism h;
  h.src = g.src;
  h.dst = f.dst;
  h.fV.resize(g.fV.size());
  h.fA.resize(g.fA.size());
  for (std::size_t v = 0; v < g.fV.size(); ++v) h.fV[v] = f.fV[g.fV[v]];
  for (std::size_t a = 0; a < g.fA.size(); ++a) h.fA[a] = f.fA[g.fA[a]];
  return h;
}

const char* arc_class_kind_name(ArcClassKind k) {
  switch (k) {
    case ArcClassKind::nonloop: return "nonloop";
    case ArcClassKind::fixed_loop: return "fixed-loop";
    case ArcClassKind::unfixed_loop: return "unfixed-loop";
    case ArcClassKind::distinguished_loop: return "distinguished-loop";
  }
  return "?";
}

bool is_loop_arc(const XMGraph& g, Idx a) {
  const std::size_t nx = g.theory->x_size();
  for (std::size_t x = 1; x < nx; ++x)
    if (g.incidence(a, static_cast<Idx>(x)) != g.incidence(a, 0)) return false;
  return true;
}

std::vector<ArcClass> classify_arcs(const XMGraph& g) {
  const std::vector<Idx> units = invertibles(g.theory->monoid);
  std::vector<bool> seen(g.nA, false);
  std::vector<ArcClass> out;
  for (Idx a = 0; a < g.nA; ++a) {
    if (seen[a]) continue;
    ArcClass cls;
    // orbit of a under the group of units
    std::vector<Idx> stack = {a};
    seen[a] = true;
    while (!stack.empty()) {
      Idx cur = stack.back();
      stack.pop_back();
      cls.orbit.push_back(cur);
      for (Idx u : units) {
        Idx nxt = g.action(cur, u);
        if (!seen[nxt]) {
          seen[nxt] = true;
          stack.push_back(nxt);
        }
      }
    }
    std::sort(cls.orbit.begin(), cls.orbit.end());
    if (!is_loop_arc(g, a)) {
      cls.kind = ArcClassKind::nonloop;
    } else if (cls.orbit.size() > 1) {
      cls.kind = ArcClassKind::unfixed_loop;
    } else {
      bool distinguished =
          g.theory->reflexive && g.theory->x_size() > 0 &&
          g.loop_of(g.incidence(a, 0)) == a;
      cls.kind = distinguished ? ArcClassKind::distinguished_loop
                               : ArcClassKind::fixed_loop;
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace xmg
