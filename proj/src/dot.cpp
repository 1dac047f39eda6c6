#include "xmg/dot.hpp"

#include <ostream>
#include <sstream>

#include "xmg/monoid.hpp"

namespace xmg {

namespace {

bool symmetric_flavor(const Theory& t) {
  MonoidKind kind =
      t.reflexive ? MonoidKind::reflexive_symmetric : MonoidKind::symmetric;
  try {
    return same_theory(t,
                       make_standard_theory(static_cast<Idx>(t.x_size()), kind));
  } catch (const Error&) {
    return false;
  }
}

std::string orbit_label(const ArcClass& cls) {
  std::string s;
  for (std::size_t i = 0; i < cls.orbit.size(); ++i) {
    if (i) s += "~";
    s += "a" + std::to_string(cls.orbit[i]);
  }
  if (cls.kind == ArcClassKind::unfixed_loop)
    s += " (" + std::to_string(cls.orbit.size()) + ")";
  return s;
}

void write_undirected(const XMGraph& g, std::ostream& os) {
  os << "graph {\n";
  for (Idx v = 0; v < g.nV; ++v) os << "  v" << v << ";\n";
  for (const ArcClass& cls : classify_arcs(g)) {
    Idx rep = cls.orbit.front();
    std::string attrs = "label=\"" + orbit_label(cls) + "\"";
    if (cls.kind == ArcClassKind::distinguished_loop)
      attrs += ", style=dotted";
    if (cls.kind != ArcClassKind::nonloop || g.theory->x_size() == 2) {
      Idx u = g.incidence(rep, 0);
      Idx w = g.theory->x_size() < 2 ? u : g.incidence(rep, 1);
      os << "  v" << u << " -- v" << w << " [" << attrs << "];\n";
    } else {
      // wide orbits render as a class node joined to its incidences
      std::string node = "e" + std::to_string(rep);
      os << "  " << node << " [shape=box, " << attrs << "];\n";
      for (Idx x = 0; x < g.theory->x_size(); ++x)
        os << "  " << node << " -- v" << g.incidence(rep, x) << ";\n";
    }
  }
  os << "}\n";
}

void write_directed(const XMGraph& g, std::ostream& os) {
  os << "digraph {\n";
  for (Idx v = 0; v < g.nV; ++v) os << "  v" << v << ";\n";
  const bool two = g.theory->x_size() == 2;
  for (Idx a = 0; a < g.nA; ++a) {
    bool distinguished = g.theory->reflexive && g.theory->x_size() > 0 &&
                         g.loop_of(g.incidence(a, 0)) == a &&
                         is_loop_arc(g, a);
    std::string attrs = "label=\"a" + std::to_string(a) + "\"";
    if (distinguished) attrs += ", style=dotted";
    if (two) {
      os << "  v" << g.incidence(a, 0) << " -> v" << g.incidence(a, 1) << " ["
         << attrs << "];\n";
    } else {
      std::string node = "a" + std::to_string(a);
      os << "  " << node << " [shape=box, " << attrs << "];\n";
      for (Idx x = 0; x < g.theory->x_size(); ++x)
        os << "  " << node << " -> v" << g.incidence(a, x) << " [label=\""
           << g.theory->xset.names[x] << "\"];\n";
    }
  }
  os << "}\n";
}

}  // namespace

void export_dot(const XMGraph& g, std::ostream& os, DotMode mode) {
  if (mode == DotMode::automatic)
    mode = symmetric_flavor(*g.theory) && g.theory->x_size() >= 1
               ? DotMode::undirected
               : DotMode::directed;
  if (mode == DotMode::undirected) {
    if (!symmetric_flavor(*g.theory))
      throw UsageError("undirected output needs a symmetric theory");
    write_undirected(g, os);
  } else {
    write_directed(g, os);
  }
}

std::string dot_string(const XMGraph& g, DotMode mode) {
  std::ostringstream os;
  export_dot(g, os, mode);
  return os.str();
}

}  // namespace xmg
