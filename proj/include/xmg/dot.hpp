#ifndef XMG_DOT_HPP_
#define XMG_DOT_HPP_

#include <iosfwd>
#include <string>

#include "xmg/graph.hpp"

namespace xmg {

enum class DotMode { automatic, undirected, directed };

// Writes a DOT description of the graph.
//
// Undirected mode (symmetric flavors only) renders one edge per arc orbit:
// distinguished loops dotted, unfixed loop orbits carry their orbit size
// as a "(n)" suffix. Directed mode renders raw arcs when |X| = 2 and an
// incidence bipartite graph otherwise.
void export_dot(const XMGraph& g, std::ostream& os,
                DotMode mode = DotMode::automatic);

std::string dot_string(const XMGraph& g, DotMode mode = DotMode::automatic);

}  // namespace xmg

#endif  // XMG_DOT_HPP_
