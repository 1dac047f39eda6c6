#ifndef XMG_BUNDLE_HPP_
#define XMG_BUNDLE_HPP_

#include <iosfwd>
#include <map>
#include <string>

#include "xmg/bridge.hpp"

namespace xmg {

// A bundle is a line-oriented text file holding one theory plus named
// graphs, hypergraphs, power graphs, reflexive F-graphs and morphisms.
// Saving a loaded canonical file reproduces it byte for byte.
struct Bundle {
  TheoryPtr theory;  // null when the bundle has no theory section
  // set when the theory was given by kind rather than explicit tables
  std::optional<std::pair<MonoidKind, Idx>> theory_kind;

  std::map<std::string, GraphPtr> graphs;
  std::map<std::string, Hypergraph> hypergraphs;
  std::map<std::string, PowerGraph> powergraphs;
  std::map<std::string, ReflexiveFGraph> rfgraphs;
  std::map<std::string, GraphMorphism> morphisms;
  std::map<std::string, std::pair<std::string, std::string>> morphism_ends;
};

Bundle load_bundle(std::istream& in);
Bundle load_bundle_file(const std::string& path);
void save_bundle(const Bundle& b, std::ostream& out);
void save_bundle_file(const Bundle& b, const std::string& path);

}  // namespace xmg

#endif  // XMG_BUNDLE_HPP_
