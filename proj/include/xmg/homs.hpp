#ifndef XMG_HOMS_HPP_
#define XMG_HOMS_HPP_

#include <cstdint>
#include <vector>

#include "xmg/graph.hpp"

namespace xmg {

struct HomOptions {
  std::uint64_t budget = 10'000'000;  // search nodes before CapacityError
  bool parallel = true;               // split the root level across threads
};

// Complete, duplicate-free list of morphisms G -> H in lexicographic order
// of (vertex table, arc table). Backtracks over vertex images first; arc
// images are then constrained by incidence and propagated along the monoid
// action. Throws CapacityError when the node budget is exhausted.
std::vector<GraphMorphism> enumerate_homs(const GraphPtr& G, const GraphPtr& H,
                                          const HomOptions& opts = {});

// Single-threaded reference implementation; the parallel kernel must agree
// with it exactly.
std::vector<GraphMorphism> enumerate_homs_serial(const GraphPtr& G,
                                                 const GraphPtr& H,
                                                 const HomOptions& opts = {});

std::uint64_t count_homs(const GraphPtr& G, const GraphPtr& H,
                         const HomOptions& opts = {});

}  // namespace xmg

#endif  // XMG_HOMS_HPP_
