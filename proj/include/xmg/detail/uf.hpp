#ifndef XMG_DETAIL_UF_HPP_
#define XMG_DETAIL_UF_HPP_

#include <algorithm>
#include <numeric>
#include <vector>

#include "xmg/common.hpp"

namespace xmg::detail {

// Union-find keeping the least index as representative.
struct UnionFind {
  std::vector<Idx> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  Idx find(Idx a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  bool unite(Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  // Renumbers classes 0..k-1 in order of least representative.
  std::vector<Idx> classes(Idx& count, std::vector<Idx>* reps_out = nullptr) {
    std::vector<Idx> reps;
    for (Idx i = 0; i < parent.size(); ++i)
      if (find(i) == i) reps.push_back(i);
    std::vector<Idx> idx(parent.size());
    for (Idx i = 0; i < parent.size(); ++i)
      idx[i] = static_cast<Idx>(
          std::lower_bound(reps.begin(), reps.end(), find(i)) - reps.begin());
    count = static_cast<Idx>(reps.size());
    if (reps_out) *reps_out = std::move(reps);
    return idx;
  }
};

}  // namespace xmg::detail

#endif  // XMG_DETAIL_UF_HPP_
