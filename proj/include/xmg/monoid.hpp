#ifndef XMG_MONOID_HPP_
#define XMG_MONOID_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xmg/common.hpp"

namespace xmg {

// A finite monoid given by its full multiplication table.
//
// The product convention is diagrammatic throughout the library:
// product(a, b) means "apply a, then b". For submonoids of the endomap
// monoid of a finite set this is product(f, g) = g after f as functions.
struct FiniteMonoid {
  std::vector<std::string> names;  // canonical element names
  std::vector<Idx> mul;            // flattened n*n, mul[a*n + b]
  Idx identity = 0;

  std::size_t size() const { return names.size(); }

  Idx product(Idx a, Idx b) const { return mul[a * size() + b]; }

  // Checks unit and associativity laws. Associativity is cubic, so the
  // exhaustive scan is capped; larger tables check units only.
  void validate(std::size_t assoc_limit = 64) const;
};

// A finite right M-set: act(x, identity) = x and
// act(x, product(a, b)) = act(act(x, a), b).
struct RightMSet {
  std::vector<std::string> names;  // carrier element names
  std::vector<Idx> act;            // flattened |X|*|M|, act[x*|M| + m]

  std::size_t size() const { return names.size(); }

  Idx apply(Idx x, Idx m, std::size_t m_size) const {
    return act[x * m_size + m];
  }

  void validate(const FiniteMonoid& monoid) const;
};

enum class MonoidKind {
  oriented,             // identity only
  symmetric,            // all permutations of X
  hereditary,           // all endomaps of X
  reflexive_oriented,   // identity plus all constant maps
  reflexive_symmetric,  // permutations plus constant maps
  reflexive_hereditary  // all endomaps (reflexive theory flavour)
};

bool monoid_kind_reflexive(MonoidKind kind);
const char* monoid_kind_name(MonoidKind kind);
std::optional<MonoidKind> monoid_kind_from_name(const std::string& name);

// Builds the named submonoid of End(X) for |X| = x_size together with the
// evaluation action act(x, f) = f(x). Element names are canonical and
// stable: "id", the swap "i" when |X| = 2, constants "c_<x>", and other
// maps in one-line image notation "[...]".
std::pair<FiniteMonoid, RightMSet> build_standard_monoid(Idx x_size,
                                                         MonoidKind kind);

// Elements m' absorbed on the right: product(m, m') = m' for every m.
std::vector<Idx> fix_set(const FiniteMonoid& monoid);

// Elements with a two-sided inverse.
std::vector<Idx> invertibles(const FiniteMonoid& monoid);

std::optional<Idx> inverse_of(const FiniteMonoid& monoid, Idx m);

}  // namespace xmg

#endif  // XMG_MONOID_HPP_
