#ifndef XMG_RNG_HPP_
#define XMG_RNG_HPP_

#include <cstdint>

namespace xmg {

// splitmix64: tiny deterministic generator. We roll our own instead of
// <random> distributions so that seeded runs produce identical streams on
// every platform and standard library.
struct SplitMix64 {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n == 0 returns 0.
  std::uint32_t below(std::uint32_t n) {
    if (n == 0) return 0;
    return static_cast<std::uint32_t>(next() % n);
  }

  bool coin() { return (next() & 1u) != 0; }
};

}  // namespace xmg

#endif  // XMG_RNG_HPP_
