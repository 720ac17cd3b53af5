#ifndef RWGRAPH_PRNG_HPP
#define RWGRAPH_PRNG_HPP

#include <cstdint>

#include "rwgraph/rational.hpp"

namespace rwgraph {

// splitmix64; deterministic across platforms, used wherever a --seed flag
// promises reproducible verification runs
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t m) { return next() % m; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }
  Rational rational(long max_num = 6, long max_den = 4) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }
  Rational nonzero_rational(long max_num = 6, long max_den = 4) {
    Rational r = rational(max_num, max_den);
    while (r.is_zero()) r = rational(max_num, max_den);
    return r;
  }
};

}  // namespace rwgraph

#endif
