#ifndef RWGRAPH_SETPART_HPP
#define RWGRAPH_SETPART_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace rwgraph {

// Partition of a ground set of labels into two-element blocks. Blocks and
// the pairs inside them are kept sorted.
struct PairPartition {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const PairPartition& a, const PairPartition& b) {
    return a.pairs == b.pairs;
  }
  friend bool operator<(const PairPartition& a, const PairPartition& b) {
    return a.pairs < b.pairs;
  }
};

// All (|ground|-1)!! pair partitions in lexicographic order; empty sequence
// when |ground| is odd (matching the closure of odd-legged diagrams).
std::vector<PairPartition> enumerate_pair_partitions(std::vector<int> ground);

// Pair partitions of the disjoint union of the given blocks under which the
// blocks form a single linked cluster (links: same block, or paired by pi).
std::vector<PairPartition> enumerate_connecting_pair_partitions(
    const std::vector<std::vector<int>>& blocks);

// All set partitions of {0, .., n-1}, Bell(n) many, in restricted-growth
// order. Each partition is a list of blocks; blocks are sorted internally
// and by first element.
std::vector<std::vector<std::vector<int>>> enumerate_set_partitions(unsigned n);

}  // namespace rwgraph

#endif
