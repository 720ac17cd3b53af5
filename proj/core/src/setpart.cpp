#include "rwgraph/setpart.hpp"

#include <algorithm>
#include <numeric>

namespace rwgraph {

namespace {

void gen_pairings(std::vector<int>& rest, std::vector<std::pair<int, int>>& acc,
                  std::vector<PairPartition>& out) {
  if (rest.empty()) {
    out.push_back(PairPartition{acc});
    return;
  }
  int first = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    int mate = rest[j];
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t k = 1; k < rest.size(); ++k)
      if (k != j) next.push_back(rest[k]);
    acc.push_back({first, mate});
    gen_pairings(next, acc, out);
    acc.pop_back();
  }
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int x, int y) { up[find(x)] = find(y); }
};

}  // namespace

std::vector<PairPartition> enumerate_pair_partitions(std::vector<int> ground) {
  std::vector<PairPartition> out;
  if (ground.size() % 2 != 0) return out;
  std::sort(ground.begin(), ground.end());
  std::vector<std::pair<int, int>> acc;
  gen_pairings(ground, acc, out);
  return out;
}

std::vector<PairPartition> enumerate_connecting_pair_partitions(
    const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ground;
  for (auto& b : blocks) ground.insert(ground.end(), b.begin(), b.end());
  std::vector<PairPartition> out;
  for (auto& pp : enumerate_pair_partitions(ground)) {
    UnionFind uf(static_cast<int>(blocks.size()));
    // label -> block index
    auto block_of = [&](int label) {
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int l : blocks[i])
          if (l == label) return static_cast<int>(i);
      return -1;
    };
    for (auto& [a, b] : pp.pairs) uf.unite(block_of(a), block_of(b));
    bool connected = true;
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (uf.find(static_cast<int>(i)) != uf.find(0)) { connected = false; break; }
    if (connected) out.push_back(pp);
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_set_partitions(unsigned n) {
  std::vector<std::vector<std::vector<int>>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1
  std::vector<unsigned> rgs(n, 0);
  auto emit = [&]() {
    unsigned nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nb);
    for (unsigned i = 0; i < n; ++i) blocks[rgs[i]].push_back(static_cast<int>(i));
    out.push_back(std::move(blocks));
  };
  while (true) {
    emit();
    // next RGS
    int i = static_cast<int>(n) - 1;
    for (; i > 0; --i) {
      unsigned maxprev = 0;
      for (int j = 0; j < i; ++j) maxprev = std::max(maxprev, rgs[j]);
      if (rgs[i] <= maxprev) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (unsigned j = i + 1; j < n; ++j) rgs[j] = 0;
  }
  return out;
}

}  // namespace rwgraph
