#ifndef RWGRAPH_PARTITION_HPP
#define RWGRAPH_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rwgraph/rational.hpp"

namespace rwgraph {

// Integer partition lambda, stored as multiplicities lambda_i over the part
// sizes i >= 1. ||lambda|| = sum i*lambda_i, |lambda| = sum lambda_i,
// lambda! = prod lambda_i!.
class Partition {
 public:
  Partition() = default;
  static Partition from_multiplicities(std::vector<std::uint32_t> mult);
  // parts as a list of i's, any order
  static Partition from_parts(const std::vector<std::uint32_t>& parts);

  // External text encoding: the parts written as their even indices 2i in
  // non-increasing order, e.g. "4,2" for one part 2 and one part 1. Both ','
  // and '+' are accepted as separators; the empty string is the empty
  // partition.
  static Partition parse(const std::string& text);
  std::string str(char sep = ',') const;  // even indices, non-increasing

  bool empty() const { return mult_.empty(); }
  std::uint64_t weight() const;       // ||lambda||
  std::uint64_t length() const;       // |lambda|
  Rational factorial() const;         // lambda!
  std::uint32_t multiplicity(std::uint32_t i) const;
  std::uint32_t max_part() const { return static_cast<std::uint32_t>(mult_.size()); }
  // non-increasing list of part sizes i
  std::vector<std::uint32_t> parts() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.mult_ == b.mult_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // weight first, then lexicographic on the non-increasing part list; this is
  // also the order in which enumerate_partitions emits
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  std::vector<std::uint32_t> mult_;  // mult_[i-1] = lambda_i, no trailing zeros
};

// All partitions of n, each exactly once, in the deterministic order
// (1^n) first, (n) last.
std::vector<Partition> enumerate_partitions(unsigned n);

// All partitions with 1 <= ||lambda|| <= max_weight, ordered by weight then
// as enumerate_partitions.
std::vector<Partition> enumerate_partitions_up_to(unsigned max_weight);

}  // namespace rwgraph

#endif
