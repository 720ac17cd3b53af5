#ifndef RWGRAPH_SHEFFER_HPP
#define RWGRAPH_SHEFFER_HPP

#include <string>

#include "rwgraph/series.hpp"

namespace rwgraph {

// p_k and s_k of the generating identities
//   sum_k p_k(x) t^k/k! = exp(x B(t))
//   sum_k s_k(x) t^k/k! = A(t) exp(x B(t)),
// with x an auxiliary generator of the coefficient ring.
// Invariants: p_0 = 1, deg p_k <= k.
struct ShefferTable {
  int order = 0;
  std::vector<MultiPoly> p;  // k = 0..order
  std::vector<MultiPoly> s;
};

// Requires B(0) = 0 and A(0) a nonzero rational.
ShefferTable sheffer_build(const TruncSeries& A, const TruncSeries& B, int order);

struct ShiftCheckReport {
  bool pstat_ok = false;
  bool sstat_ok = false;
  std::string detail;  // first mismatch, empty when both hold
  bool ok() const { return pstat_ok && sstat_ok; }
};

// Verifies both shifted identities
//   sum_k x p_k(x-k)/(x-k) t^k/k! = exp(x B(W_B(t)))
//   sum_k s_k(x-k) t^k/k!        = A(W_B)/(1 + W_B B'(W_B)) exp(x B(W_B))
// coefficient-wise up to the given order, W_B being the compositional
// inverse of t exp(B(t)).
ShiftCheckReport sheffer_shift_check(const TruncSeries& A, const TruncSeries& B, int order);

}  // namespace rwgraph

#endif
