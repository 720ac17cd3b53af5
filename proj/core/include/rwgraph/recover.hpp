#ifndef RWGRAPH_RECOVER_HPP
#define RWGRAPH_RECOVER_HPP

#include "rwgraph/beta.hpp"
#include "rwgraph/series.hpp"

namespace rwgraph {

// The two power series over Q[a2, a4, ...] encoding the Hilbert-scheme
// generating data: A has constant term 1 (and is identically 1 with all
// a-generators set to zero), D has constant term 0.
struct ADSeries {
  TruncSeries A;
  TruncSeries D;
};

// Recovers A(t), D(t) from the beta records up to max_degree: builds
//   Vtilde(t)  = sum_lambda a_record(lambda) a_{2 lambda}/lambda! t^||lambda||
//   log Utilde = sum_lambda c_record(lambda) a_{2 lambda}/lambda! t^||lambda||
// then T = t exp(-Vtilde), V = Vtilde o T^{-1}, A = exp(V),
// U24 = [Utilde (1 + T V'(T))] o T^{-1}, D = log(U24)/24.
ADSeries recover_AD(const std::vector<BetaRecord>& records, unsigned max_degree);

// The forward direction, an independent code path: from A and D builds the
// shifted Sheffer series sum_k s_k(x-k) t^k/k! with generating data
// exp(24 D(t)) exp(x log A(t)), takes its log (affine in x) and reads the
// a- and c-records back off by partial extraction.
std::vector<BetaRecord> forward_records_from_AD(const ADSeries& ad, unsigned max_degree);

}  // namespace rwgraph

#endif
