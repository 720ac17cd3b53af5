#include "rwgraph/sheffer.hpp"

#include <stdexcept>

namespace rwgraph {

namespace {

void check_pair(const TruncSeries& A, const TruncSeries& B) {
  if (!B[0].is_zero())
    throw std::invalid_argument("sheffer: B must have zero constant term");
  if (!A[0].is_rational() || A[0].is_zero())
    throw std::invalid_argument("sheffer: A must have a nonzero rational constant term");
}

// exp(x B(t)) truncated, x the auxiliary generator
TruncSeries exp_xB(const TruncSeries& B, int order) {
  return series_exp(B.truncated(order).scaled(MultiPoly::x()));
}

}  // namespace

ShefferTable sheffer_build(const TruncSeries& A, const TruncSeries& B, int order) {
  check_pair(A, B);
  ShefferTable tab;
  tab.order = order;
  TruncSeries pgen = exp_xB(B, order);
  TruncSeries sgen = A.truncated(order) * pgen;
  for (int k = 0; k <= order; ++k) {
    Rational kf = Rational::factorial(k);
    tab.p.push_back(pgen[k].scaled(kf));
    tab.s.push_back(sgen[k].scaled(kf));
  }
  return tab;
}

ShiftCheckReport sheffer_shift_check(const TruncSeries& A, const TruncSeries& B, int order) {
  check_pair(A, B);
  ShiftCheckReport rep;
  ShefferTable tab = sheffer_build(A, B, order);

  // W_B with W_B(t exp(B(t))) = t
  TruncSeries u = series_exp(B.truncated(order)).shifted_by_t();  // t exp(B)
  TruncSeries w = reversion(u);
  TruncSeries BofW = compose(B.truncated(order), w);

  // pstat: sum_k x p_k(x-k)/(x-k) t^k / k!  ==  exp(x B(W_B(t)))
  TruncSeries lhs_p(order);
  for (int k = 0; k <= order; ++k) {
    MultiPoly shifted = tab.p[k].substitute_x_shifted(k);
    MultiPoly num = shifted * MultiPoly::x();
    MultiPoly quot = num.divide_by_x_minus(Rational(k));  // exact: p_k(0) = 0 for k >= 1
    lhs_p.at(k) = quot.scaled(Rational(1) / Rational::factorial(k));
  }
  TruncSeries rhs_p = series_exp(BofW.scaled(MultiPoly::x()));
  rep.pstat_ok = true;
  for (int k = 0; k <= order; ++k) {
    if (!(lhs_p[k] == rhs_p[k])) {
      rep.pstat_ok = false;
      rep.detail = "pstat mismatch at t^" + std::to_string(k) + ": " + lhs_p[k].str() +
                   " vs " + rhs_p[k].str();
      break;
    }
  }

  // sstat: sum_k s_k(x-k) t^k / k!  ==  A(W_B)/(1 + W_B B'(W_B)) exp(x B(W_B))
  TruncSeries lhs_s(order);
  for (int k = 0; k <= order; ++k)
    lhs_s.at(k) = tab.s[k].substitute_x_shifted(k).scaled(Rational(1) / Rational::factorial(k));
  TruncSeries Bp = derivative(B.truncated(order)).truncated(order);
  TruncSeries denom = TruncSeries::constant(order, MultiPoly(1)) + w * compose(Bp, w);
  TruncSeries rhs_s = (compose(A.truncated(order), w) / denom) * rhs_p;
  rep.sstat_ok = true;
  for (int k = 0; k <= order; ++k) {
    if (!(lhs_s[k] == rhs_s[k])) {
      rep.sstat_ok = false;
      if (!rep.detail.empty()) rep.detail += "; ";
      rep.detail += "sstat mismatch at t^" + std::to_string(k) + ": " + lhs_s[k].str() +
                    " vs " + rhs_s[k].str();
      break;
    }
  }
  return rep;
}

}  // namespace rwgraph
