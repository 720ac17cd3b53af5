#include "rwgraph/recover.hpp"

#include <stdexcept>

namespace rwgraph {

namespace {

// the monomial prod_i a_{2i}^{lambda_i}
MultiPoly a_monomial(const Partition& lambda) {
  MultiPoly m(Rational(1));
  for (std::uint32_t i = 1; i <= lambda.max_part(); ++i)
    if (lambda.multiplicity(i) > 0)
      m *= MultiPoly::gen(Gen::a(2 * i), lambda.multiplicity(i));
  return m;
}

}  // namespace

ADSeries recover_AD(const std::vector<BetaRecord>& records, unsigned max_degree) {
  int N = static_cast<int>(max_degree);
  TruncSeries vt(N), log_ut(N);
  for (const Partition& lambda : enumerate_partitions_up_to(max_degree)) {
    const BetaRecord& rec = find_record(records, lambda);  // throws when incomplete
    MultiPoly weight = a_monomial(lambda).scaled(Rational(1) / lambda.factorial());
    int k = static_cast<int>(lambda.weight());
    vt.at(k) += weight.scaled(rec.a);
    log_ut.at(k) += weight.scaled(rec.c);
  }

  TruncSeries T = series_exp(-vt).shifted_by_t();  // t exp(-Vtilde)
  TruncSeries Tinv = reversion(T);
  TruncSeries V = compose(vt, Tinv);
  TruncSeries A = series_exp(V);

  TruncSeries Vp = derivative(V).truncated(N);
  TruncSeries one = TruncSeries::constant(N, MultiPoly(1));
  TruncSeries Utilde = series_exp(log_ut);
  TruncSeries U24 = compose(Utilde * (one + T * compose(Vp, T)), Tinv);
  TruncSeries D = series_log(U24).scaled(Rational(1, 24));
  return ADSeries{A, D};
}

std::vector<BetaRecord> forward_records_from_AD(const ADSeries& ad, unsigned max_degree) {
  int N = static_cast<int>(max_degree);
  TruncSeries V = series_log(ad.A.truncated(N));
  TruncSeries U24 = series_exp(ad.D.truncated(N).scaled(Rational(24)));

  // S(t, x) = U24(t) exp(x V(t)) = sum_k s_k(x) t^k/k!
  TruncSeries S = U24 * series_exp(V.scaled(MultiPoly::x()));
  // shift per coefficient: x -> x - k
  TruncSeries shifted(N);
  for (int k = 0; k <= N; ++k) shifted.at(k) = S[k].substitute_x_shifted(k);
  // log of the shifted series is affine in x: x Vtilde(t) + log Utilde(t)
  TruncSeries L = series_log(shifted);

  std::vector<BetaRecord> out;
  for (const Partition& lambda : enumerate_partitions_up_to(max_degree)) {
    int k = static_cast<int>(lambda.weight());
    MultiPoly coeff = L[k];
    MultiPoly xpart = coeff.coefficient_of(Gen::x(), 1);
    MultiPoly cpart = coeff.coefficient_of(Gen::x(), 0);
    for (std::uint32_t e = 2; e <= coeff.total_degree(); ++e)
      if (!coeff.coefficient_of(Gen::x(), e).is_zero())
        throw std::logic_error("forward series is not affine in x at t^" + std::to_string(k));
    BetaRecord rec;
    rec.lambda = lambda;
    rec.a = xpart.extract_partial(lambda).as_rational();
    rec.c = cpart.extract_partial(lambda).as_rational();
    rec.beta_hilb = rec.a * Rational(k) + rec.c;
    rec.beta_kummer = rec.a * Rational(k + 1);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace rwgraph
