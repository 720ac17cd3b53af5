#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rwgraph/series.hpp"
#include "rwgraph/sheffer.hpp"
#include "testutil.hpp"

using namespace rwgraph;
using testutil::Rng;

namespace {

TruncSeries from_rationals(std::initializer_list<Rational> cs) {
  std::vector<MultiPoly> v;
  for (auto& c : cs) v.push_back(MultiPoly(c));
  return TruncSeries(static_cast<int>(v.size()) - 1, std::move(v));
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  int N = 6;
  TruncSeries one = TruncSeries::constant(N, MultiPoly(1));
  TruncSeries t = TruncSeries::t(N);
  CHECK(equal_to_order((one + t) * (one - t), one - t * t, N));

  TruncSeries s = one + t.scaled(Rational(3)) + (t * t).scaled(Rational(-2, 7));
  CHECK(equal_to_order(s / s, one, N));

  // geometric series
  TruncSeries geo = one / (one - t);
  for (int k = 0; k <= N; ++k) CHECK(geo[k] == MultiPoly(1));

  CHECK_THROWS(t / TruncSeries(N));  // zero constant term
}

TEST_CASE("exp and log") {
  int N = 5;
  TruncSeries t = TruncSeries::t(N);
  TruncSeries e = series_exp(t);
  CHECK(e[0] == MultiPoly(1));
  CHECK(e[1] == MultiPoly(1));
  CHECK(e[2] == MultiPoly(Rational(1, 2)));
  CHECK(e[3] == MultiPoly(Rational(1, 6)));

  TruncSeries l = series_log(TruncSeries::constant(N, MultiPoly(1)) + t);
  CHECK(l[1] == MultiPoly(1));
  CHECK(l[2] == MultiPoly(Rational(-1, 2)));
  CHECK(l[3] == MultiPoly(Rational(1, 3)));

  CHECK_THROWS(series_exp(TruncSeries::constant(N, MultiPoly(1))));
  CHECK_THROWS(series_log(t));

  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries s = rng.series_with_zero_head(7);
    CHECK(equal_to_order(series_log(series_exp(s)), s, 7));
    CHECK(equal_to_order(series_exp(series_log(rng.series_with_unit_head(7))),
                         rng.series_with_unit_head(0), 0));
  }
}

TEST_CASE("exp via partition sum agrees with the recursion") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries s = rng.series_with_zero_head(8);
    CHECK(equal_to_order(series_exp(s), series_exp_partition_sum(s), 8));
  }
  // also over a polynomial coefficient ring
  TruncSeries s(5);
  s.at(1) = MultiPoly::a(2);
  s.at(2) = MultiPoly::a(4).scaled(Rational(1, 3));
  CHECK(equal_to_order(series_exp(s), series_exp_partition_sum(s), 5));
}

TEST_CASE("composition") {
  int N = 4;
  TruncSeries t = TruncSeries::t(N);
  TruncSeries inner = t + t * t;
  // compose(t^2, t + t^2) = t^2 + 2 t^3 + t^4
  TruncSeries outer = t * t;
  TruncSeries got = compose(outer, inner);
  CHECK(got[2] == MultiPoly(1));
  CHECK(got[3] == MultiPoly(2));
  CHECK(got[4] == MultiPoly(1));
  CHECK(got[0].is_zero());
  CHECK(got[1].is_zero());

  Rng rng(7);
  TruncSeries s = rng.series_with_unit_head(N);
  CHECK(equal_to_order(compose(s, t), s, N));
  TruncSeries z = rng.series_with_zero_head(N);
  CHECK(equal_to_order(compose(t, z), z, N));
  CHECK_THROWS(compose(t, s));  // inner constant term nonzero
}

TEST_CASE("reversion of t exp(t)") {
  int N = 4;
  TruncSeries t = TruncSeries::t(N);
  TruncSeries u = series_exp(t).shifted_by_t();  // t e^t
  TruncSeries w = reversion(u);
  CHECK(w[1] == MultiPoly(1));
  CHECK(w[2] == MultiPoly(-1));
  CHECK(w[3] == MultiPoly(Rational(3, 2)));
  CHECK(w[4] == MultiPoly(Rational(-8, 3)));
  CHECK(equal_to_order(compose(u, w), t, N));
  CHECK(equal_to_order(compose(w, u), t, N));
}

TEST_CASE("reversion defining property on random series") {
  Rng rng(2024);
  int N = 8;
  for (int trial = 0; trial < 12; ++trial) {
    TruncSeries s(N);
    s.at(1) = MultiPoly(rng.nonzero_rational());
    for (int k = 2; k <= N; ++k) s.at(k) = MultiPoly(rng.rational());
    TruncSeries r = reversion(s);
    CHECK(equal_to_order(compose(s, r), TruncSeries::t(N), N));
    CHECK(equal_to_order(compose(r, s), TruncSeries::t(N), N));
  }
  CHECK(equal_to_order(reversion(TruncSeries::t(5)), TruncSeries::t(5), 5));
  CHECK_THROWS(reversion(TruncSeries::constant(5, MultiPoly(1))));
}

TEST_CASE("derivative chain rule through composition") {
  Rng rng(31337);
  int N = 7;
  for (int trial = 0; trial < 8; ++trial) {
    TruncSeries f = rng.series_with_unit_head(N);
    TruncSeries g = rng.series_with_zero_head(N);
    TruncSeries lhs = derivative(compose(f, g));
    TruncSeries rhs = compose(derivative(f).truncated(N), g) * derivative(g).truncated(N);
    CHECK(equal_to_order(lhs, rhs.truncated(N - 1), N - 1));
  }
}

TEST_CASE("series literal parsing and rendering round trip") {
  TruncSeries s = parse_series("1 - 1/2*t + 3*t^4", 5);
  CHECK(s[0] == MultiPoly(1));
  CHECK(s[1] == MultiPoly(Rational(-1, 2)));
  CHECK(s[2].is_zero());
  CHECK(s[4] == MultiPoly(3));
  CHECK(s.str() == "1 - 1/2*t + 3*t^4");
  CHECK(equal_to_order(parse_series(s.str(), 5), s, 5));

  CHECK(parse_series("t", 2)[1] == MultiPoly(1));
  CHECK(parse_series("t^2", 2)[2] == MultiPoly(1));
  CHECK(parse_series("2/3", 1)[0] == MultiPoly(Rational(2, 3)));
  CHECK(parse_series("-t + t", 2).is_zero());
  CHECK_THROWS(parse_series("t^9", 3));   // beyond the order
  CHECK_THROWS(parse_series("", 3));
  CHECK_THROWS(parse_series("1 +", 3));
  CHECK_THROWS(parse_series("x", 3));
}

TEST_CASE("sheffer table basics") {
  int N = 5;
  TruncSeries one = TruncSeries::constant(N, MultiPoly(1));
  TruncSeries t = TruncSeries::t(N);

  // A = 1, B = t: p_k(x) = x^k
  ShefferTable tab = sheffer_build(one, t, N);
  for (int k = 0; k <= N; ++k) {
    CHECK(tab.p[k] == MultiPoly::x().pow(k));
    CHECK(tab.s[k] == tab.p[k]);  // A = 1 forces s = p
  }

  // A = 1 + t, B = t: s_k(x) = x^k + k x^{k-1}
  ShefferTable tab2 = sheffer_build(one + t, t, N);
  for (int k = 1; k <= N; ++k)
    CHECK(tab2.s[k] == MultiPoly::x().pow(k) + MultiPoly::x().pow(k - 1).scaled(Rational(k)));

  CHECK_THROWS(sheffer_build(t, t, N));        // A(0) = 0
  CHECK_THROWS(sheffer_build(one, one, N));    // B(0) != 0
}

TEST_CASE("sheffer shifted identities") {
  int N = 6;
  TruncSeries one = TruncSeries::constant(N, MultiPoly(1));
  TruncSeries t = TruncSeries::t(N);

  CHECK(sheffer_shift_check(one, t, N).ok());
  CHECK(sheffer_shift_check(one + t, t + (t * t).scaled(Rational(1, 2)), N).ok());

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int order = 8;
    TruncSeries A(order), B(order);
    A.at(0) = MultiPoly(rng.nonzero_rational());
    for (int k = 1; k <= order; ++k) {
      A.at(k) = MultiPoly(rng.rational());
      B.at(k) = MultiPoly(rng.rational());
    }
    auto rep = sheffer_shift_check(A, B, order);
    INFO(rep.detail);
    CHECK(rep.ok());
  }
}
