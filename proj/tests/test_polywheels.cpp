#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rwgraph/polywheel.hpp"

using namespace rwgraph;

namespace {

Partition lam(const char* s) { return Partition::parse(s); }
PWPolynomial C(const char* s) { return PWPolynomial::closed(lam(s)); }
PWPolynomial K(const char* s) { return PWPolynomial::connected(lam(s)); }
PWPolynomial R(long n) { return PWPolynomial(Rational(n)); }

}  // namespace

TEST_CASE("moment expansion over set partitions") {
  // one factor: C = K
  CHECK(moment_expand(lam("2")) == K("2"));
  // two identical factors
  CHECK(moment_expand(lam("2,2")) == K("2,2") + K("2").pow(2));
  // two distinct factors
  CHECK(moment_expand(lam("4,2")) == K("4,2") + K("2") * K("4"));
  // three identical factors: 5 set partitions collapse to 3 monomials
  CHECK(moment_expand(lam("2,2,2")) ==
        K("2,2,2") + R(3) * K("2") * K("2,2") + K("2").pow(3));
}

TEST_CASE("connected polywheels in closed polywheels: the published list") {
  CHECK(connected_to_closed(lam("2")) == C("2"));
  CHECK(connected_to_closed(lam("2,2")) == C("2,2") - C("2").pow(2));
  CHECK(connected_to_closed(lam("4")) == C("4"));
  CHECK(connected_to_closed(lam("2,2,2")) ==
        C("2,2,2") - R(3) * C("2") * C("2,2") + R(2) * C("2").pow(3));
  CHECK(connected_to_closed(lam("4,2")) == C("4,2") - C("2") * C("4"));
  CHECK(connected_to_closed(lam("6")) == C("6"));
  // the degree-8 entries; the printed list drops a <w~2^2> factor in the
  // +12 term of the first one
  CHECK(connected_to_closed(lam("2,2,2,2")) ==
        C("2,2,2,2") - R(4) * C("2") * C("2,2,2") - R(3) * C("2,2").pow(2) +
            R(12) * C("2").pow(2) * C("2,2") - R(6) * C("2").pow(4));
  CHECK(connected_to_closed(lam("4,2,2")) ==
        C("4,2,2") - R(2) * C("2") * C("4,2") - C("2,2") * C("4") +
            R(2) * C("2").pow(2) * C("4"));
  CHECK(connected_to_closed(lam("6,2")) == C("6,2") - C("2") * C("6"));
  CHECK(connected_to_closed(lam("4,4")) == C("4,4") - C("4").pow(2));
  CHECK(connected_to_closed(lam("8")) == C("8"));
}

TEST_CASE("mixed form keeps lower connected factors") {
  CHECK(connected_mixed_form(lam("2")) == C("2"));
  CHECK(connected_mixed_form(lam("2,2")) == C("2,2") - K("2").pow(2));
  CHECK(connected_mixed_form(lam("2,2,2")) ==
        C("2,2,2") - R(3) * K("2") * K("2,2") - K("2").pow(3));
  CHECK(connected_mixed_form(lam("4,2")) == C("4,2") - K("2") * K("4"));
}

TEST_CASE("moment/cumulant transforms are mutually inverse") {
  for (unsigned w = 1; w <= 5; ++w) {
    for (const Partition& l : enumerate_partitions(w)) {
      // substitute the closed expansion into the moment expansion of C[l]
      PWPolynomial back =
          moment_expand(l).substituted([&](const PWSymbol& s) -> const PWPolynomial* {
            if (s.kind != PWSymbol::Connected) return nullptr;
            static thread_local PWPolynomial tmp;
            tmp = connected_to_closed(s.lambda);
            return &tmp;
          });
      CHECK(back == PWPolynomial::closed(l));
      // and the other way round
      PWPolynomial forth =
          connected_to_closed(l).substituted([&](const PWSymbol& s) -> const PWPolynomial* {
            if (s.kind != PWSymbol::Closed) return nullptr;
            static thread_local PWPolynomial tmp;
            tmp = moment_expand(s.lambda);
            return &tmp;
          });
      CHECK(forth == PWPolynomial::connected(l));
    }
  }
}

TEST_CASE("expansions are homogeneous of degree 2||lambda||") {
  for (unsigned w = 1; w <= 4; ++w) {
    for (const Partition& l : enumerate_partitions(w)) {
      CHECK(connected_to_closed(l).homogeneous_degree() == 2 * w);
      CHECK(moment_expand(l).homogeneous_degree() == 2 * w);
    }
  }
}

TEST_CASE("diagram-level bridge carries the w~ sign") {
  // <w~2> = -<w2> = -Theta
  GraphVector minus_theta = GraphVector::of(theta()).scaled(Rational(-1));
  CHECK(closed_polywheel_vector(lam("2")) == minus_theta);
  CHECK(connected_polywheel_vector(lam("2")) == minus_theta);
  // <<w~2^2>> = +2 Theta_2 (two sign flips cancel)
  GraphVector joined = product(GraphVector::of(wheel(2)), GraphVector::of(wheel(2)));
  const CanonicalDiagram& d = joined.terms().begin()->second.second;
  GraphVector theta2 = quotient(d, {{0, 2}, {1, 3}});
  CHECK(connected_polywheel_vector(lam("2,2")) == theta2.scaled(Rational(2)));
}

TEST_CASE("cross validation against the diagram engine, low degrees") {
  for (const char* t : {"2", "2,2", "4", "2,2,2", "4,2", "6"}) {
    CrossValidateReport rep = cross_validate(lam(t), 6);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
  CHECK_THROWS(cross_validate(lam("2,2,2,2"), 6));  // bound exceeded
}

TEST_CASE("polywheel expression grammar") {
  CHECK(parse_pw_expression("c[4,2]") == C("4,2"));
  CHECK(parse_pw_expression("k[2,2]") == K("2,2"));
  CHECK(parse_pw_expression("k[2]^2") == K("2").pow(2));
  CHECK(parse_pw_expression("2*k[2] - 3/2*c[4]") ==
        R(2) * K("2") - C("4").scaled(Rational(3, 2)));
  CHECK(parse_pw_expression("(k[2] + c[2])^2") == (K("2") + C("2")).pow(2));
  CHECK(parse_pw_expression("-k[2]") == -K("2"));
  CHECK_THROWS(parse_pw_expression("k[3]"));
  CHECK_THROWS(parse_pw_expression("k[]"));
  CHECK_THROWS(parse_pw_expression("k[2] +"));
  CHECK_THROWS(parse_pw_expression("q[2]"));
}

TEST_CASE("pw polynomial rendering") {
  CHECK((R(2) * K("2") - C("4,2")).str() == "-c[4,2] + 2*k[2]");
  CHECK(PWPolynomial().str() == "0");
}
