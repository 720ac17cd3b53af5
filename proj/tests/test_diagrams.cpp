#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rwgraph/graphvector.hpp"
#include "testutil.hpp"

using namespace rwgraph;
using testutil::Rng;

namespace {

GraphVector wv(int n) { return GraphVector::of(wheel(n)); }
GraphVector theta_v() { return GraphVector::of(theta()); }

// random relabeling: permutes trivalent vertices and legs, rotates triples
FlagGraph relabeled(const FlagGraph& g, Rng& rng, bool reverse_one = false) {
  std::vector<int> tperm(g.nT), uperm(g.nU);
  for (int i = 0; i < g.nT; ++i) tperm[i] = i;
  for (int i = 0; i < g.nU; ++i) uperm[i] = i;
  for (int i = g.nT - 1; i > 0; --i) std::swap(tperm[i], tperm[rng.below(i + 1)]);
  for (int i = g.nU - 1; i > 0; --i) std::swap(uperm[i], uperm[rng.below(i + 1)]);
  std::vector<int> rot(g.nT);
  for (int v = 0; v < g.nT; ++v) rot[v] = static_cast<int>(rng.below(3));
  int flip = reverse_one && g.nT > 0 ? static_cast<int>(rng.below(g.nT)) : -1;
  auto map_flag = [&](int f) {
    if (g.is_leg_flag(f)) return 3 * g.nT + uperm[f - 3 * g.nT];
    int v = f / 3, s = f % 3;
    int ns = (s + rot[v]) % 3;
    if (v == flip) ns = (3 - ns) % 3;  // reversal: 0->0, 1->2, 2->1
    return 3 * tperm[v] + ns;
  };
  FlagGraph h;
  h.nT = g.nT;
  h.nU = g.nU;
  h.partner.assign(g.flags(), -1);
  for (int f = 0; f < g.flags(); ++f) h.partner[map_flag(f)] = map_flag(g.partner[f]);
  return h;
}

// Brute-force isomorphism oracle, independent of the canonicalizer: searches
// all vertex bijections with all rotation/reversal alignments and reports
// which AS signs are realised by orientation-compatible isomorphisms a -> b.
struct IsoSigns {
  bool plus = false;
  bool minus = false;
};

IsoSigns iso_oracle(const FlagGraph& a, const FlagGraph& b) {
  IsoSigns found;
  if (a.nT != b.nT || a.nU != b.nU) return found;
  std::vector<int> flagmap(a.flags(), -1);
  std::vector<bool> used_t(b.nT, false), used_u(b.nU, false);

  // checks every a-edge whose two endpoints are already mapped
  auto edges_ok = [&]() {
    for (int f = 0; f < a.flags(); ++f) {
      if (flagmap[f] == -1) continue;
      int p = a.partner[f];
      if (flagmap[p] == -1) continue;
      if (b.partner[flagmap[f]] != flagmap[p]) return false;
    }
    return true;
  };

  std::function<void(int, int)> assign_legs = [&](int u, int sign) {
    if (u == a.nU) {
      if (edges_ok()) (sign > 0 ? found.plus : found.minus) = true;
      return;
    }
    for (int w = 0; w < b.nU; ++w) {
      if (used_u[w]) continue;
      used_u[w] = true;
      flagmap[a.leg_flag(u)] = b.leg_flag(w);
      assign_legs(u + 1, sign);
      flagmap[a.leg_flag(u)] = -1;
      used_u[w] = false;
    }
  };

  std::function<void(int, int)> assign_tri = [&](int v, int sign) {
    if (v == a.nT) {
      assign_legs(0, sign);
      return;
    }
    for (int w = 0; w < b.nT; ++w) {
      if (used_t[w]) continue;
      used_t[w] = true;
      for (int r = 0; r < 3; ++r) {
        for (int rev = 0; rev < 2; ++rev) {
          for (int s = 0; s < 3; ++s) {
            int img = rev ? (r - s + 3) % 3 : (s + r) % 3;
            flagmap[3 * v + s] = 3 * w + img;
          }
          assign_tri(v + 1, rev ? -sign : sign);
        }
      }
      for (int s = 0; s < 3; ++s) flagmap[3 * v + s] = -1;
      used_t[w] = false;
    }
  };

  assign_tri(0, 1);
  return found;
}

}  // namespace

TEST_CASE("canonical keys and signs agree with the brute-force oracle") {
  Rng rng(20240630);
  std::vector<FlagGraph> pool{wheel(1),
                              wheel(2),
                              wheel(3),
                              wheel(4),
                              theta(),
                              ell(),
                              disjoint_union(wheel(2), ell()),
                              disjoint_union(theta(), ell())};
  // glued variants of the 2-wheel pair enrich the pool with multi-edges
  {
    FlagGraph two = disjoint_union(wheel(2), wheel(2));
    auto add_glued = [&](std::vector<std::pair<int, int>> pairs) {
      GraphVector v = quotient(GraphVector::of(two).terms().begin()->second.second, pairs);
      for (auto& [k, tc] : v.terms()) pool.push_back(tc.second.assembled());
    };
    add_glued({{0, 2}});
    add_glued({{0, 2}, {1, 3}});
  }

  for (auto& g : pool) {
    CanonResult cg = canonicalize(g);
    // vanishing classes are exactly those with a sign-reversing self-map
    IsoSigns self = iso_oracle(g, g);
    CHECK(self.plus);
    CHECK(cg.zero == self.minus);

    // a random relabeling stays isomorphic; the oracle sign matches the
    // engine's transported sign
    for (int trial = 0; trial < 6; ++trial) {
      FlagGraph h = relabeled(g, rng);
      IsoSigns signs = iso_oracle(g, h);
      CanonResult ch = canonicalize(h);
      CHECK((signs.plus || signs.minus));
      CHECK(cg.zero == ch.zero);
      if (!cg.zero) {
        CHECK(cg.diagram.key == ch.diagram.key);
        int rel = cg.sign * ch.sign;
        CHECK((rel > 0 ? signs.plus : signs.minus));
        // when the class is nonzero both signs cannot be realised
        CHECK_FALSE((signs.plus && signs.minus));
      }
    }
  }

  // graphs with different keys admit no isomorphism at all
  std::vector<FlagGraph> distinct{wheel(2), theta(), disjoint_union(theta(), ell())};
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      IsoSigns signs = iso_oracle(distinct[i], distinct[j]);
      CHECK_FALSE(signs.plus);
      CHECK_FALSE(signs.minus);
    }
  }
}

TEST_CASE("odd wheels vanish by antisymmetry") {
  CHECK(canonicalize(wheel(3)).zero);
  CHECK(canonicalize(wheel(5)).zero);
  CHECK_FALSE(canonicalize(wheel(2)).zero);
  CHECK_FALSE(canonicalize(wheel(4)).zero);
  CHECK_FALSE(canonicalize(wheel(6)).zero);
}

TEST_CASE("loop edges force the zero class") {
  // one trivalent vertex with a loop and a stem to a leg
  FlagGraph g;
  g.nT = 1;
  g.nU = 1;
  g.partner = {1, 0, 3, 2};
  CHECK(canonicalize(g).zero);
}

TEST_CASE("canonical form is label invariant with transported sign") {
  Rng rng(4242);
  std::vector<FlagGraph> pool{wheel(2), wheel(4), theta(),
                              disjoint_union(wheel(2), wheel(2)),
                              disjoint_union(theta(), ell())};
  for (auto& g : pool) {
    CanonResult base = canonicalize(g);
    REQUIRE_FALSE(base.zero);
    for (int trial = 0; trial < 40; ++trial) {
      CanonResult r = canonicalize(relabeled(g, rng));
      CHECK(r.diagram.key == base.diagram.key);
      CHECK(r.sign == base.sign);
    }
    if (g.nT > 0) {
      for (int trial = 0; trial < 10; ++trial) {
        CanonResult r = canonicalize(relabeled(g, rng, /*reverse_one=*/true));
        CHECK(r.diagram.key == base.diagram.key);
        CHECK(r.sign == -base.sign);
      }
    }
  }
}

TEST_CASE("canonicalize is idempotent on its representative") {
  for (auto& g : {wheel(2), wheel(4), theta(), disjoint_union(wheel(2), ell())}) {
    CanonResult r = canonicalize(g);
    REQUIRE_FALSE(r.zero);
    CanonResult again = canonicalize(r.diagram.assembled());
    CHECK(again.sign == 1);
    CHECK(again.diagram.key == r.diagram.key);
  }
}

TEST_CASE("gluing the legs of w2 yields theta") {
  CHECK(glue(wheel(2), 0, 1) == theta_v());
}

TEST_CASE("gluing the two legs of ell yields the circle") {
  CHECK(glue(ell(), 0, 1) == GraphVector::unit().scaled(MultiPoly::circle()));
}

TEST_CASE("gluing one leg of w2 to one leg of another w2") {
  GraphVector joined = GraphVector::of(disjoint_union(wheel(2), wheel(2)));
  REQUIRE(joined.size() == 1);
  const CanonicalDiagram& d = joined.terms().begin()->second.second;
  GraphVector glued = glue(d, 0, 2);
  REQUIRE(glued.size() == 1);
  const CanonicalDiagram& r = glued.terms().begin()->second.second;
  CHECK(r.tri == 4);
  CHECK(r.legs == 2);
  CHECK(r.component_count() == 1);
}

TEST_CASE("quotient is order independent and empty quotient is identity") {
  GraphVector joined = GraphVector::of(disjoint_union(wheel(2), wheel(2)));
  const CanonicalDiagram& d = joined.terms().begin()->second.second;
  GraphVector a = quotient(d, {{0, 2}, {1, 3}});
  GraphVector b = quotient(d, {{1, 3}, {0, 2}});
  GraphVector c = quotient(d, {{3, 1}, {2, 0}});
  CHECK(a == b);
  CHECK(a == c);
  CHECK(quotient(d, {}) == joined);
  CHECK_THROWS(quotient(d, {{0, 0}}));
  CHECK_THROWS(quotient(d, {{0, 1}, {1, 2}}));
}

TEST_CASE("product: unit, powers, bilinearity") {
  GraphVector th = theta_v();
  CHECK(product(GraphVector::unit(), wv(2)) == wv(2));
  GraphVector th2 = product(th, th);
  REQUIRE(th2.size() == 1);
  CHECK(th2.terms().begin()->second.first == MultiPoly(1));
  CHECK(th2.terms().begin()->second.second.component_count() == 2);
  // (2 theta) u (3 ell) = 6 theta ell
  GraphVector lhs = product(th.scaled(Rational(2)), GraphVector::of(ell()).scaled(Rational(3)));
  GraphVector rhs = product(th, GraphVector::of(ell())).scaled(Rational(6));
  CHECK(lhs == rhs);
}

TEST_CASE("hat operator") {
  // ell-hat(w2) = 2 theta
  CHECK(hat_apply(ell_vector(), wv(2)) == theta_v().scaled(Rational(2)));
  // ell-hat(ell) = 2 O
  CHECK(hat_apply(ell_vector(), ell_vector()) ==
        GraphVector::unit().scaled(MultiPoly::circle()).scaled(Rational(2)));
  // 1-hat is the identity
  GraphVector mix = wv(2) + theta_v().scaled(Rational(-3));
  CHECK(hat_apply(GraphVector::unit(), mix) == mix);
  // more legs on the left than the right gives zero
  CHECK(hat_apply(wv(4), wv(2)).is_zero());
}

TEST_CASE("partial") {
  CHECK(partial(wv(2)) == theta_v());
  CHECK(partial(ell_vector()) == GraphVector::unit().scaled(MultiPoly::circle()));
  CHECK(partial(theta_v()).is_zero());
  CHECK(partial(GraphVector::unit()).is_zero());
  // del = (1/2) ell-hat exactly
  for (auto& v : {wv(2), wv(4), product(wv(2), wv(2))}) {
    CHECK(partial(v) == hat_apply(ell_half_vector(), v));
  }
}

TEST_CASE("pairing") {
  // <w2, w2> = 2 Theta_2: both bijections are cross gluings
  GraphVector p = pairing(wv(2), wv(2));
  REQUIRE(p.size() == 1);
  CHECK(p.terms().begin()->second.first == MultiPoly(2));
  CHECK(p.terms().begin()->second.second.tri == 4);
  CHECK(p.terms().begin()->second.second.component_count() == 1);

  CHECK(pairing(GraphVector::unit(), theta_v()) == theta_v());
  CHECK(pairing(GraphVector::unit(), wv(2)).is_zero());
  // the literal bijection definition sends any leg-bearing diagram to zero,
  // even when it also has trivalent components
  CHECK(pairing(GraphVector::unit(), product(theta_v(), GraphVector::of(ell()))).is_zero());
  // symmetry on leg-bearing diagrams
  GraphVector a = wv(2) + wv(4).scaled(Rational(2));
  GraphVector b = product(wv(2), wv(2)) + wv(2);
  CHECK(pairing(a, b) == pairing(b, a));
}

TEST_CASE("closure") {
  CHECK(closure(wv(2)) == theta_v());
  CHECK(closure(theta_v()) == theta_v());
  // odd legged diagrams close to zero
  GraphVector w2w4glued = glue(product(wv(2), wv(4)).terms().begin()->second.second, 0, 2);
  for (auto& [k, tc] : w2w4glued.terms()) CHECK(tc.second.legs == 4);

  // <w2^2> = 2 Theta_2 + Theta^2, Theta_2 built by an explicit glue chain
  GraphVector w2w2 = product(wv(2), wv(2));
  const CanonicalDiagram& d = w2w2.terms().begin()->second.second;
  GraphVector theta2 = quotient(d, {{0, 2}, {1, 3}});
  GraphVector expect = theta2.scaled(Rational(2)) + product(theta_v(), theta_v());
  CHECK(closure(w2w2) == expect);

  // closure via pairing with the truncated exp(ell/2)
  for (auto& v : {wv(2), product(wv(2), wv(2)), wv(4), product(wv(4), wv(2))}) {
    int legs = 0;
    for (auto& [k, tc] : v.terms()) legs = std::max(legs, tc.second.legs);
    GraphVector expell;
    GraphVector po = GraphVector::unit();
    Rational fact(1);
    for (int m = 0; 2 * m <= legs; ++m) {
      if (m > 0) {
        po = product(po, ell_half_vector());
        fact *= Rational(m);
      }
      expell += po.scaled(Rational(1) / fact);
    }
    CHECK(closure(v) == pairing(v, expell));
  }
}

TEST_CASE("connected part and connected closure") {
  GraphVector th = theta_v();
  CHECK(connected_part(product(th, th) + th) == th);
  CHECK(connected_closure(wv(2)) == th);
  // <<w2^2>> = 2 Theta_2
  GraphVector w2w2 = product(wv(2), wv(2));
  const CanonicalDiagram& d = w2w2.terms().begin()->second.second;
  GraphVector theta2 = quotient(d, {{0, 2}, {1, 3}});
  CHECK(connected_closure(w2w2) == theta2.scaled(Rational(2)));
}

TEST_CASE("H acts by O/2 + legs") {
  GraphVector w2 = wv(2);
  MultiPoly expect = MultiPoly::circle().scaled(Rational(1, 2)) + MultiPoly(2);
  CHECK(H_apply(w2) == w2.scaled(expect));
  CHECK(H_apply(GraphVector::unit()) ==
        GraphVector::unit().scaled(MultiPoly::circle().scaled(Rational(1, 2))));
}

TEST_CASE("sl2 commutators on ell") {
  // [ell/2, del] ell = -(O/2 + 2) ell
  GraphVector l = ell_vector();
  GraphVector lhs = product(ell_half_vector(), partial(l)) - partial(product(ell_half_vector(), l));
  MultiPoly h = MultiPoly::circle().scaled(Rational(1, 2)) + MultiPoly(2);
  CHECK(lhs == l.scaled(h).scaled(Rational(-1)));
}

TEST_CASE("sl2 relations within a small flag bound") {
  Sl2Report rep = sl2_check(8);
  INFO(rep.detail);
  CHECK(rep.ok);
  // the complete list of nonzero classes with <= 8 flags:
  // 1, ell, ell^2, ell^3, ell^4, theta, theta ell, w2
  CHECK(rep.checked == 8);
}

TEST_CASE("partial is a differential operator of order two") {
  // del(gamma^n) = C(n,1) del(gamma) gamma^{n-1} + C(n,2) del(gamma,gamma) gamma^{n-2}
  for (int base : {2, 4}) {
    GraphVector g = wv(base);
    GraphVector dg = partial(g);
    GraphVector d2 = partial(product(g, g)) - product(dg, g).scaled(Rational(2));
    for (unsigned n = 2; n <= 4; ++n) {
      GraphVector gn = power(g, n);
      GraphVector lhs = partial(gn);
      GraphVector rhs = product(dg, power(g, n - 1)).scaled(Rational::binomial(n, 1)) +
                        product(d2, power(g, n - 2)).scaled(Rational::binomial(n, 2));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("pairing against ell/2 equals pairing of the partial") {
  // <gamma, (ell/2) gamma'> = <del gamma, gamma'> for gamma without ell components
  std::vector<GraphVector> gammas{wv(2), wv(4), product(wv(2), wv(2))};
  std::vector<GraphVector> primes{GraphVector::unit(), wv(2), theta_v(),
                                  product(wv(2), ell_vector())};
  for (auto& g : gammas) {
    for (auto& gp : primes) {
      CHECK(pairing(g, product(ell_half_vector(), gp)) == pairing(partial(g), gp));
    }
  }
}

TEST_CASE("exp(del) pairing formula") {
  // <exp(del)(g g'), 1> = <exp(del) g, exp(del) g'> on ell-free diagrams
  std::vector<GraphVector> pool{wv(2), wv(4), product(wv(2), wv(2)), theta_v()};
  for (auto& g : pool) {
    for (auto& gp : pool) {
      GraphVector lhs = pairing(exp_partial(product(g, gp)), GraphVector::unit());
      GraphVector rhs = pairing(exp_partial(g), exp_partial(gp));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("diagram enumeration has no duplicates and excludes zero classes") {
  auto ds = enumerate_diagrams(8);
  std::set<std::string> keys;
  for (auto& d : ds) {
    CHECK(keys.insert(d.key).second);
    CHECK(3 * d.tri + d.legs <= 8);
  }
  // exactly the eight nonzero classes with <= 8 flags
  auto lv = canonicalize(ell()).diagram;
  auto th = canonicalize(theta()).diagram;
  std::set<std::string> expect{"1"};
  GraphVector acc = GraphVector::single(lv, MultiPoly(1));
  expect.insert(lv.key);
  for (int p = 2; p <= 4; ++p) {
    acc = product(acc, GraphVector::single(lv, MultiPoly(1)));
    expect.insert(acc.terms().begin()->first);
  }
  expect.insert(th.key);
  expect.insert(canonicalize(wheel(2)).diagram.key);
  expect.insert(product(GraphVector::single(th, MultiPoly(1)),
                        GraphVector::single(lv, MultiPoly(1)))
                    .terms()
                    .begin()
                    ->first);
  CHECK(keys == expect);
}

TEST_CASE("diagram file parsing") {
  std::istringstream good(
      "# the 2-wheel\n"
      "V v0 T s0 n0 p0\n"
      "V v1 T s1 n1 p1\n"
      "V u0 U f0\n"
      "V u1 U f1\n"
      "E n0 p1\n"
      "E n1 p0\n"
      "E s0 f0\n"
      "E s1 f1\n");
  auto sk = parse_diagram(good);
  auto compiled = compile(sk);
  CHECK(compiled.graph.nT == 2);
  CHECK(compiled.graph.nU == 2);
  CHECK(canonicalize(compiled.graph).diagram.key == canonicalize(wheel(2)).diagram.key);
  CHECK(compiled.leg_index.at("u0") == 0);

  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    auto sk = parse_diagram(in);
    compile(sk);
  };
  CHECK_THROWS_WITH(bad("V v T a b c\nE a b\n"), doctest::Contains("c"));
  CHECK_THROWS_WITH(bad("V v T a b c\nV u U a\nE a b\nE c a\n"), doctest::Contains("a"));
  std::istringstream syntax("V v T a b\n");
  CHECK_THROWS_WITH(parse_diagram(syntax), doctest::Contains("line 1"));
}
