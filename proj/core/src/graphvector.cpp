#include "rwgraph/graphvector.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rwgraph {

GraphVector GraphVector::single(const CanonicalDiagram& d, MultiPoly coeff) {
  GraphVector v;
  v.add(d, coeff);
  return v;
}

GraphVector GraphVector::of(const FlagGraph& g, const MultiPoly& coeff) {
  CanonResult r = canonicalize(g);
  if (r.zero) return GraphVector();
  return single(r.diagram, coeff.scaled(Rational(r.sign)));
}

MultiPoly GraphVector::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? MultiPoly() : it->second.first;
}

void GraphVector::add(const CanonicalDiagram& d, const MultiPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(d.key);
  if (it == terms_.end()) {
    terms_.emplace(d.key, std::make_pair(coeff, d));
  } else {
    it->second.first += coeff;
    if (it->second.first.is_zero()) terms_.erase(it);
  }
}

GraphVector& GraphVector::operator+=(const GraphVector& o) {
  for (auto& [k, tc] : o.terms_) add(tc.second, tc.first);
  return *this;
}

GraphVector& GraphVector::operator-=(const GraphVector& o) {
  for (auto& [k, tc] : o.terms_) add(tc.second, -tc.first);
  return *this;
}

GraphVector GraphVector::operator-() const {
  GraphVector r;
  for (auto& [k, tc] : terms_) r.terms_.emplace(k, std::make_pair(-tc.first, tc.second));
  return r;
}

GraphVector GraphVector::scaled(const MultiPoly& p) const {
  GraphVector r;
  if (p.is_zero()) return r;
  for (auto& [k, tc] : terms_) r.add(tc.second, tc.first * p);
  return r;
}

GraphVector GraphVector::scaled(const Rational& r) const { return scaled(MultiPoly(r)); }

bool operator==(const GraphVector& a, const GraphVector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second.first == j->second.first)) return false;
  }
  return true;
}

std::string GraphVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [k, tc] : terms_) {
    if (!out.empty()) out += "\n";
    out += tc.first.str() + "  " + k;
  }
  return out;
}

GraphVector product(const GraphVector& u, const GraphVector& v) {
  GraphVector r;
  for (auto& [ku, tu] : u.terms()) {
    for (auto& [kv, tv] : v.terms()) {
      std::vector<DiagComponent> comps = tu.second.comps;
      comps.insert(comps.end(), tv.second.comps.begin(), tv.second.comps.end());
      r.add(CanonicalDiagram::from_components(std::move(comps)), tu.first * tv.first);
    }
  }
  return r;
}

GraphVector power(const GraphVector& u, unsigned n) {
  GraphVector r = GraphVector::unit();
  for (unsigned i = 0; i < n; ++i) r = product(r, u);
  return r;
}

namespace {

// Removes leg pairs from a graph, rewiring partners; each pair that is a
// bare ell component contributes one factor of O.
struct GlueOutcome {
  FlagGraph graph;
  unsigned circles = 0;
};

GlueOutcome glue_pairs(const FlagGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> partner = g.partner;
  std::vector<bool> removed(g.nU, false);
  unsigned circles = 0;
  for (auto& [u, v] : pairs) {
    if (u < 0 || u >= g.nU || v < 0 || v >= g.nU)
      throw std::invalid_argument("glue: not a leg index");
    if (u == v) throw std::invalid_argument("glue: the two legs must differ");
    if (removed[u] || removed[v]) throw std::invalid_argument("glue: overlapping leg pairs");
    removed[u] = removed[v] = true;
    int fu = g.leg_flag(u), fv = g.leg_flag(v);
    if (partner[fu] == fv) {
      ++circles;
    } else {
      int p = partner[fu], q = partner[fv];
      partner[p] = q;
      partner[q] = p;
    }
  }
  GlueOutcome out;
  out.circles = circles;
  FlagGraph& h = out.graph;
  h.nT = g.nT;
  h.nU = 0;
  std::vector<int> legmap(g.nU, -1);
  for (int u = 0; u < g.nU; ++u)
    if (!removed[u]) legmap[u] = h.nU++;
  h.partner.assign(h.flags(), -1);
  auto remap = [&](int f) {
    if (!g.is_leg_flag(f)) return f;
    int lm = legmap[f - 3 * g.nT];
    return lm < 0 ? -1 : h.leg_flag(lm);
  };
  for (int f = 0; f < g.flags(); ++f) {
    int rf = remap(f);
    if (rf >= 0) h.partner[rf] = remap(partner[f]);
  }
  return out;
}

GraphVector glued_vector(const FlagGraph& g, const std::vector<std::pair<int, int>>& pairs,
                         const MultiPoly& coeff) {
  GlueOutcome out = glue_pairs(g, pairs);
  MultiPoly c = coeff;
  if (out.circles) c = c * MultiPoly::gen(Gen::circle(), out.circles);
  return GraphVector::of(out.graph, c);
}

// all injections of 0..k-1 into the values list, emitted as ordered picks
void for_each_injection(int k, const std::vector<int>& values,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::vector<bool> used(values.size(), false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(pick.size()) == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      pick.push_back(values[i]);
      rec();
      pick.pop_back();
      used[i] = false;
    }
  };
  rec();
}

}  // namespace

GraphVector glue(const FlagGraph& g, int leg_u, int leg_v) {
  return glued_vector(g, {{leg_u, leg_v}}, MultiPoly(1));
}

GraphVector glue(const CanonicalDiagram& d, int leg_u, int leg_v) {
  return glued_vector(d.assembled(), {{leg_u, leg_v}}, MultiPoly(1));
}

GraphVector quotient(const FlagGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  return glued_vector(g, pairs, MultiPoly(1));
}

GraphVector quotient(const CanonicalDiagram& d, const std::vector<std::pair<int, int>>& pairs) {
  return glued_vector(d.assembled(), pairs, MultiPoly(1));
}

GraphVector hat_apply(const GraphVector& gamma, const GraphVector& gamma_prime) {
  GraphVector r;
  for (auto& [kl, tl] : gamma.terms()) {
    for (auto& [kr, tr] : gamma_prime.terms()) {
      const CanonicalDiagram& L = tl.second;
      const CanonicalDiagram& R = tr.second;
      if (L.legs > R.legs) continue;
      FlagGraph joint = disjoint_union(L.assembled(), R.assembled());
      MultiPoly c = tl.first * tr.first;
      std::vector<int> rlegs;
      for (int j = 0; j < R.legs; ++j) rlegs.push_back(L.legs + j);
      for_each_injection(L.legs, rlegs, [&](const std::vector<int>& image) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < L.legs; ++i) pairs.push_back({i, image[i]});
        r += glued_vector(joint, pairs, c);
      });
    }
  }
  return r;
}

GraphVector pairing(const GraphVector& gamma, const GraphVector& gamma_prime) {
  GraphVector r;
  for (auto& [kl, tl] : gamma.terms()) {
    for (auto& [kr, tr] : gamma_prime.terms()) {
      const CanonicalDiagram& L = tl.second;
      const CanonicalDiagram& R = tr.second;
      if (L.legs != R.legs) continue;
      FlagGraph joint = disjoint_union(L.assembled(), R.assembled());
      MultiPoly c = tl.first * tr.first;
      std::vector<int> rlegs;
      for (int j = 0; j < R.legs; ++j) rlegs.push_back(L.legs + j);
      for_each_injection(L.legs, rlegs, [&](const std::vector<int>& image) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < L.legs; ++i) pairs.push_back({i, image[i]});
        r += glued_vector(joint, pairs, c);
      });
    }
  }
  return r;
}

GraphVector partial(const GraphVector& gamma) {
  GraphVector r;
  for (auto& [k, tc] : gamma.terms()) {
    const CanonicalDiagram& d = tc.second;
    FlagGraph g = d.assembled();
    for (int u = 0; u < d.legs; ++u)
      for (int v = u + 1; v < d.legs; ++v) r += glued_vector(g, {{u, v}}, tc.first);
  }
  return r;
}

GraphVector closure(const GraphVector& gamma) {
  GraphVector r;
  for (auto& [k, tc] : gamma.terms()) {
    const CanonicalDiagram& d = tc.second;
    FlagGraph g = d.assembled();
    std::vector<int> legs(d.legs);
    for (int i = 0; i < d.legs; ++i) legs[i] = i;
    for (auto& pp : enumerate_pair_partitions(legs)) r += glued_vector(g, pp.pairs, tc.first);
  }
  return r;
}

GraphVector connected_part(const GraphVector& gamma) {
  GraphVector r;
  for (auto& [k, tc] : gamma.terms())
    if (tc.second.component_count() == 1) r.add(tc.second, tc.first);
  return r;
}

GraphVector connected_closure(const GraphVector& gamma) { return connected_part(closure(gamma)); }

GraphVector H_apply(const GraphVector& gamma) {
  GraphVector r;
  MultiPoly half_circle = MultiPoly::circle().scaled(Rational(1, 2));
  for (auto& [k, tc] : gamma.terms()) {
    MultiPoly factor = half_circle + MultiPoly(Rational(tc.second.legs));
    r.add(tc.second, tc.first * factor);
  }
  return r;
}

GraphVector ell_vector() { return GraphVector::of(ell()); }

GraphVector ell_half_vector() { return GraphVector::of(ell(), MultiPoly(Rational(1, 2))); }

GraphVector exp_partial(const GraphVector& gamma) {
  GraphVector total;
  GraphVector term = gamma;
  Rational mfact(1);
  for (int m = 0; !term.is_zero(); ++m) {
    if (m > 0) mfact *= Rational(m);
    total += term.scaled(Rational(1) / mfact);
    term = partial(term);
  }
  return total;
}

std::vector<CanonicalDiagram> enumerate_diagrams(int max_flags) {
  std::map<std::string, CanonicalDiagram> seen;
  seen.emplace("1", CanonicalDiagram{});
  for (int f = 2; f <= max_flags; f += 2) {
    for (int t = 0; 3 * t <= f; ++t) {
      int u = f - 3 * t;
      // enumerate perfect matchings on the flag set of t triples + u legs
      FlagGraph g;
      g.nT = t;
      g.nU = u;
      g.partner.assign(f, -1);
      std::function<void()> rec = [&]() {
        int first = -1;
        for (int i = 0; i < f; ++i)
          if (g.partner[i] == -1) { first = i; break; }
        if (first == -1) {
          CanonResult c = canonicalize(g);
          if (!c.zero) seen.emplace(c.diagram.key, c.diagram);
          return;
        }
        for (int j = first + 1; j < f; ++j) {
          if (g.partner[j] != -1) continue;
          g.partner[first] = j;
          g.partner[j] = first;
          rec();
          g.partner[first] = -1;
          g.partner[j] = -1;
        }
      };
      rec();
    }
  }
  std::vector<CanonicalDiagram> out;
  for (auto& [k, d] : seen) out.push_back(d);
  return out;
}

Sl2Report sl2_check(int max_flags) {
  Sl2Report rep;
  GraphVector lhalf = ell_half_vector();
  for (const CanonicalDiagram& d : enumerate_diagrams(max_flags)) {
    GraphVector v = GraphVector::single(d, MultiPoly(1));
    GraphVector lv = product(lhalf, v);
    GraphVector dv = partial(v);

    GraphVector comm1 = product(lhalf, dv) - partial(lv);  // [ell/2, del] v
    GraphVector comm2 = H_apply(lv) - product(lhalf, H_apply(v));
    GraphVector comm3 = H_apply(dv) - partial(H_apply(v));

    if (!(comm1 + H_apply(v)).is_zero()) {
      rep.ok = false;
      rep.detail = "[ell/2, del] != -H on " + d.key;
      return rep;
    }
    if (!(comm2 - lv.scaled(Rational(2))).is_zero()) {
      rep.ok = false;
      rep.detail = "[H, ell/2] != 2 ell/2 on " + d.key;
      return rep;
    }
    if (!(comm3 + dv.scaled(Rational(2))).is_zero()) {
      rep.ok = false;
      rep.detail = "[H, del] != -2 del on " + d.key;
      return rep;
    }
    ++rep.checked;
  }
  return rep;
}

}  // namespace rwgraph
