#include "rwgraph/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwgraph {

Gen Gen::a(std::uint32_t even_index) {
  if (even_index == 0 || even_index % 2 != 0)
    throw std::invalid_argument("Gen::a: index must be even positive");
  return Gen{AParam, even_index};
}

Gen Gen::s(std::uint32_t i) {
  if (i == 0) throw std::invalid_argument("Gen::s: index must be positive");
  return Gen{S, i};
}

std::string Gen::str() const {
  switch (kind) {
    case AParam: return "a" + std::to_string(index);
    case Circle: return "O";
    case X: return "x";
    case S: return "s" + std::to_string(index);
  }
  return "?";
}

Monomial Monomial::gen(Gen g, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.factors_.push_back({g, e});
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto& [g, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent_of(Gen g) const {
  for (auto& [h, e] : factors_)
    if (h == g) return e;
  return 0;
}

bool Monomial::contains_kind(Gen::Kind k) const {
  for (auto& [g, e] : factors_)
    if (g.kind == k) return true;
  return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  auto i = factors_.begin();
  auto j = o.factors_.begin();
  while (i != factors_.end() && j != o.factors_.end()) {
    if (i->first < j->first) r.factors_.push_back(*i++);
    else if (j->first < i->first) r.factors_.push_back(*j++);
    else {
      r.factors_.push_back({i->first, i->second + j->second});
      ++i; ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, factors_.end());
  r.factors_.insert(r.factors_.end(), j, o.factors_.end());
  return r;
}

bool operator<(const Monomial& m, const Monomial& n) {
  auto dm = m.total_degree(), dn = n.total_degree();
  if (dm != dn) return dm < dn;
  auto i = m.factors_.begin();
  auto j = n.factors_.begin();
  while (i != m.factors_.end() && j != n.factors_.end()) {
    if (i->first < j->first) return true;
    if (j->first < i->first) return false;
    if (i->second != j->second) return i->second > j->second;
    ++i; ++j;
  }
  return i == m.factors_.end() && j != n.factors_.end();
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += "*";
    out += factors_[k].first.str();
    if (factors_[k].second != 1) out += "^" + std::to_string(factors_[k].second);
  }
  return out;
}

MultiPoly::MultiPoly(const Rational& r) {
  if (!r.is_zero()) terms_[Monomial::unit()] = r;
}

MultiPoly MultiPoly::gen(Gen g, std::uint32_t e) {
  MultiPoly p;
  if (e == 0) return MultiPoly(Rational(1));
  p.terms_[Monomial::gen(g, e)] = Rational(1);
  return p;
}

bool MultiPoly::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Rational MultiPoly::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational())
    throw std::invalid_argument("MultiPoly::as_rational: not a constant: " + str());
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool MultiPoly::contains_kind(Gen::Kind k) const {
  for (auto& [m, c] : terms_)
    if (m.contains_kind(k)) return true;
  return false;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (auto& [m, c] : a.terms_)
    for (auto& [n, d] : b.terms_) r.add_term(m * n, c * d);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& r) const {
  MultiPoly out;
  if (r.is_zero()) return out;
  for (auto& [m, c] : terms_) out.terms_[m] = c * r;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    if (e >>= 1) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::extract_partial(const Partition& lambda) const {
  if (contains_kind(Gen::Circle))
    throw std::invalid_argument("extract_partial: input contains O, which has no derivative rule");
  MultiPoly out;
  Rational scale = lambda.factorial();
  for (auto& [m, c] : terms_) {
    Monomial rest;
    // the a-part of the monomial must be exactly prod a_{2i}^{lambda_i}
    std::vector<std::uint32_t> seen_mult;
    for (auto& [g, e] : m.factors()) {
      if (g.kind == Gen::AParam) {
        std::uint32_t i = g.index / 2;
        if (i > seen_mult.size()) seen_mult.resize(i, 0);
        seen_mult[i - 1] = e;
      } else {
        rest = rest * Monomial::gen(g, e);
      }
    }
    if (Partition::from_multiplicities(seen_mult) == lambda)
      out.add_term(rest, c * scale);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<Gen, Rational>& assignment) const {
  Rational total(0);
  for (auto& [m, c] : terms_) {
    Rational v = c;
    for (auto& [g, e] : m.factors()) {
      auto it = assignment.find(g);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: no value for generator " + g.str());
      v *= it->second.pow(e);
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::substitute_x_shifted(long shift) const {
  MultiPoly out;
  const Gen gx = Gen::x();
  for (auto& [m, c] : terms_) {
    Monomial rest;
    std::uint32_t xe = 0;
    for (auto& [g, e] : m.factors()) {
      if (g.kind == Gen::X) xe = e;
      else rest = rest * Monomial::gen(g, e);
    }
    if (xe == 0) {
      out.add_term(m, c);
      continue;
    }
    // (x - shift)^xe expanded binomially
    for (std::uint32_t j = 0; j <= xe; ++j) {
      Rational coef = c * Rational::binomial(xe, j) * Rational(-shift).pow(xe - j);
      Monomial mm = rest * Monomial::gen(gx, j);
      out.add_term(mm, coef);
    }
  }
  return out;
}

MultiPoly MultiPoly::divide_by_x_minus(const Rational& root) const {
  // view as sum_j c_j(other gens) * x^j, synthetic division by (x - root)
  std::map<std::uint32_t, MultiPoly> by_deg;
  std::uint32_t maxdeg = 0;
  for (auto& [m, c] : terms_) {
    Monomial rest;
    std::uint32_t xe = 0;
    for (auto& [g, e] : m.factors()) {
      if (g.kind == Gen::X) xe = e;
      else rest = rest * Monomial::gen(g, e);
    }
    MultiPoly piece;
    piece.add_term(rest, c);
    by_deg[xe] += piece;
    maxdeg = std::max(maxdeg, xe);
  }
  if (terms_.empty()) return MultiPoly();
  std::vector<MultiPoly> q(maxdeg);  // quotient coefficients, degree maxdeg-1
  MultiPoly carry;                   // b_j as we walk down
  for (std::uint32_t j = maxdeg; j > 0; --j) {
    MultiPoly cj = by_deg.count(j) ? by_deg[j] : MultiPoly();
    carry = cj + carry.scaled(root);
    q[j - 1] = carry;
  }
  MultiPoly c0 = by_deg.count(0) ? by_deg[0] : MultiPoly();
  MultiPoly remainder = c0 + carry.scaled(root);
  if (!remainder.is_zero())
    throw std::runtime_error("divide_by_x_minus: non-zero remainder " + remainder.str());
  MultiPoly out;
  for (std::uint32_t j = 0; j < maxdeg; ++j) {
    for (auto& [m, c] : q[j].terms_) out.add_term(m * Monomial::gen(Gen::x(), j), c);
  }
  return out;
}

MultiPoly MultiPoly::coefficient_of(Gen g, std::uint32_t e) const {
  MultiPoly out;
  for (auto& [m, c] : terms_) {
    if (m.exponent_of(g) != e) continue;
    Monomial rest;
    for (auto& [h, ex] : m.factors())
      if (!(h == g)) rest = rest * Monomial::gen(h, ex);
    out.add_term(rest, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational ac = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_unit()) out += ac.str();
    else if (ac.is_one()) out += m.str();
    else out += ac.str() + "*" + m.str();
  }
  return out;
}

}  // namespace rwgraph
