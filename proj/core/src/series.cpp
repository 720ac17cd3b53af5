#include "rwgraph/series.hpp"

#include <cctype>
#include <stdexcept>

#include "rwgraph/partition.hpp"

namespace rwgraph {

TruncSeries::TruncSeries(int order, std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::constant(int order, const MultiPoly& c) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::t(int order) {
  if (order < 1) throw std::invalid_argument("TruncSeries::t: order must be >= 1");
  TruncSeries s(order);
  s.coeffs_[1] = MultiPoly(1);
  return s;
}

bool TruncSeries::is_zero() const {
  for (auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
  return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  if (!b.coeffs_[0].is_rational() || b.coeffs_[0].is_zero())
    throw std::invalid_argument("TruncSeries: division needs a unit rational constant term");
  Rational inv = Rational(1) / b.coeffs_[0].as_rational();
  TruncSeries q(n);
  for (int k = 0; k <= n; ++k) {
    MultiPoly acc = a.coeffs_[k];
    for (int j = 1; j <= k; ++j) acc -= b.coeffs_[j] * q.coeffs_[k - j];
    q.coeffs_[k] = acc.scaled(inv);
  }
  return q;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r(order());
  for (int k = 0; k <= order(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

TruncSeries TruncSeries::scaled(const Rational& r) const {
  TruncSeries s(order());
  for (int k = 0; k <= order(); ++k) s.coeffs_[k] = coeffs_[k].scaled(r);
  return s;
}

TruncSeries TruncSeries::scaled(const MultiPoly& p) const {
  TruncSeries s(order());
  for (int k = 0; k <= order(); ++k) s.coeffs_[k] = coeffs_[k] * p;
  return s;
}

TruncSeries TruncSeries::shifted_by_t() const {
  TruncSeries s(order());
  for (int k = 1; k <= order(); ++k) s.coeffs_[k] = coeffs_[k - 1];
  return s;
}

std::string TruncSeries::str() const {
  std::string out;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    std::string c;
    bool unit_coeff = false;
    if (coeffs_[k].is_rational()) {
      Rational r = coeffs_[k].as_rational();
      bool neg = r.sign() < 0;
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      Rational a = neg ? -r : r;
      unit_coeff = a.is_one() && k > 0;
      c = a.str();
    } else {
      if (!first) out += " + ";
      c = "(" + coeffs_[k].str() + ")";
    }
    first = false;
    if (k == 0) out += c;
    else if (k == 1) out += unit_coeff ? "t" : c + "*t";
    else out += (unit_coeff ? "t^" : c + "*t^") + std::to_string(k);
  }
  if (first) out = "0";
  return out;
}

TruncSeries parse_series(const std::string& text, int order) {
  TruncSeries s(order);
  std::size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("series literal: " + msg + " at position " + std::to_string(pos));
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) fail("empty literal");
      break;
    }
    Rational sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = Rational(-1);
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    // coefficient (optional when the term starts with t)
    Rational coeff(1);
    bool have_coeff = false;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      coeff = Rational::parse(text.substr(start, pos - start));
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    // power of t (optional)
    int power = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected exponent");
        power = std::stoi(text.substr(start, pos - start));
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or t");
    }
    if (power > order)
      fail("power t^" + std::to_string(power) + " exceeds the order " + std::to_string(order));
    s.at(power) += MultiPoly(sign * coeff);
    first = false;
  }
  return s;
}

bool equal_to_order(const TruncSeries& a, const TruncSeries& b, int order) {
  if (order > a.order() || order > b.order())
    throw std::invalid_argument("equal_to_order: comparison order exceeds stored order");
  for (int k = 0; k <= order; ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

TruncSeries derivative(const TruncSeries& s) {
  int n = s.order();
  TruncSeries d(n > 0 ? n - 1 : 0);
  for (int k = 1; k <= n; ++k) d.at(k - 1) = s[k].scaled(Rational(k));
  return d;
}

TruncSeries series_exp(const TruncSeries& s) {
  if (!s[0].is_zero())
    throw std::invalid_argument("series_exp: constant term must vanish");
  int n = s.order();
  // f' = s' f   =>   k f_k = sum_{j=1..k} j s_j f_{k-j}
  TruncSeries f(n);
  f.at(0) = MultiPoly(1);
  for (int k = 1; k <= n; ++k) {
    MultiPoly acc;
    for (int j = 1; j <= k; ++j) acc += s[j].scaled(Rational(j)) * f[k - j];
    f.at(k) = acc.scaled(Rational(1, k));
  }
  return f;
}

TruncSeries series_exp_partition_sum(const TruncSeries& s) {
  if (!s[0].is_zero())
    throw std::invalid_argument("series_exp: constant term must vanish");
  int n = s.order();
  // exp(sum_i s_i t^i) = sum_lambda (prod_i s_i^{lambda_i}) t^{||lambda||} / lambda!
  TruncSeries f(n);
  f.at(0) = MultiPoly(1);
  for (int k = 1; k <= n; ++k) {
    MultiPoly acc;
    for (auto& lam : enumerate_partitions(k)) {
      MultiPoly prod(Rational(1));
      for (std::uint32_t i = 1; i <= lam.max_part(); ++i)
        if (lam.multiplicity(i) > 0) prod *= s[i].pow(lam.multiplicity(i));
      acc += prod.scaled(Rational(1) / lam.factorial());
    }
    f.at(k) = acc;
  }
  return f;
}

TruncSeries series_log(const TruncSeries& s) {
  if (!(s[0] == MultiPoly(1)))
    throw std::invalid_argument("series_log: constant term must be 1");
  int n = s.order();
  // g' = s'/s   =>   g_k = s_k - (1/k) sum_{j=1..k-1} j g_j s_{k-j}
  TruncSeries g(n);
  for (int k = 1; k <= n; ++k) {
    MultiPoly acc;
    for (int j = 1; j < k; ++j) acc += g[j].scaled(Rational(j)) * s[k - j];
    g.at(k) = s[k] - acc.scaled(Rational(1, k));
  }
  return g;
}

TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
  if (!inner[0].is_zero())
    throw std::invalid_argument("compose: inner constant term must vanish");
  int n = std::min(outer.order(), inner.order());
  TruncSeries r = TruncSeries::constant(n, outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    r = r * inner.truncated(n);
    r.at(0) += outer[k];
  }
  return r;
}

TruncSeries reversion(const TruncSeries& s) {
  if (!s[0].is_zero())
    throw std::invalid_argument("reversion: constant term must vanish");
  if (!s[1].is_rational() || s[1].is_zero())
    throw std::invalid_argument("reversion: linear coefficient must be an invertible rational");
  int n = s.order();
  if (n < 1) throw std::invalid_argument("reversion: order must be >= 1");
  Rational inv1 = Rational(1) / s[1].as_rational();
  // Newton iteration r <- r - (s(r) - t)/s'(r), doubling the valid order
  TruncSeries r(n);
  r.at(1) = MultiPoly(inv1);
  int valid = 1;
  TruncSeries sp = derivative(s);
  while (valid < n) {
    valid = std::min(2 * valid + 1, n);
    TruncSeries rr = r.truncated(valid);
    TruncSeries num = compose(s.truncated(valid), rr) - TruncSeries::t(valid);
    TruncSeries den = compose(sp.truncated(valid), rr);
    TruncSeries delta = num / den;
    rr = rr - delta;
    r = rr.truncated(n);
  }
  return r;
}

}  // namespace rwgraph
