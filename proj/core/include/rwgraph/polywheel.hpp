#ifndef RWGRAPH_POLYWHEEL_HPP
#define RWGRAPH_POLYWHEEL_HPP

#include <functional>
#include <map>
#include <string>

#include "rwgraph/graphvector.hpp"
#include "rwgraph/partition.hpp"

namespace rwgraph {

// Symbol of the polywheel algebra: C[lambda] is the closed polywheel
// <w~_{2 lambda}>, K[lambda] the connected polywheel <<w~_{2 lambda}>>.
// Both are homogeneous of degree 2||lambda||.
struct PWSymbol {
  enum Kind : int { Closed = 0, Connected = 1 };
  Kind kind = Closed;
  Partition lambda;

  friend bool operator<(const PWSymbol& a, const PWSymbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.lambda < b.lambda;
  }
  friend bool operator==(const PWSymbol& a, const PWSymbol& b) {
    return a.kind == b.kind && a.lambda == b.lambda;
  }
  std::string str() const;  // "c[4,2]" / "k[2,2]"
};

using PWMonomial = std::map<PWSymbol, unsigned>;

// Polynomial in C[.] and K[.] symbols over the rationals.
class PWPolynomial {
 public:
  PWPolynomial() = default;
  PWPolynomial(const Rational& r);
  static PWPolynomial symbol(const PWSymbol& s);
  static PWPolynomial closed(const Partition& lambda) { return symbol({PWSymbol::Closed, lambda}); }
  static PWPolynomial connected(const Partition& lambda) {
    return symbol({PWSymbol::Connected, lambda});
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<PWMonomial, Rational>& terms() const { return terms_; }

  PWPolynomial operator-() const;
  PWPolynomial& operator+=(const PWPolynomial& o);
  PWPolynomial& operator-=(const PWPolynomial& o);
  friend PWPolynomial operator+(PWPolynomial a, const PWPolynomial& b) { return a += b; }
  friend PWPolynomial operator-(PWPolynomial a, const PWPolynomial& b) { return a -= b; }
  friend PWPolynomial operator*(const PWPolynomial& a, const PWPolynomial& b);
  PWPolynomial scaled(const Rational& r) const;
  PWPolynomial pow(unsigned e) const;
  friend bool operator==(const PWPolynomial& a, const PWPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PWPolynomial& a, const PWPolynomial& b) { return !(a == b); }

  // replaces every symbol the map covers by its expansion, recursively on
  // the result monomials (the map values must not reuse replaced symbols)
  PWPolynomial substituted(const std::function<const PWPolynomial*(const PWSymbol&)>& fn) const;

  Rational evaluate(const std::function<Rational(const PWSymbol&)>& fn) const;
  GraphVector evaluate_graphs(const std::function<GraphVector(const PWSymbol&)>& fn) const;

  // 2 * sum of symbol weights, uniform across terms; throws for
  // inhomogeneous polynomials (rational terms count as degree 0)
  unsigned homogeneous_degree() const;

  std::string str() const;
  void add(const PWMonomial& m, const Rational& c);

 private:
  std::map<PWMonomial, Rational> terms_;
};

// C[lambda] as a polynomial in K symbols: the sum over set partitions of the
// labeled wheel factors (moments from cumulants).
PWPolynomial moment_expand(const Partition& lambda);
// K[lambda] as a polynomial in C symbols (cumulants from moments).
PWPolynomial connected_to_closed(const Partition& lambda);
// K[lambda] = C[lambda] - (products of lower-degree K symbols): the form the
// beta recursion consumes.
PWPolynomial connected_mixed_form(const Partition& lambda);

// Diagram-level bridge, with the w~ = -w sign applied per wheel factor.
GraphVector wheel_product_vector(const Partition& lambda);     // prod w_{2i}^{lam_i}, unsigned
GraphVector closed_polywheel_vector(const Partition& lambda);  // <w~_{2 lambda}>
GraphVector connected_polywheel_vector(const Partition& lambda);

struct CrossValidateReport {
  bool ok = false;
  std::string detail;
};

// Checks connected_to_closed(lambda) against the diagram engine: every
// C[mu] is replaced by its brute-force closure and the result must equal the
// engine's connected closure of w~_{2 lambda}. Errors when 2||lambda||
// exceeds the bound.
CrossValidateReport cross_validate(const Partition& lambda, int max_trivalent);

// Parses the CLI polywheel grammar: c[4,2], k[2,2], rational scalars and
// + - * ^ with parentheses.
PWPolynomial parse_pw_expression(const std::string& text);

}  // namespace rwgraph

#endif
