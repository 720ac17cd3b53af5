#ifndef RWGRAPH_MULTIPOLY_HPP
#define RWGRAPH_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"

namespace rwgraph {

// A generator of the coefficient ring Q[a2, a4, ...][O][x, s1, s2, ...].
// The a-generators are indexed by their even integer (a2, a4, ...), O is the
// circle adjoined to graph homology, X is the Sheffer symbol, S(i) are free
// auxiliary symbols used in identities and tests.
struct Gen {
  enum Kind : std::uint8_t { AParam = 0, Circle = 1, X = 2, S = 3 };
  Kind kind = Circle;
  std::uint32_t index = 0;  // AParam: even >= 2; S: i >= 1; otherwise 0

  static Gen a(std::uint32_t even_index);
  static Gen circle() { return Gen{Circle, 0}; }
  static Gen x() { return Gen{X, 0}; }
  static Gen s(std::uint32_t i);

  friend bool operator==(const Gen& g, const Gen& h) {
    return g.kind == h.kind && g.index == h.index;
  }
  friend bool operator<(const Gen& g, const Gen& h) {
    if (g.kind != h.kind) return g.kind < h.kind;
    return g.index < h.index;
  }
  std::string str() const;
};

// Product of generator powers, kept sorted with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial unit() { return Monomial(); }
  static Monomial gen(Gen g, std::uint32_t e = 1);

  bool is_unit() const { return factors_.empty(); }
  std::uint64_t total_degree() const;
  std::uint32_t exponent_of(Gen g) const;
  const std::vector<std::pair<Gen, std::uint32_t>>& factors() const { return factors_; }
  bool contains_kind(Gen::Kind k) const;

  Monomial operator*(const Monomial& o) const;

  // graded order: total degree first, then lexicographic on (gen, exp) pairs
  friend bool operator<(const Monomial& m, const Monomial& n);
  friend bool operator==(const Monomial& m, const Monomial& n) {
    return m.factors_ == n.factors_;
  }

  std::string str() const;  // "a2^2*a4*O", "1" for the unit

 private:
  std::vector<std::pair<Gen, std::uint32_t>> factors_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& r);
  MultiPoly(long n) : MultiPoly(Rational(n)) {}
  static MultiPoly gen(Gen g, std::uint32_t e = 1);
  static MultiPoly a(std::uint32_t even_index) { return gen(Gen::a(even_index)); }
  static MultiPoly circle() { return gen(Gen::circle()); }
  static MultiPoly x() { return gen(Gen::x()); }
  static MultiPoly s(std::uint32_t i) { return gen(Gen::s(i)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // Throws unless the polynomial is constant.
  Rational as_rational() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  std::uint64_t total_degree() const;
  bool contains_kind(Gen::Kind k) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& r) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Applies prod_i d^{lambda_i}/d a_{2i}^{lambda_i} and then sets every
  // a-generator to zero; equivalently lambda! times the coefficient of
  // prod_i a_{2i}^{lambda_i}. Non-a generators pass through. A circle
  // anywhere in the input is an error.
  MultiPoly extract_partial(const Partition& lambda) const;

  // Exact substitution; every generator occurring in the polynomial must be
  // covered by the assignment.
  Rational evaluate(const std::map<Gen, Rational>& assignment) const;

  // Substitutes x -> x - shift for the Sheffer symbol.
  MultiPoly substitute_x_shifted(long shift) const;

  // Treats the polynomial as univariate in x and divides exactly by
  // (x - root); throws if a remainder is left.
  MultiPoly divide_by_x_minus(const Rational& root) const;

  // the terms carrying exactly g^e, with that power divided out
  MultiPoly coefficient_of(Gen g, std::uint32_t e) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace rwgraph

#endif
