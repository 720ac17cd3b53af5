#ifndef RWGRAPH_GRAPHVECTOR_HPP
#define RWGRAPH_GRAPHVECTOR_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rwgraph/canonical.hpp"
#include "rwgraph/multipoly.hpp"
#include "rwgraph/setpart.hpp"

namespace rwgraph {

// Finite linear combination of AS-canonical Jacobi diagrams with MultiPoly
// coefficients; powers of the circle generator O live in the coefficients,
// never as graph components.
class GraphVector {
 public:
  GraphVector() = default;

  static GraphVector zero() { return GraphVector(); }
  // the empty diagram with coefficient 1
  static GraphVector unit() { return single(CanonicalDiagram{}, MultiPoly(1)); }
  static GraphVector single(const CanonicalDiagram& d, MultiPoly coeff);
  // canonicalizes a raw graph; vanishing classes give the zero vector
  static GraphVector of(const FlagGraph& g, const MultiPoly& coeff = MultiPoly(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::string, std::pair<MultiPoly, CanonicalDiagram>>& terms() const {
    return terms_;
  }
  MultiPoly coefficient(const std::string& key) const;

  void add(const CanonicalDiagram& d, const MultiPoly& coeff);
  GraphVector& operator+=(const GraphVector& o);
  GraphVector& operator-=(const GraphVector& o);
  friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
  friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
  GraphVector operator-() const;
  GraphVector scaled(const MultiPoly& p) const;
  GraphVector scaled(const Rational& r) const;

  friend bool operator==(const GraphVector& a, const GraphVector& b);
  friend bool operator!=(const GraphVector& a, const GraphVector& b) { return !(a == b); }

  // sorted "coefficient  key" lines; "0" for the zero vector
  std::string str() const;

 private:
  std::map<std::string, std::pair<MultiPoly, CanonicalDiagram>> terms_;
};

// Disjoint-union product, bilinear; the empty diagram is the unit.
GraphVector product(const GraphVector& u, const GraphVector& v);
GraphVector power(const GraphVector& u, unsigned n);

// Glues two legs of a single diagram; gluing the
// two legs of an ell component multiplies by O.
GraphVector glue(const FlagGraph& g, int leg_u, int leg_v);
GraphVector glue(const CanonicalDiagram& d, int leg_u, int leg_v);
// Iterated gluing over disjoint leg pairs; order independent.
GraphVector quotient(const FlagGraph& g, const std::vector<std::pair<int, int>>& pairs);
GraphVector quotient(const CanonicalDiagram& d, const std::vector<std::pair<int, int>>& pairs);

// hat operator: sum over injections of the legs of gamma into the legs of
// each diagram of gamma_prime, glued pairwise.
GraphVector hat_apply(const GraphVector& gamma, const GraphVector& gamma_prime);
// <gamma, gamma'>: sum over bijections of the leg sets; zero when counts
// differ.
GraphVector pairing(const GraphVector& gamma, const GraphVector& gamma_prime);
// del = (1/2) ell-hat: sum over unordered leg pairs of the glued diagram.
GraphVector partial(const GraphVector& gamma);
// <gamma> = sum over pair partitions of all legs; odd leg counts vanish.
GraphVector closure(const GraphVector& gamma);
// keeps the terms whose diagram has exactly one connected component
GraphVector connected_part(const GraphVector& gamma);
GraphVector connected_closure(const GraphVector& gamma);
// H gamma = (O/2 + legs) gamma on each homogeneous term
GraphVector H_apply(const GraphVector& gamma);

// GraphVector forms of the generators
GraphVector ell_vector();       // the diagram ell
GraphVector ell_half_vector();  // ell/2

// exp(del) gamma: terminates because del strictly reduces leg counts
GraphVector exp_partial(const GraphVector& gamma);

// All canonical diagrams (coefficient 1 basis elements) with at most
// max_flags flags, deduplicated, vanishing classes omitted; deterministic
// order.
std::vector<CanonicalDiagram> enumerate_diagrams(int max_flags);

struct Sl2Report {
  bool ok = true;
  std::string detail;  // first violated commutator and diagram key
  int checked = 0;
};

// Verifies [ell/2, del] = -H, [H, ell/2] = 2 (ell/2), [H, del] = -2 del on
// every canonical diagram within the flag bound.
Sl2Report sl2_check(int max_flags);

}  // namespace rwgraph

#endif
