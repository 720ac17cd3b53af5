#ifndef RWGRAPH_BETA_HPP
#define RWGRAPH_BETA_HPP

#include <vector>

#include "rwgraph/chern.hpp"
#include "rwgraph/polywheel.hpp"

namespace rwgraph {

// Hilb^n has half-dimension n; K_n has half-dimension n-1.
struct ManifoldSpec {
  Series series = Series::hilb;
  unsigned n = 0;
};

struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// beta and the affine data of one connected polywheel <<w~_{2 lambda}>>:
// beta_hilb is the value on Hilb^k, beta_kummer on K_{k+1}, k = ||lambda||,
// and beta_hilb = a k + c, beta_kummer = a (k+1).
struct BetaRecord {
  Partition lambda;
  Rational beta_hilb;
  Rational beta_kummer;
  Rational a;
  Rational c;
};

// beta of the closed polywheel <w~_{2 lambda}> on the 2k-dimensional
// instance, k = ||lambda||: the hilb value is s_{2 lambda}[Hilb^k X], the
// kummer value is s_{2 lambda}[K_{k+1} A]/(k+1).
Rational beta_closed_base(const Partition& lambda, Series series, const ChernTable& table);

// Ascending recursion over k = 1..max_degree: the closed top value comes
// from the table, every lower-degree connected factor is replaced by its
// already-established affine value.
std::vector<BetaRecord> compute_beta_table(unsigned max_degree, const ChernTable& table);

const BetaRecord& find_record(const std::vector<BetaRecord>& records, const Partition& lambda);

// Evaluates a polywheel expression: K[lambda] |-> a n + c on Hilb^n
// (requires n >= ||lambda||) or a n on K_n (requires n > ||lambda||);
// C symbols are expanded into K's first; products multiply, sums add.
Rational beta_eval(const PWPolynomial& expr, const ManifoldSpec& m,
                   const std::vector<BetaRecord>& records);

// The Rozansky-Witten invariant b_gamma for a homogeneous degree-2k
// expression: beta/(n-k)! on Hilb^n, beta*n/(n-1-k)! on K_n.
Rational rw_invariant_b(const PWPolynomial& expr, const ManifoldSpec& m,
                        const std::vector<BetaRecord>& records);

}  // namespace rwgraph

#endif
