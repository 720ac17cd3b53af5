#ifndef RWGRAPH_SERIES_HPP
#define RWGRAPH_SERIES_HPP

#include <vector>

#include "rwgraph/multipoly.hpp"

namespace rwgraph {

// Power series in t truncated at a fixed order N: coefficients of t^0..t^N
// are stored, everything beyond is never read or written. Binary operations
// truncate at the minimum of the two orders.
class TruncSeries {
 public:
  explicit TruncSeries(int order) : coeffs_(order + 1) {}
  TruncSeries(int order, std::vector<MultiPoly> coeffs);

  static TruncSeries constant(int order, const MultiPoly& c);
  static TruncSeries t(int order);  // the series t

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const MultiPoly& operator[](int k) const { return coeffs_[k]; }
  MultiPoly& at(int k) { return coeffs_[k]; }
  bool is_zero() const;

  TruncSeries truncated(int order) const;  // restrict (or zero-extend) to order

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  // rhs must have an invertible (nonzero rational) constant term
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);
  TruncSeries operator-() const;
  TruncSeries scaled(const Rational& r) const;
  TruncSeries scaled(const MultiPoly& p) const;
  TruncSeries shifted_by_t() const;  // multiply by t, dropping the top coefficient

  std::string str() const;  // "c0 + c1*t + c2*t^2 + ..."

 private:
  std::vector<MultiPoly> coeffs_;
};

// Parses the CLI series literal "c0 + c1*t + c2*t^2 + ..." with rational
// p/q coefficients into a series of the given order; powers beyond the
// order are rejected.
TruncSeries parse_series(const std::string& text, int order);

// Equality of all coefficients up to an explicit comparison order (at most
// the minimum of the two stored orders).
bool equal_to_order(const TruncSeries& a, const TruncSeries& b, int order);

TruncSeries derivative(const TruncSeries& s);            // order N-1
TruncSeries series_exp(const TruncSeries& s);            // requires s[0] == 0
TruncSeries series_exp_partition_sum(const TruncSeries& s);  // same, via the partition formula
TruncSeries series_log(const TruncSeries& s);            // requires s[0] == 1
TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner);  // inner[0] == 0
// Compositional inverse: compose(s, reversion(s)) = t. Requires s[0] = 0 and
// s[1] a nonzero rational.
TruncSeries reversion(const TruncSeries& s);

}  // namespace rwgraph

#endif
