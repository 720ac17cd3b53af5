#include "rwgraph/beta.hpp"

#include <algorithm>

namespace rwgraph {

Rational beta_closed_base(const Partition& lambda, Series series, const ChernTable& table) {
  unsigned k = static_cast<unsigned>(lambda.weight());
  Rational s = table.get(series, k, lambda);
  if (series == Series::hilb) return s;
  //   int_{K_{k+1}} exp(sigma + bar sigma) = (k+1)/k!  against the 1/k!
  //   normalisation of the beta definition
  return s / Rational(static_cast<long>(k) + 1);
}

std::vector<BetaRecord> compute_beta_table(unsigned max_degree, const ChernTable& table) {
  std::vector<BetaRecord> records;
  for (unsigned k = 1; k <= max_degree; ++k) {
    for (const Partition& lambda : enumerate_partitions(k)) {
      PWPolynomial mixed = connected_mixed_form(lambda);
      // mixed = C[lambda] - products of strictly lower-degree K's
      auto eval_at = [&](Series series, unsigned n) {
        return mixed.evaluate([&](const PWSymbol& s) -> Rational {
          if (s.kind == PWSymbol::Closed) {
            if (!(s.lambda == lambda))
              throw std::logic_error("mixed form has an unexpected closed symbol");
            return beta_closed_base(lambda, series, table);
          }
          const BetaRecord& rec = find_record(records, s.lambda);
          if (series == Series::hilb) return rec.a * Rational(n) + rec.c;
          return rec.a * Rational(n);
        });
      };
      BetaRecord rec;
      rec.lambda = lambda;
      rec.beta_hilb = eval_at(Series::hilb, k);
      rec.beta_kummer = eval_at(Series::kummer, k + 1);
      rec.a = rec.beta_kummer / Rational(static_cast<long>(k) + 1);
      rec.c = rec.beta_hilb - Rational(static_cast<long>(k)) * rec.a;
      // re-assert the affine shape
      if (rec.beta_hilb != rec.a * Rational(static_cast<long>(k)) + rec.c ||
          rec.beta_kummer != rec.a * Rational(static_cast<long>(k) + 1))
        throw std::logic_error("beta record consistency violated for " + lambda.str());
      records.push_back(std::move(rec));
    }
  }
  return records;
}

const BetaRecord& find_record(const std::vector<BetaRecord>& records, const Partition& lambda) {
  for (auto& r : records)
    if (r.lambda == lambda) return r;
  throw MissingChernEntry("no beta record for partition " + lambda.str());
}

namespace {

// K symbols only; validates the linearity range per factor
Rational eval_connected(const PWPolynomial& expr, const ManifoldSpec& m,
                        const std::vector<BetaRecord>& records) {
  return expr.evaluate([&](const PWSymbol& s) -> Rational {
    if (s.kind != PWSymbol::Connected)
      throw std::logic_error("eval_connected: closed symbol left behind");
    unsigned k = static_cast<unsigned>(s.lambda.weight());
    const BetaRecord& rec = find_record(records, s.lambda);
    if (m.series == Series::hilb) {
      if (m.n < k)
        throw RangeError("beta of k[" + s.lambda.str() + "] on hilb needs n >= " +
                         std::to_string(k) + ", got n = " + std::to_string(m.n));
      return rec.a * Rational(m.n) + rec.c;
    }
    if (m.n <= k)
      throw RangeError("beta of k[" + s.lambda.str() + "] on kummer needs n > " +
                       std::to_string(k) + ", got n = " + std::to_string(m.n));
    return rec.a * Rational(m.n);
  });
}

}  // namespace

Rational beta_eval(const PWPolynomial& expr, const ManifoldSpec& m,
                   const std::vector<BetaRecord>& records) {
  // expand closed symbols into connected ones first
  std::map<Partition, PWPolynomial> cache;
  PWPolynomial connected = expr.substituted([&](const PWSymbol& s) -> const PWPolynomial* {
    if (s.kind != PWSymbol::Closed) return nullptr;
    auto it = cache.find(s.lambda);
    if (it == cache.end()) it = cache.emplace(s.lambda, moment_expand(s.lambda)).first;
    return &it->second;
  });
  return eval_connected(connected, m, records);
}

Rational rw_invariant_b(const PWPolynomial& expr, const ManifoldSpec& m,
                        const std::vector<BetaRecord>& records) {
  unsigned deg = expr.homogeneous_degree();
  unsigned k = deg / 2;
  Rational beta = beta_eval(expr, m, records);
  if (m.series == Series::hilb) {
    if (m.n < k)
      throw RangeError("b on hilb needs n >= " + std::to_string(k) + ", got n = " +
                       std::to_string(m.n));
    return beta / Rational::factorial(m.n - k);
  }
  if (m.n < k + 1)
    throw RangeError("b on kummer needs n > " + std::to_string(k) + ", got n = " +
                     std::to_string(m.n));
  return beta * Rational(m.n) / Rational::factorial(m.n - 1 - k);
}

}  // namespace rwgraph
