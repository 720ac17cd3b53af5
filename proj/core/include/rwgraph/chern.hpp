#ifndef RWGRAPH_CHERN_HPP
#define RWGRAPH_CHERN_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"

namespace rwgraph {

enum class Series { hilb, kummer };

std::string series_name(Series s);

struct ChernParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingChernEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ingested Chern numbers: the hilb entry at (k, lambda) is
// s_{2 lambda}[Hilb^k X] for X a K3 surface, the kummer entry is
// s_{2 lambda}[K_{k+1} A], a 2k-dimensional variety.
class ChernTable {
 public:
  void insert(Series s, unsigned k, const Partition& lambda, const Rational& value);
  bool has(Series s, unsigned k, const Partition& lambda) const;
  // throws MissingChernEntry naming (series, k, lambda)
  Rational get(Series s, unsigned k, const Partition& lambda) const;

 private:
  std::map<std::tuple<int, unsigned, Partition>, Rational> entries_;
};

// Text format, one record per line: series,k,partition,value with the
// partition in the plus-separated external encoding ("2+2"); '#' comments
// and blank lines are ignored. Throws ChernParseError with line numbers.
ChernTable load_chern_table(std::istream& in);
ChernTable load_chern_table_file(const std::string& path);

}  // namespace rwgraph

#endif
