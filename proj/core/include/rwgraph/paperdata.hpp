#ifndef RWGRAPH_PAPERDATA_HPP
#define RWGRAPH_PAPERDATA_HPP

#include <string>
#include <vector>

#include "rwgraph/beta.hpp"

namespace rwgraph {

// The published reference values, embedded verbatim so the engine's output
// can be diffed against them. Three cells/lines of the publication are known
// to disagree with the engine (and with the publication's own other tables);
// the diff flags them rather than patching either side.

// the twelve Chern numbers s_{2 lambda}[Hilb^k X] and s_{2 lambda}[K_{k+1}A]
ChernTable published_chern_table();

struct PublishedBetaRow {
  Partition lambda;
  Rational beta_kummer;
  Rational beta_hilb;
  Rational a;
  Rational c;
};
// the final table for k <= 3 as printed (including a = 12 in the first row)
std::vector<PublishedBetaRow> published_beta_table();

struct PublishedExpansion {
  Partition lambda;
  PWPolynomial rhs;
};
// the eleven expansions of <<w~_{2 lambda}>> in closed polywheels, k <= 4,
// as printed (including the degree-8 "+12<w~2>^2" term)
std::vector<PublishedExpansion> published_expansions_closed();
// the six mixed-form expansions used by the recursion, k <= 3, as printed
// (including "<w~4>" where <w~2^2> is meant)
std::vector<PublishedExpansion> published_expansions_mixed();

struct PaperDiff {
  std::vector<std::string> lines;      // one line per compared item
  std::vector<std::string> flagged;    // the mismatching items only
};

// Recomputes everything from the given Chern table and diffs against the
// published values.
PaperDiff diff_against_paper(const ChernTable& table);

}  // namespace rwgraph

#endif
