#ifndef RWGRAPH_CANONICAL_HPP
#define RWGRAPH_CANONICAL_HPP

#include <string>
#include <vector>

#include "rwgraph/diagram.hpp"

namespace rwgraph {

// One connected component in canonical form.
struct DiagComponent {
  std::string key;
  FlagGraph rep;  // the component alone, vertex-oriented exactly as key encodes
  int tri = 0;
  int legs = 0;

  friend bool operator<(const DiagComponent& a, const DiagComponent& b) {
    return a.key < b.key;
  }
};

// AS-canonical form of a diagram: components sorted by key. The empty
// diagram has no components and key "1".
struct CanonicalDiagram {
  std::vector<DiagComponent> comps;
  std::string key = "1";
  int tri = 0;
  int legs = 0;

  int component_count() const { return static_cast<int>(comps.size()); }
  // components concatenated in comps order into one FlagGraph; legs are
  // numbered component by component
  FlagGraph assembled() const;
  static CanonicalDiagram from_components(std::vector<DiagComponent> comps);
};

struct CanonResult {
  bool zero = false;  // some self-isomorphism carries sign -1
  int sign = 1;       // input = sign * (canonical class) when !zero
  CanonicalDiagram diagram;
};

// Canonical key minimal over all rooted traversals (all labelings reachable
// by breadth-first discovery x per-vertex rotation/reversal choices); the
// sign is the product of AS signs of the chosen linear triples against the
// stored cyclic orders.
CanonResult canonicalize(const FlagGraph& g);

}  // namespace rwgraph

#endif
