#ifndef RWGRAPH_DIAGRAM_HPP
#define RWGRAPH_DIAGRAM_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rwgraph {

// Compact flag-level representation of a vertex-oriented unitrivalent
// multigraph. Trivalent vertex v owns flags 3v, 3v+1, 3v+2, listed in the
// vertex's cyclic order; univalent vertex (leg) u owns the single flag
// 3*nT + u. partner is a fixed-point-free involution pairing flags into
// edges; loops and parallel edges are permitted.
struct FlagGraph {
  int nT = 0;
  int nU = 0;
  std::vector<int> partner;

  int flags() const { return 3 * nT + nU; }
  int leg_flag(int u) const { return 3 * nT + u; }
  bool is_leg_flag(int f) const { return f >= 3 * nT; }
  // trivalent vertices are 0..nT-1, legs are nT..nT+nU-1
  int vertex_of(int f) const { return f < 3 * nT ? f / 3 : nT + (f - 3 * nT); }

  void validate() const;  // checks the involution
};

// hard cap on canonicalization size; large enough for w8 (16 vertices)
inline constexpr int kMaxDiagramVertices = 20;

// User-facing sketch with named vertices and flags, as read from diagram
// files:
//   V <id> T <f1> <f2> <f3>
//   V <id> U <f1>
//   E <fa> <fb>
// '#' starts a comment. Every flag token must appear in exactly one V line
// and exactly one E line.
struct DiagramSketch {
  struct TriVertex {
    std::string id;
    std::array<std::string, 3> flags;  // cyclic order
  };
  struct UniVertex {
    std::string id;
    std::string flag;
  };
  std::vector<TriVertex> trivalent;
  std::vector<UniVertex> univalent;
  std::vector<std::pair<std::string, std::string>> edges;
};

DiagramSketch parse_diagram(std::istream& in);
DiagramSketch parse_diagram_file(const std::string& path);

struct CompiledSketch {
  FlagGraph graph;
  std::map<std::string, int> leg_index;  // univalent vertex id -> leg index
};

// Validates and compacts a sketch; malformed input (dangling flag, reused
// flag, duplicate id) throws with the offending token named.
CompiledSketch compile(const DiagramSketch& sketch);

// The 2k-wheel (or any n-wheel, odd ones canonicalize to zero): n trivalent
// vertices on a rim, one leg at each; cyclic order (spoke, next, prev).
FlagGraph wheel(int n);
// Two legs joined by an edge.
FlagGraph ell();
// The theta graph, drawn with counter-clockwise vertex orientations.
FlagGraph theta();
// Disjoint union.
FlagGraph disjoint_union(const FlagGraph& a, const FlagGraph& b);

}  // namespace rwgraph

#endif
