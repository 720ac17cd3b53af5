#include "rwgraph/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rwgraph {

FlagGraph CanonicalDiagram::assembled() const {
  FlagGraph g;
  for (auto& c : comps) {
    g.nT += c.rep.nT;
    g.nU += c.rep.nU;
  }
  g.partner.assign(g.flags(), -1);
  int toff = 0, uoff = 0;
  for (auto& c : comps) {
    auto remap = [&](int f) {
      return c.rep.is_leg_flag(f) ? 3 * g.nT + uoff + (f - 3 * c.rep.nT) : 3 * toff + f;
    };
    for (int f = 0; f < c.rep.flags(); ++f) g.partner[remap(f)] = remap(c.rep.partner[f]);
    toff += c.rep.nT;
    uoff += c.rep.nU;
  }
  return g;
}

CanonicalDiagram CanonicalDiagram::from_components(std::vector<DiagComponent> comps) {
  std::sort(comps.begin(), comps.end());
  CanonicalDiagram d;
  d.comps = std::move(comps);
  d.tri = 0;
  d.legs = 0;
  std::string key;
  for (std::size_t i = 0; i < d.comps.size(); ++i) {
    d.tri += d.comps[i].tri;
    d.legs += d.comps[i].legs;
    if (i) key += ";";
    key += d.comps[i].key;
  }
  d.key = d.comps.empty() ? "1" : key;
  return d;
}

namespace {

// state of one rooted traversal of a connected component
struct Traversal {
  std::vector<int> code;
  int sign = 1;
  // reconstruction data
  std::vector<int> vorder;                    // vertices in label order
  std::vector<std::vector<int>> chosen;       // per label, flags in chosen order
};

// cyclic successor within the trivalent vertex owning f
inline int nxt(int f) { return (f / 3) * 3 + (f % 3 + 1) % 3; }

// Runs one traversal from root flag; bits supplies the orientation branch for
// trivalent vertices in discovery order. Vertices of the component are
// exactly those reachable from the root.
Traversal traverse(const FlagGraph& g, int root, unsigned bits) {
  Traversal t;
  int n = g.nT + g.nU;
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> chosen_by_vertex(n);
  int bit_pos = 0;

  auto discover = [&](int entering_flag) {
    int v = g.vertex_of(entering_flag);
    label[v] = static_cast<int>(t.vorder.size());
    t.vorder.push_back(v);
    if (v < g.nT) {
      bool reversed = (bits >> bit_pos++) & 1u;
      int f = entering_flag;
      if (!reversed) {
        chosen_by_vertex[v] = {f, nxt(f), nxt(nxt(f))};
      } else {
        chosen_by_vertex[v] = {f, nxt(nxt(f)), nxt(f)};
        t.sign = -t.sign;
      }
    } else {
      chosen_by_vertex[v] = {entering_flag};
    }
  };

  discover(root);
  for (std::size_t qi = 0; qi < t.vorder.size(); ++qi) {
    int v = t.vorder[qi];
    for (int f : chosen_by_vertex[v]) {
      int p = g.partner[f];
      if (label[g.vertex_of(p)] == -1) discover(p);
    }
  }

  // emit code over vertices in label order
  for (int v : t.vorder) {
    t.code.push_back(v < g.nT ? 0 : 1);
    for (int f : chosen_by_vertex[v]) {
      int p = g.partner[f];
      int w = g.vertex_of(p);
      auto& cw = chosen_by_vertex[w];
      int slot = static_cast<int>(std::find(cw.begin(), cw.end(), p) - cw.begin());
      t.code.push_back(label[w]);
      t.code.push_back(slot);
    }
    t.chosen.push_back(chosen_by_vertex[v]);
  }
  return t;
}

std::string render_component_key(const std::vector<int>& code) {
  std::string out;
  std::size_t i = 0;
  while (i < code.size()) {
    bool tri = code[i++] == 0;
    out += tri ? 'T' : 'U';
    out += '(';
    int slots = tri ? 3 : 1;
    for (int s = 0; s < slots; ++s) {
      if (s) out += ',';
      out += std::to_string(code[i]) + "." + std::to_string(code[i + 1]);
      i += 2;
    }
    out += ')';
  }
  return out;
}

struct CompCanonResult {
  bool zero = false;
  int sign = 1;
  DiagComponent comp;
};

CompCanonResult canonicalize_component(const FlagGraph& g, const std::vector<int>& comp_vertices) {
  if (static_cast<int>(comp_vertices.size()) > kMaxDiagramVertices)
    throw std::runtime_error("canonicalize: component exceeds the vertex cap of " +
                             std::to_string(kMaxDiagramVertices));
  int tcount = 0;
  std::vector<int> comp_flags;
  for (int v : comp_vertices) {
    if (v < g.nT) {
      ++tcount;
      comp_flags.insert(comp_flags.end(), {3 * v, 3 * v + 1, 3 * v + 2});
    } else {
      comp_flags.push_back(g.leg_flag(v - g.nT));
    }
  }

  bool have_best = false;
  Traversal best;
  bool both_signs = false;
  for (int root : comp_flags) {
    for (unsigned bits = 0; bits < (1u << tcount); ++bits) {
      Traversal t = traverse(g, root, bits);
      if (!have_best || t.code < best.code) {
        best = t;
        have_best = true;
        both_signs = false;
      } else if (t.code == best.code && t.sign != best.sign) {
        both_signs = true;
      }
    }
  }

  CompCanonResult res;
  if (both_signs) {
    res.zero = true;
    return res;
  }
  res.sign = best.sign;

  // rebuild the canonical representative from the winning traversal
  DiagComponent& comp = res.comp;
  int nlab = static_cast<int>(best.vorder.size());
  std::vector<int> tri_index(nlab, -1), leg_index(nlab, -1);
  int nt = 0, nu = 0;
  for (int i = 0; i < nlab; ++i) {
    if (best.vorder[i] < g.nT) tri_index[i] = nt++;
    else leg_index[i] = nu++;
  }
  comp.tri = nt;
  comp.legs = nu;
  comp.rep.nT = nt;
  comp.rep.nU = nu;
  comp.rep.partner.assign(comp.rep.flags(), -1);
  // original flag -> rep flag
  std::map<int, int> to_rep;
  for (int i = 0; i < nlab; ++i) {
    for (std::size_t s = 0; s < best.chosen[i].size(); ++s) {
      int rf = tri_index[i] >= 0 ? 3 * tri_index[i] + static_cast<int>(s)
                                 : comp.rep.leg_flag(leg_index[i]);
      to_rep[best.chosen[i][s]] = rf;
    }
  }
  for (auto& [of, rf] : to_rep) comp.rep.partner[rf] = to_rep.at(g.partner[of]);
  comp.key = render_component_key(best.code);
  return res;
}

}  // namespace

CanonResult canonicalize(const FlagGraph& g) {
  g.validate();
  int n = g.nT + g.nU;
  // connected components over vertices
  std::vector<int> comp_id(n, -1);
  std::vector<std::vector<int>> comps;
  for (int v0 = 0; v0 < n; ++v0) {
    if (comp_id[v0] != -1) continue;
    std::vector<int> stack{v0}, members;
    comp_id[v0] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      std::vector<int> vflags;
      if (v < g.nT) vflags = {3 * v, 3 * v + 1, 3 * v + 2};
      else vflags = {g.leg_flag(v - g.nT)};
      for (int f : vflags) {
        int w = g.vertex_of(g.partner[f]);
        if (comp_id[w] == -1) {
          comp_id[w] = comp_id[v0];
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::move(members));
  }

  CanonResult res;
  std::vector<DiagComponent> parts;
  for (auto& members : comps) {
    CompCanonResult cc = canonicalize_component(g, members);
    if (cc.zero) {
      res.zero = true;
      return res;
    }
    res.sign *= cc.sign;
    parts.push_back(std::move(cc.comp));
  }
  res.diagram = CanonicalDiagram::from_components(std::move(parts));
  return res;
}

}  // namespace rwgraph
