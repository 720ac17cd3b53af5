#include "rwgraph/diagram.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rwgraph {

void FlagGraph::validate() const {
  if (static_cast<int>(partner.size()) != flags())
    throw std::invalid_argument("FlagGraph: partner table has wrong size");
  for (int f = 0; f < flags(); ++f) {
    int p = partner[f];
    if (p < 0 || p >= flags() || p == f || partner[p] != f)
      throw std::invalid_argument("FlagGraph: partner table is not an involution");
  }
}

DiagramSketch parse_diagram(std::istream& in) {
  DiagramSketch sk;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("diagram line " + std::to_string(lineno) + ": " + msg);
    };
    if (head == "V") {
      std::string id, type;
      if (!(ss >> id >> type)) fail("expected 'V <id> <T|U> <flags...>'");
      if (type == "T") {
        DiagramSketch::TriVertex v;
        v.id = id;
        if (!(ss >> v.flags[0] >> v.flags[1] >> v.flags[2])) fail("trivalent vertex needs 3 flags");
        sk.trivalent.push_back(v);
      } else if (type == "U") {
        DiagramSketch::UniVertex v;
        v.id = id;
        if (!(ss >> v.flag)) fail("univalent vertex needs 1 flag");
        sk.univalent.push_back(v);
      } else {
        fail("vertex type must be T or U, got '" + type + "'");
      }
    } else if (head == "E") {
      std::string a, b;
      if (!(ss >> a >> b)) fail("expected 'E <fa> <fb>'");
      sk.edges.push_back({a, b});
    } else {
      fail("unknown directive '" + head + "'");
    }
    std::string extra;
    if (ss >> extra) fail("trailing token '" + extra + "'");
  }
  return sk;
}

DiagramSketch parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open diagram file " + path);
  return parse_diagram(in);
}

CompiledSketch compile(const DiagramSketch& sketch) {
  int nT = static_cast<int>(sketch.trivalent.size());
  int nU = static_cast<int>(sketch.univalent.size());
  if (nT + nU > kMaxDiagramVertices)
    throw std::runtime_error("diagram exceeds the vertex cap of " +
                             std::to_string(kMaxDiagramVertices));
  std::map<std::string, int> flag_slot;  // flag token -> flag index
  std::map<std::string, int> ids;
  auto claim_vertex = [&](const std::string& id) {
    if (!ids.emplace(id, 1).second)
      throw std::runtime_error("duplicate vertex id '" + id + "'");
  };
  auto claim_flag = [&](const std::string& tok, int idx) {
    if (!flag_slot.emplace(tok, idx).second)
      throw std::runtime_error("flag '" + tok + "' appears in more than one vertex");
  };
  for (int v = 0; v < nT; ++v) {
    claim_vertex(sketch.trivalent[v].id);
    for (int j = 0; j < 3; ++j) claim_flag(sketch.trivalent[v].flags[j], 3 * v + j);
  }
  CompiledSketch out;
  for (int u = 0; u < nU; ++u) {
    claim_vertex(sketch.univalent[u].id);
    claim_flag(sketch.univalent[u].flag, 3 * nT + u);
    out.leg_index[sketch.univalent[u].id] = u;
  }
  FlagGraph& g = out.graph;
  g.nT = nT;
  g.nU = nU;
  g.partner.assign(g.flags(), -1);
  for (auto& [a, b] : sketch.edges) {
    auto ia = flag_slot.find(a);
    auto ib = flag_slot.find(b);
    if (ia == flag_slot.end())
      throw std::runtime_error("edge uses unknown flag '" + a + "'");
    if (ib == flag_slot.end())
      throw std::runtime_error("edge uses unknown flag '" + b + "'");
    if (ia->second == ib->second)
      throw std::runtime_error("edge joins flag '" + a + "' to itself");
    if (g.partner[ia->second] != -1)
      throw std::runtime_error("flag '" + a + "' appears in more than one edge");
    if (g.partner[ib->second] != -1)
      throw std::runtime_error("flag '" + b + "' appears in more than one edge");
    g.partner[ia->second] = ib->second;
    g.partner[ib->second] = ia->second;
  }
  for (int f = 0; f < g.flags(); ++f) {
    if (g.partner[f] == -1) {
      for (auto& [tok, idx] : flag_slot)
        if (idx == f) throw std::runtime_error("flag '" + tok + "' appears in no edge");
    }
  }
  return out;
}

FlagGraph wheel(int n) {
  if (n < 1) throw std::invalid_argument("wheel: need at least one vertex");
  FlagGraph g;
  g.nT = n;
  g.nU = n;
  g.partner.assign(g.flags(), -1);
  for (int i = 0; i < n; ++i) {
    int spoke = 3 * i, next = 3 * i + 1, prev = 3 * i + 2;
    int leg = g.leg_flag(i);
    g.partner[spoke] = leg;
    g.partner[leg] = spoke;
    int prev_of_succ = 3 * ((i + 1) % n) + 2;
    g.partner[next] = prev_of_succ;
    g.partner[prev_of_succ] = next;
    (void)prev;
  }
  return g;
}

FlagGraph ell() {
  FlagGraph g;
  g.nU = 2;
  g.partner = {1, 0};
  return g;
}

FlagGraph theta() {
  FlagGraph g;
  g.nT = 2;
  g.partner.assign(6, -1);
  // v0 = (m1, t1, b1), v1 = (t2, m2, b2); arcs t1-t2, m1-m2, b1-b2
  auto link = [&](int a, int b) { g.partner[a] = b; g.partner[b] = a; };
  link(1, 3);
  link(0, 4);
  link(2, 5);
  return g;
}

FlagGraph disjoint_union(const FlagGraph& a, const FlagGraph& b) {
  FlagGraph g;
  g.nT = a.nT + b.nT;
  g.nU = a.nU + b.nU;
  g.partner.assign(g.flags(), -1);
  // a's trivalent flags keep their slots, b's shift by 3 a.nT; legs go after
  // all trivalent flags, a's first
  auto map_a = [&](int f) { return a.is_leg_flag(f) ? 3 * g.nT + (f - 3 * a.nT) : f; };
  auto map_b = [&](int f) {
    return b.is_leg_flag(f) ? 3 * g.nT + a.nU + (f - 3 * b.nT) : 3 * a.nT + f;
  };
  for (int f = 0; f < a.flags(); ++f) g.partner[map_a(f)] = map_a(a.partner[f]);
  for (int f = 0; f < b.flags(); ++f) g.partner[map_b(f)] = map_b(b.partner[f]);
  return g;
}

}  // namespace rwgraph
