#include "sgc/graph.hpp"

#include <algorithm>
#include <set>

namespace sgc {

bool is_valid_circuit(const SignedMultigraph& g, const Circuit& c,
                      std::string* why) {
  auto fail = [&](const std::string& r) {
    if (why) *why = r;
    return false;
  };
  const int k = c.length();
  if (k == 0) return fail("empty circuit");
  if (static_cast<int>(c.verts.size()) != k)
    return fail("vertex sequence length mismatch");
  std::set<int> seen_edges;
  std::set<int> seen_verts;
  for (int i = 0; i < k; ++i) {
    int e = c.edges[i];
    if (e < 0 || e >= g.edge_count()) return fail("unknown edge id");
    if (!seen_edges.insert(e).second) return fail("repeated edge");
    int a = c.verts[i];
    int b = c.verts[(i + 1) % k];
    const auto& ed = g.edges[e];
    bool matches = (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
    if (!matches) return fail("edge does not join consecutive vertices");
    if (!seen_verts.insert(a).second) return fail("repeated vertex");
  }
  // Loops: a loop edge requires verts[i] == verts[i+1], which for k > 1 would
  // repeat a vertex; so loops only appear as the whole circuit (k == 1).
  return true;
}

Circuit make_circuit_from_edges(const SignedMultigraph& g,
                                const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) throw input_error("empty edge set is not a circuit");
  std::set<int> ids(edge_ids.begin(), edge_ids.end());
  if (ids.size() != edge_ids.size())
    throw input_error("duplicate edge in circuit edge set");

  if (ids.size() == 1) {
    int e = *ids.begin();
    if (!g.is_loop(e)) throw input_error("single non-loop edge is not a circuit");
    Circuit c;
    c.verts = {g.edge(e).u};
    c.edges = {e};
    return c;
  }

  // degree check and incidence map
  std::map<int, std::vector<int>> inc;
  for (int e : ids) {
    const auto& ed = g.edge(e);
    if (ed.u == ed.v) throw input_error("loop inside multi-edge circuit");
    inc[ed.u].push_back(e);
    inc[ed.v].push_back(e);
  }
  for (auto& [v, es] : inc)
    if (es.size() != 2) throw input_error("vertex degree != 2 in circuit");

  Circuit c;
  int start = inc.begin()->first;
  int cur = start;
  int prev_edge = -1;
  do {
    c.verts.push_back(cur);
    auto& es = inc[cur];
    int e = (es[0] != prev_edge) ? es[0] : es[1];
    c.edges.push_back(e);
    cur = g.other_end(e, cur);
    prev_edge = e;
  } while (cur != start);
  if (c.edges.size() != ids.size())
    throw input_error("edge set is not a single circuit");
  return c;
}

std::vector<int> SignedCircuit::edge_set() const {
  std::vector<int> out = c1.edges;
  if (kind != Kind::Balanced) {
    out.insert(out.end(), c2.edges.begin(), c2.edges.end());
    out.insert(out.end(), path_edges.begin(), path_edges.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignedCircuit balanced_circuit(Circuit c) {
  SignedCircuit sc;
  sc.kind = SignedCircuit::Kind::Balanced;
  sc.c1 = std::move(c);
  return sc;
}

SignedCircuit short_barbell(Circuit c1, Circuit c2, int joint) {
  SignedCircuit sc;
  sc.kind = SignedCircuit::Kind::ShortBarbell;
  sc.c1 = std::move(c1);
  sc.c2 = std::move(c2);
  sc.joint = joint;
  return sc;
}

SignedCircuit long_barbell(Circuit c1, Circuit c2, std::vector<int> path_edges,
                           std::vector<int> path_verts) {
  SignedCircuit sc;
  sc.kind = SignedCircuit::Kind::LongBarbell;
  sc.c1 = std::move(c1);
  sc.c2 = std::move(c2);
  sc.path_edges = std::move(path_edges);
  sc.path_verts = std::move(path_verts);
  return sc;
}

int negative_count(const SignedMultigraph& g,
                   const std::vector<int>& edge_ids) {
  int cnt = 0;
  for (int e : edge_ids)
    if (g.edge(e).sign == -1) ++cnt;
  return cnt;
}

bool is_balanced(const SignedMultigraph& g, const Circuit& c) {
  std::string why;
  if (!is_valid_circuit(g, c, &why))
    throw input_error("invalid circuit witness: " + why);
  return negative_count(g, c.edges) % 2 == 0;
}

namespace {

bool is_unbalanced_circuit(const SignedMultigraph& g, const Circuit& c,
                           std::string* why) {
  if (!is_valid_circuit(g, c, why)) return false;
  if (negative_count(g, c.edges) % 2 == 0) {
    if (why) *why = "even negative count";
    return false;
  }
  return true;
}

std::set<int> vertex_set(const Circuit& c) {
  return std::set<int>(c.verts.begin(), c.verts.end());
}

bool edge_sets_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> sa(a.begin(), a.end());
  for (int e : b)
    if (sa.count(e)) return false;
  return true;
}

}  // namespace

Diagnosis validate_signed_circuit(const SignedMultigraph& g,
                                  const SignedCircuit& sc) {
  Diagnosis d;
  std::string why;
  auto fail = [&](const std::string& r) {
    d.ok = false;
    d.reason = r;
    return d;
  };

  switch (sc.kind) {
    case SignedCircuit::Kind::Balanced: {
      if (!is_valid_circuit(g, sc.c1, &why)) return fail(why);
      if (negative_count(g, sc.c1.edges) % 2 != 0)
        return fail("odd negative count");
      return d;
    }
    case SignedCircuit::Kind::ShortBarbell: {
      if (!is_unbalanced_circuit(g, sc.c1, &why)) return fail("c1: " + why);
      if (!is_unbalanced_circuit(g, sc.c2, &why)) return fail("c2: " + why);
      auto v1 = vertex_set(sc.c1);
      auto v2 = vertex_set(sc.c2);
      std::vector<int> common;
      std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                            std::back_inserter(common));
      if (common.size() != 1 || common[0] != sc.joint)
        return fail("joint not unique");
      if (!edge_sets_disjoint(sc.c1.edges, sc.c2.edges))
        return fail("circuit edge sets overlap");
      return d;
    }
    case SignedCircuit::Kind::LongBarbell: {
      if (!is_unbalanced_circuit(g, sc.c1, &why)) return fail("c1: " + why);
      if (!is_unbalanced_circuit(g, sc.c2, &why)) return fail("c2: " + why);
      auto v1 = vertex_set(sc.c1);
      auto v2 = vertex_set(sc.c2);
      for (int v : v2)
        if (v1.count(v)) return fail("circuits not vertex-disjoint");
      if (sc.path_edges.empty()) return fail("empty path");
      if (sc.path_verts.size() != sc.path_edges.size() + 1)
        return fail("path vertex sequence length mismatch");
      std::set<int> path_vset;
      for (size_t i = 0; i < sc.path_edges.size(); ++i) {
        int e = sc.path_edges[i];
        if (e < 0 || e >= g.edge_count()) return fail("unknown path edge");
        int a = sc.path_verts[i];
        int b = sc.path_verts[i + 1];
        const auto& ed = g.edges[e];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
          return fail("path edge does not join consecutive vertices");
        if (!path_vset.insert(a).second) return fail("path not simple");
      }
      if (!path_vset.insert(sc.path_verts.back()).second)
        return fail("path not simple");
      // The path meets c1 only at its first vertex, c2 only at its last.
      if (!v1.count(sc.path_verts.front()))
        return fail("path does not start on c1");
      if (!v2.count(sc.path_verts.back()))
        return fail("path does not end on c2");
      for (size_t i = 1; i < sc.path_verts.size(); ++i)
        if (v1.count(sc.path_verts[i]))
          return fail("path touches c1 beyond its first vertex");
      for (size_t i = 0; i + 1 < sc.path_verts.size(); ++i)
        if (v2.count(sc.path_verts[i]))
          return fail("path touches c2 before its last vertex");
      if (!edge_sets_disjoint(sc.c1.edges, sc.c2.edges) ||
          !edge_sets_disjoint(sc.c1.edges, sc.path_edges) ||
          !edge_sets_disjoint(sc.c2.edges, sc.path_edges))
        return fail("edge sets not pairwise disjoint");
      return d;
    }
  }
  return fail("unknown kind");
}

CoverStats cover_multiplicities(const SignedMultigraph& g,
                                const CoverFamily& f) {
  CoverStats s;
  s.multiplicity.assign(g.edge_count(), 0);
  for (const auto& m : f.members) {
    Diagnosis d = validate_signed_circuit(g, m);
    if (!d.ok) throw input_error("invalid cover member: " + d.reason);
    for (int e : m.edge_set()) {
      ++s.multiplicity[e];
      ++s.length;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (s.multiplicity[e] == 0) s.uncovered.push_back(e);
  return s;
}

void canonicalize(CoverFamily& f) {
  std::stable_sort(f.members.begin(), f.members.end(),
                   [](const SignedCircuit& a, const SignedCircuit& b) {
                     return a.edge_set() < b.edge_set();
                   });
}

}  // namespace sgc
