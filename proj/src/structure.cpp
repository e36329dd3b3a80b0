#include "sgc/structure.hpp"

#include <algorithm>
#include <set>

#include "sgc/cycle_tools.hpp"

namespace sgc {

namespace {

// Low-link bridge computation over the multigraph, skipping edge ids in
// `skip`. Parallel edges and loops never come out as bridges.
std::vector<int> bridges_excluding(const SignedMultigraph& g,
                                   const std::set<int>& skip) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (edge, to)
  for (int e = 0; e < g.edge_count(); ++e) {
    if (skip.count(e)) continue;
    const auto& ed = g.edges[e];
    if (ed.u == ed.v) continue;
    adj[ed.u].push_back({e, ed.v});
    adj[ed.v].push_back({e, ed.u});
  }
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<int> out;
  int tick = 0;
  // Iterative DFS; frame = (vertex, incoming edge, adjacency index).
  struct Frame {
    int v, in_edge;
    size_t idx = 0;
  };
  for (int root = 0; root < g.n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> st = {{root, -1}};
    disc[root] = low[root] = tick++;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.idx < adj[f.v].size()) {
        auto [e, w] = adj[f.v][f.idx++];
        if (e == f.in_edge) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = tick++;
          st.push_back({w, e});
        }
      } else {
        int v = f.v, in_e = f.in_edge;
        st.pop_back();
        if (!st.empty()) {
          int p = st.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.push_back(in_e);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> bridges(const SignedMultigraph& g) {
  return bridges_excluding(g, {});
}

std::vector<int> partner_set(const SignedMultigraph& g, int e) {
  g.edge(e);
  std::vector<int> out = {e};
  if (g.is_loop(e)) return out;
  auto base = bridges(g);
  if (std::binary_search(base.begin(), base.end(), e)) return out;
  auto with_e_removed = bridges_excluding(g, {e});
  for (int f : with_e_removed)
    if (!std::binary_search(base.begin(), base.end(), f)) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Vertex sides of g - b, as (side containing u, side containing v).
std::pair<std::set<int>, std::set<int>> bridge_sides(const SignedMultigraph& g,
                                                     int b) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == b) continue;
    const auto& ed = g.edges[e];
    adj[ed.u].push_back({e, ed.v});
    adj[ed.v].push_back({e, ed.u});
  }
  auto flood = [&](int s) {
    std::set<int> side = {s};
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [e, w] : adj[v])
        if (!side.count(w)) {
          side.insert(w);
          stack.push_back(w);
        }
    }
    return side;
  };
  return {flood(g.edge(b).u), flood(g.edge(b).v)};
}

}  // namespace

CutCatalog classify_bridges(const SignedMultigraph& g) {
  CutCatalog cat;
  cat.bridges = bridges(g);
  for (int b : cat.bridges) {
    auto [side_u, side_v] = bridge_sides(g, b);
    int neg_u = 0, neg_v = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e == b || g.edges[e].sign != -1) continue;
      if (side_u.count(g.edges[e].u))
        ++neg_u;
      else
        ++neg_v;
    }
    if (neg_u >= 1 && neg_v >= 1) cat.s_bridges.push_back(b);
    if (neg_u % 2 == 1 || neg_v % 2 == 1) cat.g_class_bridges.push_back(b);
  }
  for (int e : negative_edges(g)) cat.partner_sets[e] = partner_set(g, e);
  return cat;
}

namespace {

SignedMultigraph induced_side(const SignedMultigraph& g,
                              const std::set<int>& side, int skip_edge) {
  SignedMultigraph h;
  std::vector<int> local(g.n, -1);
  for (int v : side) local[v] = h.n++;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == skip_edge) continue;
    const auto& ed = g.edges[e];
    if (side.count(ed.u) && side.count(ed.v))
      h.edges.push_back({local[ed.u], local[ed.v], ed.sign});
  }
  return h;
}

}  // namespace

bool is_g_bridge(const SignedMultigraph& g, int b, const SwitchLimits& lim) {
  auto base = bridges(g);
  if (!std::binary_search(base.begin(), base.end(), b))
    throw input_error("edge is not a bridge");
  auto [side_u, side_v] = bridge_sides(g, b);
  auto eps_u = negativeness_exact(induced_side(g, side_u, b), lim).epsilon_n;
  auto eps_v = negativeness_exact(induced_side(g, side_v, b), lim).epsilon_n;
  return eps_u % 2 == 0 && eps_v % 2 == 0;
}

bool is_g_bridgeless(const SignedMultigraph& g, const SwitchLimits& lim) {
  for (int b : bridges(g))
    if (is_g_bridge(g, b, lim)) return false;
  return true;
}

namespace {

int shared_vertex_count(const Circuit& a, const Circuit& b, int* the_vertex) {
  std::set<int> va(a.verts.begin(), a.verts.end());
  int cnt = 0;
  for (int v : b.verts)
    if (va.count(v)) {
      ++cnt;
      if (the_vertex) *the_vertex = v;
    }
  return cnt;
}

bool circuits_edge_disjoint(const Circuit& a, const Circuit& b) {
  std::set<int> ea(a.edges.begin(), a.edges.end());
  for (int e : b.edges)
    if (ea.count(e)) return false;
  return true;
}

// Shortest connecting path between two vertex-disjoint circuits whose
// interior avoids both circuits. found=false when none exists.
PathResult find_connecting_path(const SignedMultigraph& g, const Circuit& c1,
                                const Circuit& c2) {
  std::set<int> v1(c1.verts.begin(), c1.verts.end());
  std::set<int> v2(c2.verts.begin(), c2.verts.end());
  PathResult best;
  enumerate_connecting_paths(
      g, [&] {
        std::vector<int> all(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) all[e] = e;
        return all;
      }(),
      c1.verts, c2.verts,
      [&](const std::vector<int>& edges, const std::vector<int>& verts) {
        if (!best.found || edges.size() < best.edges.size()) {
          best.found = true;
          best.edges = edges;
          best.verts = verts;
        }
        return best.edges.size() > 1;  // length-1 path cannot improve
      });
  return best;
}

}  // namespace

SBridgelessReport is_s_bridgeless(const SignedMultigraph& g,
                                  const StructureLimits& lim) {
  if (g.edge_count() > lim.s_bridgeless_edge_limit)
    throw limit_error("s-bridgeless check refused: " +
                      std::to_string(g.edge_count()) + " edges (limit " +
                      std::to_string(lim.s_bridgeless_edge_limit) + ")");
  SBridgelessReport rep;
  std::vector<int> all_edges(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) all_edges[e] = e;

  std::vector<Circuit> unbalanced;
  size_t seen = 0;
  bool complete = enumerate_circuits(g, all_edges, [&](const Circuit& c) {
    if (++seen > lim.circuit_cap) return false;
    if (negative_count(g, c.edges) % 2 == 0) {
      auto sc = balanced_circuit(c);
      for (int e : c.edges)
        if (!rep.witness.count(e)) rep.witness[e] = sc;
    } else {
      unbalanced.push_back(c);
    }
    return true;
  });
  if (!complete) throw limit_error("circuit enumeration cap exceeded");

  auto uncovered = [&]() {
    for (int e = 0; e < g.edge_count(); ++e)
      if (!rep.witness.count(e)) return e;
    return -1;
  };

  // Short and long barbells for the edges no balanced circuit reaches.
  if (uncovered() >= 0) {
    for (size_t i = 0; i < unbalanced.size() && uncovered() >= 0; ++i) {
      for (size_t j = i + 1; j < unbalanced.size(); ++j) {
        const Circuit& a = unbalanced[i];
        const Circuit& b = unbalanced[j];
        int joint = -1;
        int shared = shared_vertex_count(a, b, &joint);
        if (shared == 1 && circuits_edge_disjoint(a, b)) {
          auto sc = short_barbell(a, b, joint);
          for (int e : sc.edge_set())
            if (!rep.witness.count(e)) rep.witness[e] = sc;
        } else if (shared == 0) {
          auto p = find_connecting_path(g, a, b);
          if (p.found) {
            auto sc = long_barbell(a, b, p.edges, p.verts);
            for (int e : sc.edge_set())
              if (!rep.witness.count(e)) rep.witness[e] = sc;
          }
        }
      }
    }
  }

  // Last resort: an uncovered edge may only appear as the interior of a
  // connecting path between two disjoint unbalanced circuits.
  int missing = uncovered();
  while (missing >= 0) {
    bool found = false;
    for (size_t i = 0; i < unbalanced.size() && !found; ++i) {
      for (size_t j = i + 1; j < unbalanced.size() && !found; ++j) {
        const Circuit& a = unbalanced[i];
        const Circuit& b = unbalanced[j];
        if (shared_vertex_count(a, b, nullptr) != 0) continue;
        enumerate_connecting_paths(
            g, all_edges, a.verts, b.verts,
            [&](const std::vector<int>& edges, const std::vector<int>& verts) {
              if (std::find(edges.begin(), edges.end(), missing) !=
                  edges.end()) {
                auto sc = long_barbell(a, b, edges, verts);
                for (int e : sc.edge_set())
                  if (!rep.witness.count(e)) rep.witness[e] = sc;
                found = true;
                return false;
              }
              return true;
            });
      }
    }
    if (!found) {
      rep.ok = false;
      rep.uncovered_edge = missing;
      return rep;
    }
    missing = uncovered();
  }
  rep.ok = true;
  return rep;
}

TreeCertificate tree_certificate(const SignedMultigraph& g) {
  TreeCertificate cert;
  auto neg = negative_edges(g);
  std::set<int> neg_set(neg.begin(), neg.end());

  // Kruskal-style forest over positive edges, per component of g.
  std::vector<int> parent(g.n);
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    if (neg_set.count(e) || g.is_loop(e)) continue;
    int a = find(g.edges[e].u), b = find(g.edges[e].v);
    if (a != b) {
      parent[a] = b;
      cert.tree_edges.push_back(e);
    }
  }
  // The positive forest must not split any component of g.
  for (const auto& e : g.edges)
    if (find(e.u) != find(e.v))
      throw input_error(
          "g - E_N disconnects a component (signature not minimal)");

  std::set<int> tree(cert.tree_edges.begin(), cert.tree_edges.end());
  std::vector<int> tree_vec(tree.begin(), tree.end());
  for (int e : neg) {
    if (g.is_loop(e)) {
      Circuit c;
      c.verts = {g.edges[e].u};
      c.edges = {e};
      cert.fundamental_circuit[e] = c;
      continue;
    }
    auto p = bfs_path(g, tree_vec, g.edges[e].u, g.edges[e].v);
    if (!p.found) throw defect_error("tree path missing for negative edge");
    std::vector<int> circ = p.edges;
    circ.push_back(e);
    cert.fundamental_circuit[e] = make_circuit_from_edges(g, circ);
  }
  return cert;
}

Contraction contract(const SignedMultigraph& g,
                     const std::vector<std::vector<int>>& pieces) {
  Contraction c;
  std::vector<int> owner(g.n, -1);
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (int v : touched_vertices(g, pieces[i])) {
      if (owner[v] >= 0) throw input_error("pieces are not vertex-disjoint");
      owner[v] = static_cast<int>(i);
    }
  }
  c.vertex_map.assign(g.n, -1);
  c.quotient.n = static_cast<int>(pieces.size());
  for (int v = 0; v < g.n; ++v)
    c.vertex_map[v] = owner[v] >= 0 ? owner[v] : c.quotient.n++;
  c.orig_edge_quotient.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    int qu = c.vertex_map[ed.u], qv = c.vertex_map[ed.v];
    if (qu == qv && owner[ed.u] >= 0) continue;  // internal to a piece
    c.orig_edge_quotient[e] = c.quotient.edge_count();
    c.quotient.edges.push_back({qu, qv, ed.sign});
    c.quotient_edge_orig.push_back(e);
  }
  return c;
}

bool has_cycle(const SignedMultigraph& g) {
  std::vector<int> parent(g.n);
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& e : g.edges) {
    if (e.u == e.v) return true;
    int a = find(e.u), b = find(e.v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

}  // namespace sgc
