#include "sgc/decomp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>

#include "sgc/cycle_tools.hpp"
#include "sgc/switching.hpp"

namespace sgc {
namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> negatives_in(const SignedMultigraph& g,
                              const std::vector<int>& edges) {
  std::vector<int> out;
  for (int e : edges)
    if (g.edge(e).sign < 0) out.push_back(e);
  return out;
}

// Bridges of the subgraph spanned by a sorted edge set.
std::vector<int> sub_bridges(const SignedMultigraph& g,
                             const std::vector<int>& edges) {
  std::vector<int> out;
  for (int e : edges) {
    if (g.is_loop(e)) continue;
    if (!bfs_path(g, set_minus(edges, {e}), g.edge(e).u, g.edge(e).v).found)
      out.push_back(e);
  }
  return out;
}

// S_h(e) inside the subgraph: {e} plus every f with {e,f} a minimal
// 2-edge-cut (f becomes a bridge once e is removed).
std::vector<int> sub_partner_set(const SignedMultigraph& g,
                                 const std::vector<int>& edges, int e) {
  if (g.is_loop(e)) return {e};
  auto base = sub_bridges(g, edges);
  if (contains(base, e)) return {e};
  auto after = sub_bridges(g, set_minus(edges, {e}));
  std::vector<int> out = {e};
  for (int f : after)
    if (f != e && !contains(base, f)) out.push_back(f);
  return sorted_unique(out);
}

// Throws unless the positive part of `edges` is a spanning tree of the
// touched vertices (empty is fine when only one vertex is touched).
void check_tree_shape(const SignedMultigraph& g, const std::vector<int>& edges) {
  std::vector<int> tree;
  for (int e : edges)
    if (g.edge(e).sign > 0) tree.push_back(e);
  auto tv = touched_vertices(g, edges);
  auto fail = [] {
    throw input_error("h minus its negative edges must be a spanning tree");
  };
  if (tree.empty()) {
    if (tv.size() > 1) fail();
    return;
  }
  if (tree.size() + 1 != tv.size()) fail();
  if (edge_components(g, tree).size() != 1) fail();
  if (touched_vertices(g, tree) != tv) fail();
}

// Fundamental circuit of a negative edge with respect to the positive tree.
Circuit fund_circuit(const SignedMultigraph& g, const std::vector<int>& tree,
                     int e) {
  if (g.is_loop(e)) return Circuit{{g.edge(e).u}, {e}};
  auto p = bfs_path(g, tree, g.edge(e).u, g.edge(e).v);
  if (!p.found)
    throw input_error("h minus its negative edges must be a spanning tree");
  auto ids = p.edges;
  ids.push_back(e);
  return make_circuit_from_edges(g, ids);
}

// Shortest path between two vertex sets inside an edge set (multi-source
// BFS); the interior avoids both sets. found=false when disconnected.
PathResult multi_source_path(const SignedMultigraph& g,
                             const std::vector<int>& edges,
                             std::vector<int> sources,
                             std::vector<int> targets) {
  std::sort(sources.begin(), sources.end());
  std::sort(targets.begin(), targets.end());
  PathResult r;
  for (int s : sources)
    if (contains(targets, s)) {
      r.found = true;
      r.verts = {s};
      return r;
    }
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (edge, to)
  for (int id : edges) {
    if (g.is_loop(id)) continue;
    adj[g.edge(id).u].push_back({id, g.edge(id).v});
    adj[g.edge(id).v].push_back({id, g.edge(id).u});
  }
  std::vector<int> pv(g.n, -1), pe(g.n, -1);
  std::vector<char> vis(g.n, 0), src(g.n, 0);
  std::queue<int> q;
  for (int s : sources) {
    vis[s] = 1;
    src[s] = 1;
    q.push(s);
  }
  int hit = -1;
  while (hit < 0 && !q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [e, w] : adj[v]) {
      if (vis[w]) continue;
      vis[w] = 1;
      pv[w] = v;
      pe[w] = e;
      if (contains(targets, w)) {
        hit = w;
        break;
      }
      q.push(w);
    }
  }
  if (hit < 0) return r;
  r.found = true;
  for (int v = hit; v != -1; v = src[v] ? -1 : pv[v]) {
    r.verts.push_back(v);
    if (!src[v]) r.edges.push_back(pe[v]);
  }
  std::reverse(r.verts.begin(), r.verts.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

std::vector<int> members_with_edge(const CoverFamily& f, int e) {
  std::vector<int> out;
  for (int i = 0; i < f.size(); ++i) {
    auto es = f.members[i].edge_set();
    if (std::binary_search(es.begin(), es.end(), e)) out.push_back(i);
  }
  return out;
}

// Barbell made of a negative loop, a circuit, and a (possibly empty) path
// from the loop vertex to the circuit.
SignedCircuit loop_barbell(const SignedMultigraph& g, int loop_e,
                           const Circuit& c, const PathResult& p) {
  Circuit lc{{g.edge(loop_e).u}, {loop_e}};
  if (p.edges.empty()) return short_barbell(lc, c, p.verts.front());
  return long_barbell(lc, c, p.edges, p.verts);
}

// --- two edge-disjoint paths from a vertex to two circuits (unit max-flow) --

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int init;
    size_t rev;
    int eid;  // original edge id, -1 for virtual arcs
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowNet(int nodes) : adj(nodes) {}

  void add(int a, int b, int cap, int eid) {
    adj[a].push_back({b, cap, cap, adj[b].size(), eid});
    adj[b].push_back({a, 0, 0, adj[a].size() - 1, eid});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> par(adj.size(), {-1, -1});
    std::vector<char> vis(adj.size(), 0);
    std::queue<int> q;
    q.push(s);
    vis[s] = 1;
    bool reached = false;
    while (!q.empty() && !reached) {
      int v = q.front();
      q.pop();
      for (size_t i = 0; i < adj[v].size() && !reached; ++i) {
        const Arc& a = adj[v][i];
        if (a.cap <= 0 || vis[a.to]) continue;
        vis[a.to] = 1;
        par[a.to] = {v, static_cast<int>(i)};
        if (a.to == t)
          reached = true;
        else
          q.push(a.to);
      }
    }
    if (!reached) return false;
    for (int v = t; v != s;) {
      auto [p, i] = par[v];
      adj[p][i].cap--;
      adj[adj[p][i].to][adj[p][i].rev].cap++;
      v = p;
    }
    return true;
  }
};

struct WalkPath {
  std::vector<int> verts;
  std::vector<int> edges;
};

// Removes revisits so the walk becomes a simple path (endpoints preserved).
WalkPath strip_cycles(int n, const WalkPath& w) {
  std::vector<int> pos(n, -1);
  WalkPath out;
  out.verts.push_back(w.verts[0]);
  pos[w.verts[0]] = 0;
  for (size_t i = 0; i < w.edges.size(); ++i) {
    int next = w.verts[i + 1];
    if (pos[next] >= 0) {
      while (out.verts.back() != next) {
        pos[out.verts.back()] = -1;
        out.verts.pop_back();
        out.edges.pop_back();
      }
    } else {
      out.edges.push_back(w.edges[i]);
      out.verts.push_back(next);
      pos[next] = static_cast<int>(out.verts.size()) - 1;
    }
  }
  return out;
}

PathResult trim_at_first(const WalkPath& w, const std::vector<int>& targets) {
  for (size_t i = 1; i < w.verts.size(); ++i)
    if (contains(targets, w.verts[i])) {
      PathResult r;
      r.found = true;
      r.verts.assign(w.verts.begin(), w.verts.begin() + i + 1);
      r.edges.assign(w.edges.begin(), w.edges.begin() + i);
      return r;
    }
  return {};  // found stays false
}

// Two edge-disjoint paths inside `edges` from u, one ending on each circuit,
// meeting their circuits only at the final vertex.
std::pair<PathResult, PathResult> two_disjoint_paths(
    const SignedMultigraph& g, const std::vector<int>& edges, int u,
    std::vector<int> c1, std::vector<int> c2) {
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  PathResult at_u;
  at_u.found = true;
  at_u.verts = {u};
  if (contains(c1, u) && contains(c2, u)) return {at_u, at_u};
  if (contains(c1, u) || contains(c2, u)) {
    const auto& other = contains(c1, u) ? c2 : c1;
    auto p = bfs_path_to_set(g, edges, u, other);
    if (!p.found)
      throw defect_error("two edge-disjoint connector paths not found");
    return contains(c1, u) ? std::make_pair(at_u, p)
                           : std::make_pair(p, at_u);
  }

  int t1 = g.n, t2 = g.n + 1, sink = g.n + 2;
  FlowNet fl(g.n + 3);
  for (int e : edges) {
    if (g.is_loop(e)) continue;
    fl.add(g.edge(e).u, g.edge(e).v, 1, e);
    fl.add(g.edge(e).v, g.edge(e).u, 1, e);
  }
  for (int a : c1) fl.add(a, t1, 1, -1);
  for (int a : c2) fl.add(a, t2, 1, -1);
  fl.add(t1, sink, 1, -1);
  fl.add(t2, sink, 1, -1);
  if (!fl.augment(u, sink) || !fl.augment(u, sink))
    throw defect_error("two edge-disjoint connector paths not found");

  // Net per-edge flow; opposite uses of one edge cancel.
  std::map<int, std::vector<std::pair<int, int>>> per_edge;
  for (int v = 0; v < g.n; ++v)
    for (const auto& a : fl.adj[v])
      if (a.eid >= 0 && a.init == 1 && a.cap == 0)
        per_edge[a.eid].push_back({v, a.to});
  std::vector<std::vector<std::pair<int, int>>> out(g.n);  // (eid, to)
  for (auto& [eid, dirs] : per_edge) {
    if (dirs.size() == 2) continue;
    out[dirs[0].first].push_back({eid, dirs[0].second});
  }
  for (auto& lst : out) std::sort(lst.begin(), lst.end());
  std::vector<std::vector<char>> used(g.n);
  for (int v = 0; v < g.n; ++v) used[v].assign(out[v].size(), 0);

  auto walk = [&]() {
    WalkPath w;
    w.verts.push_back(u);
    int cur = u;
    while (true) {
      size_t i = 0;
      while (i < out[cur].size() && used[cur][i]) ++i;
      if (i == out[cur].size()) break;
      used[cur][i] = 1;
      w.edges.push_back(out[cur][i].first);
      cur = out[cur][i].second;
      w.verts.push_back(cur);
    }
    return strip_cycles(g.n, w);
  };

  // The walks end on c1 and c2, possibly at a vertex the circuits share, so
  // try both pairings and keep the one where each walk reaches its circuit.
  WalkPath w1 = walk(), w2 = walk();
  for (int swap = 0; swap < 2; ++swap) {
    PathResult p1 = trim_at_first(swap ? w2 : w1, c1);
    PathResult p2 = trim_at_first(swap ? w1 : w2, c2);
    if (p1.found && p2.found) return {p1, p2};
  }
  throw defect_error("two edge-disjoint connector paths not found");
}

bool is_forest(const SignedMultigraph& g, const std::vector<int>& edges) {
  for (int e : edges)
    if (g.is_loop(e)) return false;
  return edges.size() + edge_components(g, edges).size() ==
         touched_vertices(g, edges).size();
}

}  // namespace

GeneralizedBarbellCert build_gbarbell_in_H(const SignedMultigraph& g,
                                           const std::vector<int>& h_edges) {
  auto edges = sorted_unique(h_edges);
  if (edges.empty()) throw input_error("h is empty");
  if (edge_components(g, edges).size() != 1)
    throw input_error("h must be connected");
  auto negs = negatives_in(g, edges);
  if (negs.size() < 2 || negs.size() % 2 != 0)
    throw input_error("h needs an even number (>= 2) of negative edges");
  check_tree_shape(g, edges);
  std::vector<int> tree = set_minus(edges, negs);

  // H' = symmetric difference of the fundamental circuits.
  std::vector<char> in_hp(g.edge_count(), 0);
  for (int e : negs)
    for (int id : fund_circuit(g, tree, e).edges) in_hp[id] ^= 1;
  std::vector<int> hp;
  for (int id : edges)
    if (in_hp[id]) hp.push_back(id);

  auto pieces = edge_components(g, hp);
  std::vector<int> odd;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
    if (negative_count(g, pieces[i]) % 2 != 0) odd.push_back(i);
  if (odd.size() % 2 != 0)
    throw defect_error("odd piece count is odd despite even negativeness");

  // Connect the odd pieces pairwise by shortest paths in h / H'.
  auto cont = contract(g, pieces);
  std::vector<int> qedges;
  for (int e : edges)
    if (cont.orig_edge_quotient[e] >= 0)
      qedges.push_back(cont.orig_edge_quotient[e]);
  std::vector<char> conn(g.edge_count(), 0);
  for (size_t i = 0; i + 1 < odd.size(); i += 2) {
    int qa = cont.vertex_map[g.edge(pieces[odd[i]][0]).u];
    int qb = cont.vertex_map[g.edge(pieces[odd[i + 1]][0]).u];
    auto p = bfs_path(cont.quotient, qedges, qa, qb);
    if (!p.found)
      throw defect_error("odd pieces are disconnected in the quotient");
    for (int qe : p.edges) conn[cont.quotient_edge_orig[qe]] ^= 1;
  }

  // The paths may close cycles in the quotient; removing a whole quotient
  // cycle keeps every boundary parity intact, so prune until acyclic.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> cur;
    for (int e : edges)
      if (conn[e]) cur.push_back(e);
    for (int c : cur) {
      std::vector<int> others;
      for (int e : cur)
        if (e != c) others.push_back(cont.orig_edge_quotient[e]);
      int q = cont.orig_edge_quotient[c];
      auto p = bfs_path(cont.quotient, others, cont.quotient.edge(q).u,
                        cont.quotient.edge(q).v);
      if (!p.found) continue;
      conn[c] = 0;
      for (int qe : p.edges) conn[cont.quotient_edge_orig[qe]] = 0;
      changed = true;
      break;
    }
  }

  GeneralizedBarbellCert cert;
  cert.host = hp;
  for (int e : edges)
    if (conn[e]) cert.host.push_back(e);
  cert.host = sorted_unique(cert.host);
  cert.pieces = pieces;
  auto diag = validate_gbarbell(g, cert);
  if (!diag.ok)
    throw defect_error("generalized barbell construction failed: " +
                       diag.reason);

  // Containment contract: all S_h(e), and every bridge of h with
  // odd-negative sides.
  for (int e : negs)
    for (int f : sub_partner_set(g, edges, e))
      if (!contains(cert.host, f))
        throw defect_error("generalized barbell misses a 2-edge-cut edge");
  for (int b : sub_bridges(g, edges)) {
    auto side = edge_components(g, set_minus(edges, {b}));
    int odd_side = 0;
    for (auto& s : side) {
      auto tv = touched_vertices(g, s);
      if (contains(tv, g.edge(b).u)) odd_side = negative_count(g, s) % 2;
    }
    if (odd_side && !contains(cert.host, b))
      throw defect_error("generalized barbell misses an odd bridge");
  }
  return cert;
}

SignedCircuit signed_circuit_through_S(const SignedMultigraph& g,
                                       const std::vector<int>& h_edges,
                                       int e) {
  auto edges = sorted_unique(h_edges);
  if (!contains(edges, e) || g.edge(e).sign > 0)
    throw input_error("e must be a negative edge of h");
  auto negs = negatives_in(g, edges);
  if (negs.size() < 2)
    throw input_error("h needs at least two negative edges");
  check_tree_shape(g, edges);
  if (!sub_bridges(g, edges).empty())
    throw input_error("h must be bridgeless");
  std::vector<int> tree = set_minus(edges, negs);

  int f = -1;
  for (int id : negs)
    if (id != e) {
      f = id;
      break;
    }
  Circuit ce = fund_circuit(g, tree, e);
  Circuit cf = fund_circuit(g, tree, f);
  std::vector<int> ve = ce.verts, vf = cf.verts;
  std::sort(ve.begin(), ve.end());
  std::sort(vf.begin(), vf.end());
  std::vector<int> shared;
  std::set_intersection(ve.begin(), ve.end(), vf.begin(), vf.end(),
                        std::back_inserter(shared));

  SignedCircuit sc;
  if (shared.size() >= 2) {
    auto se = ce.edges, sf = cf.edges;
    std::sort(se.begin(), se.end());
    std::sort(sf.begin(), sf.end());
    std::vector<int> diff;
    std::set_symmetric_difference(se.begin(), se.end(), sf.begin(), sf.end(),
                                  std::back_inserter(diff));
    try {
      sc = balanced_circuit(make_circuit_from_edges(g, diff));
    } catch (const Error&) {
      throw defect_error("fundamental circuit difference is not a circuit");
    }
  } else if (shared.size() == 1) {
    sc = short_barbell(ce, cf, shared[0]);
  } else {
    auto p = multi_source_path(g, tree, ce.verts, cf.verts);
    if (!p.found)
      throw defect_error("fundamental circuits are disconnected in the tree");
    sc = long_barbell(ce, cf, p.edges, p.verts);
  }

  auto diag = validate_signed_circuit(g, sc);
  if (!diag.ok)
    throw defect_error("circuit through S invalid: " + diag.reason);
  auto covered = sc.edge_set();
  for (int id : sub_partner_set(g, edges, e))
    if (!std::binary_search(covered.begin(), covered.end(), id))
      throw defect_error("circuit through S misses a 2-edge-cut edge");
  return sc;
}

namespace {

CoverFamily c0123_rec(SignedMultigraph& w, const std::vector<int>& edges);

// 2-edge-connected case of the {0,1,2,3}-cover.
CoverFamily c0123_base(SignedMultigraph& w, const std::vector<int>& edges) {
  auto negs = negatives_in(w, edges);
  if (negs.size() < 2)
    throw defect_error("cover recursion lost its negative edges");
  if (negs.size() % 2 == 0)
    return gbarbell_scdc(w, build_gbarbell_in_H(w, edges));

  // Odd signature with a negative loop: double-cover h minus the loop, then
  // route the loop into two members so it is covered exactly twice.
  int lp = -1;
  for (int id : negs)
    if (w.is_loop(id)) {
      lp = id;
      break;
    }
  if (lp >= 0) {
    auto rest = set_minus(edges, {lp});
    auto cert = build_gbarbell_in_H(w, rest);
    CoverFamily f1 = gbarbell_scdc(w, cert);
    int u = w.edge(lp).u;
    int idx = -1;
    for (int i = 0; i < f1.size(); ++i)
      if (f1.members[i].kind != SignedCircuit::Kind::Balanced) {
        idx = i;
        break;
      }
    if (idx >= 0) {
      SignedCircuit m = f1.members[idx];
      f1.members.erase(f1.members.begin() + idx);
      auto [p1, p2] =
          two_disjoint_paths(w, rest, u, m.c1.verts, m.c2.verts);
      f1.members.push_back(loop_barbell(w, lp, m.c1, p1));
      f1.members.push_back(loop_barbell(w, lp, m.c2, p2));
      return f1;
    }
    // Every double-cover member is balanced: fall back to a {1,2}-cover of
    // the barbell and attach the loop to its once-covered circuits.
    auto otc = one_two_cover(w, cert);
    if (otc.is_decomposition) {
      SignedCircuit c = signed_circuit_through_S(w, edges, lp);
      otc.family.members.push_back(c);
      otc.family.members.push_back(c);
      return otc.family;
    }
    auto [p1, p2] = two_disjoint_paths(w, rest, u, otc.spare1.verts,
                                       otc.spare2.verts);
    otc.family.members.push_back(loop_barbell(w, lp, otc.spare1, p1));
    otc.family.members.push_back(loop_barbell(w, lp, otc.spare2, p2));
    return otc.family;
  }

  // Odd signature, no loops: find a negative edge whose 2-edge-cut set
  // isolates the rest of the signature in one 2-edge-connected member.
  for (int e : negs) {
    auto s = sub_partner_set(w, edges, e);
    auto comps = edge_components(w, set_minus(edges, s));
    for (auto& m1 : comps) {
      bool all = true;
      for (int f : negs)
        if (f != e && !contains(m1, f)) all = false;
      if (!all) continue;
      CoverFamily f1 = gbarbell_scdc(w, build_gbarbell_in_H(w, m1));
      f1.members.push_back(signed_circuit_through_S(w, edges, e));
      return f1;
    }
  }
  throw defect_error("no negative edge isolates the rest of the signature");
}

CoverFamily c0123_rec(SignedMultigraph& w, const std::vector<int>& edges) {
  auto br = sub_bridges(w, edges);
  if (br.empty()) return c0123_base(w, edges);

  int b = br[0];
  int u = w.edge(b).u, v = w.edge(b).v;
  auto comps = edge_components(w, set_minus(edges, {b}));
  std::vector<int> side_u, side_v;
  for (auto& c : comps) {
    auto tv = touched_vertices(w, c);
    if (contains(tv, u))
      side_u = c;
    else if (contains(tv, v))
      side_v = c;
    else
      throw defect_error("bridge removal produced a stray component");
  }
  int neg_u = static_cast<int>(negatives_in(w, side_u).size());
  int neg_v = static_cast<int>(negatives_in(w, side_v).size());
  if (neg_u == 0 && neg_v == 0)
    throw defect_error("cover recursion lost its negative edges");
  // A side without negatives is irrelevant: drop it together with the bridge.
  if (neg_u == 0) return c0123_rec(w, side_v);
  if (neg_v == 0) return c0123_rec(w, side_u);

  // Both sides carry signature: replace the bridge by a negative loop on each
  // side, cover the sides, and splice the loop members back through b.
  int lu = w.add_edge(u, u, -1);
  int lv = w.add_edge(v, v, -1);
  side_u.push_back(lu);
  side_v.push_back(lv);
  CoverFamily fu = c0123_rec(w, side_u);
  CoverFamily fv = c0123_rec(w, side_v);
  auto mu = members_with_edge(fu, lu);
  auto mv = members_with_edge(fv, lv);
  if (mu.size() != 2 || mv.size() != 2)
    throw defect_error("synthetic loop not covered exactly twice");
  CoverFamily out;
  for (int i = 0; i < fu.size(); ++i)
    if (i != mu[0] && i != mu[1]) out.members.push_back(fu.members[i]);
  for (int i = 0; i < fv.size(); ++i)
    if (i != mv[0] && i != mv[1]) out.members.push_back(fv.members[i]);
  for (int l = 0; l < 2; ++l)
    out.members.push_back(splice_barbells_through_edge(
        fu.members[mu[l]], lu, fv.members[mv[l]], lv, b));
  return out;
}

}  // namespace

CoverFamily cover_0123(const SignedMultigraph& g,
                       const std::vector<int>& h_edges) {
  auto edges = sorted_unique(h_edges);
  if (edges.empty()) throw input_error("h is empty");
  if (edge_components(g, edges).size() != 1)
    throw input_error("h must be connected");
  auto negs = negatives_in(g, edges);
  if (negs.size() < 2)
    throw input_error("h needs at least two negative edges");
  check_tree_shape(g, edges);

  SignedMultigraph w = g;
  CoverFamily f = c0123_rec(w, edges);

  for (const auto& m : f.members)
    for (int e : m.edge_set())
      if (e >= g.edge_count())
        throw defect_error("synthetic loop leaked into the cover");
  CoverStats stats;
  try {
    stats = cover_multiplicities(g, f);
  } catch (const Error& err) {
    throw defect_error(std::string("cover verification failed: ") +
                       err.what());
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int m = stats.multiplicity[e];
    if (!contains(edges, e)) {
      if (m > 0) throw defect_error("cover left h");
      continue;
    }
    if (m > 3) throw defect_error("multiplicity above three");
    if (g.is_loop(e) && g.edge(e).sign < 0 && m != 2)
      throw defect_error("negative loop not covered exactly twice");
  }
  for (int b : sub_bridges(g, edges)) {
    auto side = edge_components(g, set_minus(edges, {b}));
    bool s_bridge = side.size() == 2 &&
                    !negatives_in(g, side[0]).empty() &&
                    !negatives_in(g, side[1]).empty();
    if (s_bridge && stats.multiplicity[b] == 0)
      throw defect_error("s-bridge left uncovered");
  }
  for (int e : negs)
    for (int id : sub_partner_set(g, edges, e))
      if (stats.multiplicity[id] == 0)
        throw defect_error("2-edge-cut edge left uncovered");
  canonicalize(f);
  return f;
}

PairDecomposition pair_decomposition(const SignedMultigraph& g,
                                     const StructureLimits& lim) {
  if (g.edge_count() == 0) throw input_error("graph has no edges");
  if (vertex_components(g).size() != 1)
    throw input_error("pair decomposition needs a connected graph");
  if (!verify_minimal_signature(g))
    throw input_error("signature is not minimal");
  auto negs = negative_edges(g);
  if (negs.size() < 2)
    throw input_error("need at least two negative edges");
  auto rep = is_s_bridgeless(g, lim);
  if (!rep.ok)
    throw input_error("graph has an s-bridge (edge " +
                      std::to_string(rep.uncovered_edge) + ")");

  auto cat = classify_bridges(g);
  std::vector<char> excl(g.edge_count(), 0);
  for (int b : cat.bridges) excl[b] = 1;
  for (auto& [e, s] : cat.partner_sets)
    for (int f : s) excl[f] = 1;

  auto tc = tree_certificate(g);
  std::vector<int> hedges = tc.tree_edges;
  hedges.insert(hedges.end(), negs.begin(), negs.end());
  hedges = sorted_unique(hedges);

  PairDecomposition out;
  if (negs.size() % 2 == 0 && is_g_bridgeless(g, lim.switching)) {
    out.k = 2;
    auto cert = build_gbarbell_in_H(g, hedges);
    out.f2 = gbarbell_scdc(g, cert);
    out.g2_edges = cert.host;
  } else {
    out.k = 3;
    out.f2 = cover_0123(g, hedges);
  }
  CoverStats stats = cover_multiplicities(g, out.f2);
  if (out.k == 3)
    for (int e = 0; e < g.edge_count(); ++e)
      if (stats.multiplicity[e] > 0) out.g2_edges.push_back(e);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!excl[e]) out.g1_edges.push_back(e);

  // Machine-check every PairDecomposition invariant.
  for (int e = 0; e < g.edge_count(); ++e)
    if (excl[e] && stats.multiplicity[e] == 0)
      throw defect_error("excluded edge not covered by f2");
  for (int e : out.g1_edges)
    if (g.edge(e).sign < 0)
      throw defect_error("negative edge survived into g1");
  if (!sub_bridges(g, out.g1_edges).empty())
    throw defect_error("g1 is not bridgeless");
  std::vector<int> g2_pos;
  for (int e : out.g2_edges)
    if (g.edge(e).sign > 0) g2_pos.push_back(e);
  if (!is_forest(g, g2_pos))
    throw defect_error("g2 minus the negative edges has a cycle");
  for (int e : out.g2_edges)
    if (stats.multiplicity[e] < 1 || stats.multiplicity[e] > out.k)
      throw defect_error("f2 multiplicity out of range on g2");
  return out;
}

}  // namespace sgc
