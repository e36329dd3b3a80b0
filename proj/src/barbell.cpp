#include "sgc/barbell.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "sgc/cycle_tools.hpp"
#include "sgc/switching.hpp"

namespace sgc {

namespace {

bool edge_negative(const SignedMultigraph& g, int e) {
  return g.edge(e).sign < 0;
}

Circuit loop_circuit(int v, int e) { return Circuit{{v}, {e}}; }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> drop(b.begin(), b.end());
  std::vector<int> out;
  for (int x : a)
    if (!drop.count(x)) out.push_back(x);
  return out;
}

// Forward traversal of circuit c from position p to position q; empty when
// p == q. Appends to verts/edges; verts gets the starting vertex first.
void forward_arc(const Circuit& c, int p, int q, std::vector<int>* verts,
                 std::vector<int>* edges) {
  int r = c.length();
  verts->push_back(c.verts[p]);
  int cur = p;
  while (cur != q) {
    edges->push_back(c.edges[cur]);
    cur = (cur + 1) % r;
    verts->push_back(c.verts[cur]);
  }
}

std::vector<int> members_containing(const CoverFamily& f, int e) {
  std::vector<int> out;
  for (int i = 0; i < f.size(); ++i) {
    auto es = f.members[i].edge_set();
    if (std::binary_search(es.begin(), es.end(), e)) out.push_back(i);
  }
  return out;
}

CoverFamily drop_members(const CoverFamily& f, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  CoverFamily out;
  size_t k = 0;
  for (int i = 0; i < f.size(); ++i) {
    if (k < idx.size() && idx[k] == i) {
      ++k;
      continue;
    }
    out.members.push_back(f.members[i]);
  }
  return out;
}

// ---- loop-surgery splices shared by the double-cover constructions ----

// A barbell member minus one of its circuits (a synthetic loop), oriented as
// the path from the loop's vertex out to the remaining circuit d.
struct Stub {
  Circuit d;
  std::vector<int> pe;
  std::vector<int> pv;  // pv.front() = loop vertex, pv.back() in d
};

Stub extract_stub(const SignedCircuit& m, int loop_edge) {
  Stub s;
  auto is_the_loop = [&](const Circuit& c) {
    return c.edges.size() == 1 && c.edges[0] == loop_edge;
  };
  if (m.kind == SignedCircuit::Kind::ShortBarbell) {
    if (is_the_loop(m.c1))
      s.d = m.c2;
    else if (is_the_loop(m.c2))
      s.d = m.c1;
    else
      throw defect_error("loop surgery: loop not a barbell side");
    s.pv = {m.joint};
    return s;
  }
  if (m.kind == SignedCircuit::Kind::LongBarbell) {
    if (is_the_loop(m.c1)) {
      s.d = m.c2;
      s.pe = m.path_edges;
      s.pv = m.path_verts;
    } else if (is_the_loop(m.c2)) {
      s.d = m.c1;
      s.pe = m.path_edges;
      s.pv = m.path_verts;
      std::reverse(s.pe.begin(), s.pe.end());
      std::reverse(s.pv.begin(), s.pv.end());
    } else {
      throw defect_error("loop surgery: loop not a barbell side");
    }
    return s;
  }
  throw defect_error("loop surgery: loop inside a balanced member");
}

// Joins two stubs whose loops sat at the same vertex u.
SignedCircuit splice_shared(const Stub& a, const Stub& b, int u) {
  std::vector<int> pe(a.pe.rbegin(), a.pe.rend());
  pe.insert(pe.end(), b.pe.begin(), b.pe.end());
  if (pe.empty()) return short_barbell(a.d, b.d, u);
  std::vector<int> pv(a.pv.rbegin(), a.pv.rend());
  pv.insert(pv.end(), b.pv.begin() + 1, b.pv.end());
  return long_barbell(a.d, b.d, pe, pv);
}

// Joins two stubs through a real edge; a's loop sat at one endpoint, b's at
// the other.
SignedCircuit splice_edge(const Stub& a, const Stub& b, int e) {
  std::vector<int> pe(a.pe.rbegin(), a.pe.rend());
  pe.push_back(e);
  pe.insert(pe.end(), b.pe.begin(), b.pe.end());
  std::vector<int> pv(a.pv.rbegin(), a.pv.rend());
  pv.insert(pv.end(), b.pv.begin(), b.pv.end());
  return long_barbell(a.d, b.d, pe, pv);
}

// ---- eulerian double cover ----

void push_twice(CoverFamily* f, const SignedCircuit& sc) {
  f->members.push_back(sc);
  f->members.push_back(sc);
}

// Base form: every repeated trail vertex is a loop, i.e. the edge set is a
// core circuit (possibly empty) plus loops.
CoverFamily scdc_base(const SignedMultigraph& w, const std::vector<int>& edges) {
  CoverFamily out;
  std::vector<int> loops, core;
  for (int e : edges) (w.is_loop(e) ? loops : core).push_back(e);

  std::map<int, std::vector<int>> neg_at;
  for (int e : loops) {
    if (!edge_negative(w, e))
      push_twice(&out, balanced_circuit(loop_circuit(w.edge(e).u, e)));
    else
      neg_at[w.edge(e).u].push_back(e);
  }
  std::vector<std::pair<int, int>> leftover;  // (vertex, negative loop)
  for (auto& [v, ls] : neg_at) {
    size_t i = 0;
    for (; i + 1 < ls.size(); i += 2)
      push_twice(&out, short_barbell(loop_circuit(v, ls[i]),
                                     loop_circuit(v, ls[i + 1]), v));
    if (i < ls.size()) leftover.push_back({v, ls[i]});
  }

  if (core.empty()) {
    if (!leftover.empty())
      throw defect_error("eulerian double cover: stray negative loop");
    return out;
  }

  Circuit c0 = make_circuit_from_edges(w, core);
  std::map<int, int> pos;
  for (int i = 0; i < c0.length(); ++i) pos[c0.verts[i]] = i;
  std::sort(leftover.begin(), leftover.end(),
            [&](const auto& a, const auto& b) {
              return pos.at(a.first) < pos.at(b.first);
            });
  const int k = static_cast<int>(leftover.size());

  if (k == 0) {
    if (!is_balanced(w, c0))
      throw defect_error("eulerian double cover: odd core without loops");
    push_twice(&out, balanced_circuit(c0));
  } else if (k == 1) {
    push_twice(&out, short_barbell(c0, loop_circuit(leftover[0].first,
                                                    leftover[0].second),
                                   leftover[0].first));
  } else if (k % 2 == 0) {
    for (int i = 0; i < k; ++i) {
      auto [va, ea] = leftover[i];
      auto [vb, eb] = leftover[(i + 1) % k];
      std::vector<int> av, ae;
      forward_arc(c0, pos[va], pos[vb], &av, &ae);
      out.members.push_back(long_barbell(loop_circuit(va, ea),
                                         loop_circuit(vb, eb), ae, av));
    }
    out.members.push_back(balanced_circuit(c0));
  } else {
    for (int i = 0; i < k; ++i) {
      auto [va, ea] = leftover[i];
      auto [vb, eb] = leftover[(i + 2) % k];
      std::vector<int> av, ae;
      forward_arc(c0, pos[va], pos[vb], &av, &ae);
      out.members.push_back(long_barbell(loop_circuit(va, ea),
                                         loop_circuit(vb, eb), ae, av));
    }
  }
  return out;
}

// Double cover of a connected even-degree edge set of w with an even number
// of negative edges. May append synthetic loops to w; they never appear in
// the returned members.
CoverFamily scdc_rec(SignedMultigraph& w, const std::vector<int>& edges) {
  Trail t = eulerian_trail(w, edges);
  const int m = static_cast<int>(t.edges.size());

  for (int iter = 0; iter <= m + 4; ++iter) {
    std::vector<int> pre(m + 1, 0);
    for (int i = 0; i < m; ++i)
      pre[i + 1] = pre[i] + (edge_negative(w, t.edges[i]) ? 1 : 0);
    std::map<int, std::vector<int>> occ;
    for (int i = 0; i < m; ++i) occ[t.verts[i]].push_back(i);
    std::vector<std::pair<int, int>> pairs;
    for (auto& [v, ps] : occ)
      for (size_t a = 0; a < ps.size(); ++a)
        for (size_t b = a + 1; b < ps.size(); ++b)
          if (ps[b] - ps[a] >= 2 && m - (ps[b] - ps[a]) >= 2)
            pairs.push_back({ps[a], ps[b]});
    std::sort(pairs.begin(), pairs.end());

    if (pairs.empty()) return scdc_base(w, edges);

    auto half1_of = [&](int i, int j) {
      return std::vector<int>(t.edges.begin() + i, t.edges.begin() + j);
    };
    auto half2_of = [&](int i, int j) {
      std::vector<int> h(t.edges.begin() + j, t.edges.end());
      h.insert(h.end(), t.edges.begin(), t.edges.begin() + i);
      return h;
    };

    // Even split: recurse on both halves independently.
    bool advanced = false;
    for (auto [i, j] : pairs) {
      if ((pre[j] - pre[i]) % 2 != 0) continue;
      CoverFamily f1 = scdc_rec(w, half1_of(i, j));
      CoverFamily f2 = scdc_rec(w, half2_of(i, j));
      f1.members.insert(f1.members.end(), f2.members.begin(),
                        f2.members.end());
      return f1;
    }

    // Odd split whose halves meet only at the split vertex: loop surgery.
    for (auto [i, j] : pairs) {
      std::set<int> v1(t.verts.begin() + i, t.verts.begin() + j);
      std::set<int> v2(t.verts.begin() + j, t.verts.end());
      v2.insert(t.verts.begin(), t.verts.begin() + i);
      int u = t.verts[i];
      bool only_u = true;
      for (int x : v1)
        if (x != u && v2.count(x)) {
          only_u = false;
          break;
        }
      if (!only_u) continue;

      std::vector<int> h1 = half1_of(i, j);
      std::vector<int> h2 = half2_of(i, j);
      int l1 = w.add_edge(u, u, -1);
      int l2 = w.add_edge(u, u, -1);
      h1.push_back(l1);
      h2.push_back(l2);
      CoverFamily f1 = scdc_rec(w, h1);
      CoverFamily f2 = scdc_rec(w, h2);
      auto m1 = members_containing(f1, l1);
      auto m2 = members_containing(f2, l2);
      if (m1.size() != 2 || m2.size() != 2)
        throw defect_error("eulerian double cover: loop not covered twice");
      CoverFamily out = drop_members(f1, m1);
      CoverFamily r2 = drop_members(f2, m2);
      out.members.insert(out.members.end(), r2.members.begin(),
                         r2.members.end());
      for (int l = 0; l < 2; ++l)
        out.members.push_back(
            splice_shared(extract_stub(f1.members[m1[l]], l1),
                          extract_stub(f2.members[m2[l]], l2), u));
      return out;
    }

    // All splits odd and entangled: reverse one subtrail (the T* reroute);
    // the next scan is guaranteed an even split.
    auto [i, j] = pairs[0];
    std::reverse(t.edges.begin() + i, t.edges.begin() + j);
    std::reverse(t.verts.begin() + i + 1, t.verts.begin() + j);
    advanced = true;
    (void)advanced;
  }
  throw defect_error("eulerian double cover: trail reroute did not converge");
}

void check_exact_double(const SignedMultigraph& g, const CoverFamily& f,
                        const std::vector<int>& host) {
  for (const auto& m : f.members)
    for (int e : m.edge_set())
      if (e >= g.edge_count())
        throw defect_error("synthetic edge leaked into a cover");
  CoverStats s = cover_multiplicities(g, f);
  std::vector<char> in_host(g.edge_count(), 0);
  for (int e : host) in_host[e] = 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    int want = in_host[e] ? 2 : 0;
    if (s.multiplicity[e] != want)
      throw defect_error("double cover verification failed at edge " +
                         std::to_string(e));
  }
}

}  // namespace

SignedCircuit splice_barbells_at_vertex(const SignedCircuit& a, int loop_a,
                                        const SignedCircuit& b, int loop_b,
                                        int v) {
  return splice_shared(extract_stub(a, loop_a), extract_stub(b, loop_b), v);
}

SignedCircuit splice_barbells_through_edge(const SignedCircuit& a, int loop_a,
                                           const SignedCircuit& b, int loop_b,
                                           int e) {
  return splice_edge(extract_stub(a, loop_a), extract_stub(b, loop_b), e);
}

CoverFamily eulerian_scdc(const SignedMultigraph& g, const std::vector<int>& b) {
  std::vector<int> host = sorted_unique(b);
  if (host.empty()) throw input_error("eulerian_scdc: empty edge set");
  std::map<int, int> deg;
  for (int e : host) {
    deg[g.edge(e).u] += 1;
    deg[g.edge(e).v] += 1;
  }
  for (auto& [v, d] : deg)
    if (d % 2 != 0) throw input_error("eulerian_scdc: odd degree vertex");
  if (edge_components(g, host).size() != 1)
    throw input_error("eulerian_scdc: edge set not connected");
  if (negative_count(g, host) % 2 != 0)
    throw input_error("eulerian_scdc: odd number of negative edges");

  SignedMultigraph w = g;
  CoverFamily f = scdc_rec(w, host);
  canonicalize(f);
  check_exact_double(g, f, host);
  return f;
}

Diagnosis validate_gbarbell(const SignedMultigraph& g,
                            GeneralizedBarbellCert& cert) {
  auto fail = [](const std::string& why) { return Diagnosis{false, why}; };
  cert.host = sorted_unique(cert.host);
  for (int e : cert.host) g.edge(e);

  std::vector<int> piece_of_edge(g.edge_count(), -1);
  std::vector<int> piece_of_vertex(g.n, -1);
  std::vector<int> piece_neg(cert.pieces.size(), 0);
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    auto& p = cert.pieces[i];
    p = sorted_unique(p);
    if (p.empty()) return fail("empty piece");
    std::map<int, int> deg;
    for (int e : p) {
      if (!std::binary_search(cert.host.begin(), cert.host.end(), e))
        return fail("piece edge outside host");
      if (piece_of_edge[e] >= 0) return fail("pieces share an edge");
      piece_of_edge[e] = static_cast<int>(i);
      if (edge_negative(g, e)) piece_neg[i] += 1;
      deg[g.edge(e).u] += 1;
      deg[g.edge(e).v] += 1;
    }
    for (auto& [v, d] : deg) {
      if (d % 2 != 0) return fail("piece has an odd-degree vertex");
      if (piece_of_vertex[v] >= 0) return fail("pieces share a vertex");
    }
    for (auto& [v, d] : deg) piece_of_vertex[v] = static_cast<int>(i);
    if (edge_components(g, p).size() != 1) return fail("piece not connected");
  }

  // Quotient vertices: (piece index, -1) or (-1, plain vertex).
  auto qv = [&](int v) {
    return piece_of_vertex[v] >= 0 ? std::pair<int, int>(piece_of_vertex[v], -1)
                                   : std::pair<int, int>(-1, v);
  };
  std::map<std::pair<int, int>, int> boundary;
  std::map<std::pair<int, int>, std::pair<int, int>> uf;  // union-find
  std::function<std::pair<int, int>(std::pair<int, int>)> find =
      [&](std::pair<int, int> x) {
        if (!uf.count(x)) uf[x] = x;
        while (uf[x] != x) {
          uf[x] = uf[uf[x]];
          x = uf[x];
        }
        return x;
      };
  for (int e : cert.host) {
    if (piece_of_edge[e] >= 0) continue;
    auto a = qv(g.edge(e).u), b = qv(g.edge(e).v);
    if (a == b) return fail("quotient has a loop (cycle)");
    boundary[a] += 1;
    boundary[b] += 1;
    auto ra = find(a), rb = find(b);
    if (ra == rb) return fail("quotient has a cycle");
    uf[ra] = rb;
  }

  cert.parity_log.clear();
  std::set<std::pair<int, int>> logged;
  auto log_one = [&](std::pair<int, int> q) {
    if (logged.count(q)) return;
    logged.insert(q);
    GeneralizedBarbellCert::ParityEntry pe;
    pe.piece = q.first;
    pe.vertex = q.second;
    pe.negatives = q.first >= 0 ? piece_neg[q.first] : 0;
    pe.boundary = boundary.count(q) ? boundary.at(q) : 0;
    cert.parity_log.push_back(pe);
  };
  for (size_t i = 0; i < cert.pieces.size(); ++i)
    log_one({static_cast<int>(i), -1});
  for (int e : cert.host) {
    if (piece_of_edge[e] >= 0) continue;
    log_one(qv(g.edge(e).u));
    log_one(qv(g.edge(e).v));
  }
  for (const auto& pe : cert.parity_log)
    if ((pe.negatives - pe.boundary) % 2 != 0)
      return fail("parity violated at a quotient vertex");
  return Diagnosis{true, ""};
}

namespace {

CoverFamily gb_rec(SignedMultigraph& w, const std::vector<int>& edges,
                   std::vector<char>& in_piece) {
  // Sibling recursions may have grown w with synthetic loops; those are never
  // cut edges, so pad the lookup to match.
  if (in_piece.size() < static_cast<size_t>(w.edge_count()))
    in_piece.resize(w.edge_count(), 1);
  auto comps = edge_components(w, edges);
  if (comps.size() > 1) {
    CoverFamily out;
    for (auto& c : comps) {
      CoverFamily f = gb_rec(w, c, in_piece);
      out.members.insert(out.members.end(), f.members.begin(),
                         f.members.end());
    }
    return out;
  }

  int cut = -1;
  for (int e : edges)
    if (!in_piece[e]) {
      cut = e;
      break;
    }
  if (cut < 0) return scdc_rec(w, edges);

  int u = w.edge(cut).u, v = w.edge(cut).v;
  std::vector<int> rest = set_minus(edges, {cut});
  int lu = w.add_edge(u, u, -1);
  int lv = w.add_edge(v, v, -1);
  in_piece.resize(w.edge_count(), 1);
  rest.push_back(lu);
  rest.push_back(lv);
  CoverFamily f = gb_rec(w, rest, in_piece);
  auto mu = members_containing(f, lu);
  auto mv = members_containing(f, lv);
  if (mu.size() != 2 || mv.size() != 2)
    throw defect_error("generalized barbell: loop not covered twice");
  for (int a : mu)
    for (int b : mv)
      if (a == b)
        throw defect_error("generalized barbell: loops in one member");
  std::vector<int> both = mu;
  both.insert(both.end(), mv.begin(), mv.end());
  CoverFamily out = drop_members(f, both);
  for (int l = 0; l < 2; ++l)
    out.members.push_back(splice_edge(extract_stub(f.members[mu[l]], lu),
                                      extract_stub(f.members[mv[l]], lv),
                                      cut));
  return out;
}

}  // namespace

CoverFamily gbarbell_scdc(const SignedMultigraph& g,
                          GeneralizedBarbellCert cert) {
  Diagnosis d = validate_gbarbell(g, cert);
  if (!d.ok) throw input_error("not a generalized barbell: " + d.reason);
  SignedMultigraph w = g;
  std::vector<char> in_piece(g.edge_count(), 0);
  for (const auto& p : cert.pieces)
    for (int e : p) in_piece[e] = 1;
  CoverFamily f = gb_rec(w, cert.host, in_piece);
  canonicalize(f);
  check_exact_double(g, f, cert.host);
  return f;
}

// ---- g-cycle cover: leaf circuits covered once ----

namespace {

struct ChainRec {
  int piece_a = -1, piece_b = -1;  // unbalanced piece indices at the ends
  std::vector<int> pv, pe;         // realized H-path from a-side to b-side
};

struct GcycleCtx {
  const SignedMultigraph& g;
  std::vector<Circuit> circ;       // per piece
  std::vector<char> unbalanced;    // per piece
  std::vector<int> piece_of_vertex;
  std::vector<int> xedges;         // non-piece host edges
  std::vector<ChainRec> chains;
};

int endpoint(const SignedMultigraph& g, int e, int side) {
  return side == 0 ? g.edge(e).u : g.edge(e).v;
}

// Builds the chains (edges of the split-and-suppressed forest) and the
// through-arcs at balanced circuit pieces.
void build_chains(GcycleCtx& ctx) {
  const SignedMultigraph& g = ctx.g;
  struct PairInfo {
    std::pair<int, int> a, b;  // the two (edge, side) entries
    int piece = -1;            // balanced piece crossed, or -1 for plain
    int pos_a = -1, pos_b = -1;
  };
  std::map<std::pair<int, int>, int> pair_of;  // (edge, side) -> pair index
  std::vector<PairInfo> pairs;

  // Group X-edge endpoints by quotient vertex.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> at;
  for (int e : ctx.xedges)
    for (int side = 0; side < 2; ++side) {
      int v = endpoint(g, e, side);
      int p = ctx.piece_of_vertex[v];
      at[p >= 0 ? std::make_pair(p, -1) : std::make_pair(-1, v)].push_back(
          {e, side});
    }

  for (auto& [q, entries] : at) {
    int p = q.first;
    if (p >= 0 && ctx.unbalanced[p]) continue;  // chain endpoints, no pairing
    if (entries.size() % 2 != 0)
      throw defect_error("g-cycle: odd boundary at an even quotient vertex");
    if (p >= 0) {
      // Balanced piece: order by attachment position, pair consecutive.
      std::map<int, int> pos;
      const Circuit& c = ctx.circ[p];
      for (int i = 0; i < c.length(); ++i) pos[c.verts[i]] = i;
      std::sort(entries.begin(), entries.end(),
                [&](const auto& x, const auto& y) {
                  int px = pos.at(endpoint(g, x.first, x.second));
                  int py = pos.at(endpoint(g, y.first, y.second));
                  return std::tie(px, x) < std::tie(py, y);
                });
      for (size_t i = 0; i + 1 < entries.size(); i += 2) {
        PairInfo pi;
        pi.a = entries[i];
        pi.b = entries[i + 1];
        pi.piece = p;
        pi.pos_a = pos.at(endpoint(g, pi.a.first, pi.a.second));
        pi.pos_b = pos.at(endpoint(g, pi.b.first, pi.b.second));
        pair_of[pi.a] = pair_of[pi.b] = static_cast<int>(pairs.size());
        pairs.push_back(pi);
      }
    } else {
      std::sort(entries.begin(), entries.end());
      for (size_t i = 0; i + 1 < entries.size(); i += 2) {
        PairInfo pi;
        pi.a = entries[i];
        pi.b = entries[i + 1];
        pair_of[pi.a] = pair_of[pi.b] = static_cast<int>(pairs.size());
        pairs.push_back(pi);
      }
    }
  }

  std::set<int> consumed;
  for (auto& [q, entries] : at) {
    if (q.first < 0 || !ctx.unbalanced[q.first]) continue;
    for (auto [e0, side0] : entries) {
      if (consumed.count(e0)) continue;
      ChainRec ch;
      ch.piece_a = q.first;
      ch.pv = {endpoint(g, e0, side0)};
      int cur = e0, exit_side = 1 - side0;
      while (true) {
        consumed.insert(cur);
        ch.pe.push_back(cur);
        int b = endpoint(g, cur, exit_side);
        ch.pv.push_back(b);
        int p = ctx.piece_of_vertex[b];
        if (p >= 0 && ctx.unbalanced[p]) {
          ch.piece_b = p;
          break;
        }
        const PairInfo& pi = pairs[pair_of.at({cur, exit_side})];
        std::pair<int, int> other =
            (pi.a == std::make_pair(cur, exit_side)) ? pi.b : pi.a;
        if (pi.piece >= 0) {
          // Cross the balanced circuit along the pair's reserved arc.
          std::vector<int> av, ae;
          if (other == pi.b)
            forward_arc(ctx.circ[pi.piece], pi.pos_a, pi.pos_b, &av, &ae);
          else {
            forward_arc(ctx.circ[pi.piece], pi.pos_a, pi.pos_b, &av, &ae);
            std::reverse(av.begin(), av.end());
            std::reverse(ae.begin(), ae.end());
          }
          ch.pv.insert(ch.pv.end(), av.begin() + 1, av.end());
          ch.pe.insert(ch.pe.end(), ae.begin(), ae.end());
        }
        cur = other.first;
        exit_side = 1 - other.second;
      }
      ctx.chains.push_back(std::move(ch));
    }
  }
}

struct Star {
  int hub = -1;
  std::vector<int> chain_ids;  // satellites, one chain each
};

std::vector<Star> star_forest(const GcycleCtx& ctx) {
  std::map<int, std::vector<std::pair<int, int>>> adj;  // piece -> (chain, other)
  for (size_t i = 0; i < ctx.chains.size(); ++i) {
    const auto& c = ctx.chains[i];
    adj[c.piece_a].push_back({static_cast<int>(i), c.piece_b});
    adj[c.piece_b].push_back({static_cast<int>(i), c.piece_a});
  }
  std::map<int, int> role;  // 0 unset, 1 hub, 2 leaf
  std::map<int, int> star_idx;
  std::vector<Star> stars;
  std::set<int> seen;
  for (auto& [root, _] : adj) {
    if (seen.count(root)) continue;
    std::vector<int> order = {root};
    std::map<int, std::pair<int, int>> parent;  // node -> (parent, chain)
    seen.insert(root);
    for (size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (auto [ch, w] : adj.at(v)) {
        if (seen.count(w)) continue;
        seen.insert(w);
        parent[w] = {v, ch};
        order.push_back(w);
      }
    }
    std::map<int, std::vector<std::pair<int, int>>> kids;  // node -> (child, chain)
    for (auto& [c, pc] : parent) kids[pc.first].push_back({c, pc.second});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      std::vector<std::pair<int, int>> unset;
      for (auto [c, ch] : kids[v])
        if (!role.count(c)) unset.push_back({c, ch});
      if (unset.empty()) continue;
      role[v] = 1;
      Star st;
      st.hub = v;
      for (auto [c, ch] : unset) {
        role[c] = 2;
        st.chain_ids.push_back(ch);
        star_idx[c] = static_cast<int>(stars.size());
      }
      star_idx[v] = static_cast<int>(stars.size());
      stars.push_back(std::move(st));
    }
    if (!role.count(root)) {
      if (kids[root].empty())
        throw defect_error("g-cycle: isolated unbalanced circuit");
      auto [c, ch] = kids[root][0];  // c is a hub: attach root as a leaf
      stars[star_idx.at(c)].hub = c;
      stars[star_idx.at(c)].chain_ids.push_back(ch);
      role[root] = 2;
    }
  }
  return stars;
}

// Oriented chain inside a star: path from the satellite circuit to the hub.
struct Sat {
  int piece = -1;
  int hub_pos = -1;  // attachment position on the hub circuit
  std::vector<int> pv, pe;
};

std::vector<SignedCircuit> realize_star(const GcycleCtx& ctx, const Star& st,
                                        int rotation) {
  const Circuit& hub = ctx.circ[st.hub];
  std::map<int, int> hpos;
  for (int i = 0; i < hub.length(); ++i) hpos[hub.verts[i]] = i;

  std::vector<Sat> sats;
  for (int ch_id : st.chain_ids) {
    const ChainRec& ch = ctx.chains[ch_id];
    Sat s;
    s.pv = ch.pv;
    s.pe = ch.pe;
    if (ch.piece_b == st.hub && ch.piece_a != st.hub) {
      s.piece = ch.piece_a;
    } else {
      s.piece = ch.piece_b;
      std::reverse(s.pv.begin(), s.pv.end());
      std::reverse(s.pe.begin(), s.pe.end());
    }
    s.hub_pos = hpos.at(s.pv.back());
    sats.push_back(std::move(s));
  }
  std::sort(sats.begin(), sats.end(), [](const Sat& a, const Sat& b) {
    return std::tie(a.hub_pos, a.piece) < std::tie(b.hub_pos, b.piece);
  });
  const int r = static_cast<int>(sats.size());
  std::rotate(sats.begin(), sats.begin() + (rotation % std::max(r, 1)),
              sats.end());

  auto singleton = [&](const Sat& s) {
    return long_barbell(ctx.circ[s.piece], hub, s.pe, s.pv);
  };
  // Hub arc spanning the sorted gaps from rotated index a to index b.
  auto span_arc = [&](int a, int b, std::vector<int>* av, std::vector<int>* ae) {
    av->push_back(hub.verts[sats[a].hub_pos]);
    for (int k = a; k != b; k = (k + 1) % r) {
      int from = sats[k].hub_pos, to = sats[(k + 1) % r].hub_pos;
      std::vector<int> sv, se;
      forward_arc(hub, from, to, &sv, &se);
      av->insert(av->end(), sv.begin() + 1, sv.end());
      ae->insert(ae->end(), se.begin(), se.end());
    }
  };
  auto paired = [&](int a, int b, const std::vector<int>& ae,
                    const std::vector<int>& av) {
    std::vector<int> pe = sats[a].pe;
    std::vector<int> pv = sats[a].pv;
    pe.insert(pe.end(), ae.begin(), ae.end());
    pv.insert(pv.end(), av.begin() + 1, av.end());
    pe.insert(pe.end(), sats[b].pe.rbegin(), sats[b].pe.rend());
    pv.insert(pv.end(), sats[b].pv.rbegin() + 1, sats[b].pv.rend());
    return long_barbell(ctx.circ[sats[a].piece], ctx.circ[sats[b].piece], pe,
                        pv);
  };

  std::vector<SignedCircuit> out;
  bool coincident = true;
  for (const Sat& s : sats)
    if (s.hub_pos != sats[0].hub_pos) coincident = false;

  if (r == 1) {
    out.push_back(singleton(sats[0]));
  } else if (r == 2 || (r % 2 == 0 && coincident)) {
    out.push_back(singleton(sats[0]));
    out.push_back(singleton(sats[1]));
    for (int i = 2; i + 1 < r; i += 2) {
      std::vector<int> av = {hub.verts[sats[i].hub_pos]};
      out.push_back(paired(i, i + 1, {}, av));
    }
  } else if (r % 2 == 1) {
    out.push_back(singleton(sats[0]));
    for (int i = 1; i + 1 < r; i += 2) {
      std::vector<int> av, ae;
      span_arc(i, i + 1, &av, &ae);
      out.push_back(paired(i, i + 1, ae, av));
    }
  } else {
    // Even r >= 4: pair index 2i with 2i+3 (cyclically); the arcs span three
    // consecutive gaps each and cover the hub with multiplicities 1 and 2.
    for (int i = 0; 2 * i < r; ++i) {
      int a = 2 * i, b = (2 * i + 3) % r;
      std::vector<int> av, ae;
      span_arc(a, b, &av, &ae);
      out.push_back(paired(a, b, ae, av));
    }
  }
  return out;
}

}  // namespace

CoverFamily gcycle_cover(const SignedMultigraph& g,
                         GeneralizedBarbellCert cert) {
  Diagnosis d = validate_gbarbell(g, cert);
  if (!d.ok) throw input_error("not a generalized barbell: " + d.reason);

  GcycleCtx ctx{g};
  ctx.piece_of_vertex.assign(g.n, -1);
  std::vector<char> piece_edge(g.edge_count(), 0);
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    ctx.circ.push_back(make_circuit_from_edges(g, cert.pieces[i]));
    ctx.unbalanced.push_back(negative_count(g, cert.pieces[i]) % 2 != 0);
    for (int v : ctx.circ.back().verts)
      ctx.piece_of_vertex[v] = static_cast<int>(i);
    for (int e : cert.pieces[i]) piece_edge[e] = 1;
  }
  for (int e : cert.host)
    if (!piece_edge[e]) ctx.xedges.push_back(e);

  build_chains(ctx);
  std::vector<Star> stars = star_forest(ctx);

  CoverFamily f;
  for (size_t i = 0; i < ctx.circ.size(); ++i)
    if (!ctx.unbalanced[i]) f.members.push_back(balanced_circuit(ctx.circ[i]));
  for (const Star& st : stars) {
    int r = static_cast<int>(st.chain_ids.size());
    bool placed = false;
    for (int rot = 0; rot < std::max(r, 1) && !placed; ++rot) {
      std::vector<SignedCircuit> ms;
      try {
        ms = realize_star(ctx, st, rot);
      } catch (const Error&) {
        continue;
      }
      bool ok = true;
      for (const auto& m : ms)
        if (!validate_signed_circuit(g, m).ok) ok = false;
      if (!ok) continue;
      f.members.insert(f.members.end(), ms.begin(), ms.end());
      placed = true;
    }
    if (!placed) throw defect_error("g-cycle: no valid star realization");
  }
  canonicalize(f);

  // Band verification: leaves exactly once, other pieces once or twice,
  // non-piece edges at most once.
  CoverStats s = cover_multiplicities(g, f);
  std::map<int, int> xdeg;
  for (int e : ctx.xedges)
    for (int side = 0; side < 2; ++side) {
      int p = ctx.piece_of_vertex[endpoint(g, e, side)];
      if (p >= 0) xdeg[p] += 1;
    }
  std::vector<char> in_host(g.edge_count(), 0);
  for (int e : cert.host) in_host[e] = 1;
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    bool leaf = xdeg[static_cast<int>(i)] == 1;
    for (int e : cert.pieces[i]) {
      int m = s.multiplicity[e];
      if (leaf ? (m != 1) : (m < 1 || m > 2))
        throw defect_error("g-cycle: piece band violated at edge " +
                           std::to_string(e));
    }
  }
  for (int e : ctx.xedges)
    if (s.multiplicity[e] > 1)
      throw defect_error("g-cycle: connector covered twice");
  for (int e = 0; e < g.edge_count(); ++e)
    if (!in_host[e] && s.multiplicity[e] != 0)
      throw defect_error("g-cycle: member left the host");
  return f;
}

// ---- {1,2}-cover: one_two_cover ----

namespace {

bool subgraph_has_bridge(const SignedMultigraph& g,
                         const std::vector<int>& comp) {
  for (int e : comp) {
    if (g.is_loop(e)) continue;
    std::vector<int> rest = set_minus(comp, {e});
    if (rest.empty()) return true;
    if (!bfs_path(g, rest, g.edge(e).u, g.edge(e).v).found) return true;
  }
  return false;
}

struct OPath {
  std::vector<int> verts, edges;  // open path
};

OPath circuit_path(const Circuit& c, int from_pos, int to_pos) {
  OPath p;
  forward_arc(c, from_pos, to_pos, &p.verts, &p.edges);
  return p;
}

// x -> y followed by y -> x.
Circuit join_series(const OPath& a, const OPath& b) {
  Circuit c;
  c.verts.assign(a.verts.begin(), a.verts.end() - 1);
  c.verts.insert(c.verts.end(), b.verts.begin(), b.verts.end() - 1);
  c.edges = a.edges;
  c.edges.insert(c.edges.end(), b.edges.begin(), b.edges.end());
  return c;
}

// Both x -> y; the second is traversed backwards.
Circuit join_opposed(const OPath& a, const OPath& b) {
  Circuit c;
  c.verts.assign(a.verts.begin(), a.verts.end() - 1);
  c.verts.insert(c.verts.end(), b.verts.rbegin(), b.verts.rend() - 1);
  c.edges = a.edges;
  c.edges.insert(c.edges.end(), b.edges.rbegin(), b.edges.rend());
  return c;
}

struct CompOutcome {
  bool decomposition = false;
  CoverFamily family;
  bool has_spares = false;
  Circuit spare1, spare2;
};

// Eulerian bridgeless component: decompose, improve until unbalanced circuits
// are pairwise vertex-disjoint, then finish through the g-cycle cover.
CompOutcome one_two_eulerian(const SignedMultigraph& g,
                             const std::vector<int>& comp) {
  std::vector<Circuit> unb, bal;
  std::vector<SignedCircuit> barbs;
  for (Circuit& c : circuit_decomposition(g, comp))
    (is_balanced(g, c) ? bal : unb).push_back(std::move(c));

  int guard = 10 * static_cast<int>(comp.size()) + 100;
  while (guard-- > 0) {
    int pi = -1, pj = -1;
    std::vector<int> shared;
    for (size_t i = 0; i < unb.size() && pi < 0; ++i)
      for (size_t j = i + 1; j < unb.size() && pi < 0; ++j) {
        std::set<int> vi(unb[i].verts.begin(), unb[i].verts.end());
        shared.clear();
        for (int v : unb[j].verts)
          if (vi.count(v)) shared.push_back(v);
        if (!shared.empty()) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
        }
      }
    if (pi < 0) break;

    Circuit ci = unb[pi], cj = unb[pj];
    unb.erase(unb.begin() + pj);
    unb.erase(unb.begin() + pi);

    if (shared.size() >= 3) {
      // Resplit the union into three or more circuits.
      std::vector<int> un = ci.edges;
      un.insert(un.end(), cj.edges.begin(), cj.edges.end());
      un = sorted_unique(un);
      std::vector<Circuit> repl;
      enumerate_circuits(g, un, [&](const Circuit& dd) {
        std::vector<int> rest = set_minus(un, sorted_unique(dd.edges));
        if (rest.empty()) return true;
        auto dec = circuit_decomposition(g, rest);
        if (1 + dec.size() >= 3) {
          repl = dec;
          repl.push_back(dd);
          return false;
        }
        return true;
      });
      if (repl.empty())
        throw defect_error("{1,2}-cover: resplit of entangled circuits failed");
      for (Circuit& c : repl)
        (is_balanced(g, c) ? bal : unb).push_back(std::move(c));
    } else if (shared.size() == 2) {
      std::map<int, int> ipos, jpos;
      for (int k = 0; k < ci.length(); ++k) ipos[ci.verts[k]] = k;
      for (int k = 0; k < cj.length(); ++k) jpos[cj.verts[k]] = k;
      int x = shared[0], y = shared[1];
      OPath p1 = circuit_path(ci, ipos[x], ipos[y]);
      OPath p2 = circuit_path(ci, ipos[y], ipos[x]);
      OPath q1 = circuit_path(cj, jpos[x], jpos[y]);
      OPath q2 = circuit_path(cj, jpos[y], jpos[x]);
      Circuit a, b;
      if ((negative_count(g, p1.edges) + negative_count(g, q1.edges)) % 2 ==
          0) {
        a = join_opposed(p1, q1);
        b = join_opposed(p2, q2);
      } else {
        a = join_series(p1, q2);
        b = join_series(q1, p2);
      }
      if (!is_balanced(g, a) || !is_balanced(g, b))
        throw defect_error("{1,2}-cover: two-vertex merge not balanced");
      bal.push_back(std::move(a));
      bal.push_back(std::move(b));
    } else {
      barbs.push_back(short_barbell(ci, cj, shared[0]));
    }
  }
  if (guard <= 0) throw defect_error("{1,2}-cover: improvement did not stop");

  CompOutcome out;
  if (unb.empty()) {
    if (barbs.empty()) {
      out.decomposition = true;
      for (const Circuit& c : bal)
        out.family.members.push_back(balanced_circuit(c));
      return out;
    }
    for (const Circuit& c : bal)
      out.family.members.push_back(balanced_circuit(c));
    for (const SignedCircuit& b : barbs) out.family.members.push_back(b);
    out.has_spares = true;
    out.spare1 = barbs[0].c1;
    out.spare2 = barbs[0].c2;
    return out;
  }

  if (unb.size() % 2 != 0)
    throw defect_error("{1,2}-cover: odd number of disjoint unbalanced pieces");

  // Contract the unbalanced circuits, pair them along a spanning tree, and
  // take the symmetric difference of the connecting tree paths.
  std::vector<std::vector<int>> pieces;
  for (const Circuit& c : unb) pieces.push_back(sorted_unique(c.edges));
  Contraction cont = contract(g, pieces);
  std::set<int> comp_set(comp.begin(), comp.end());

  std::map<int, std::vector<std::pair<int, int>>> qadj;  // qv -> (qedge, other)
  for (int qe = 0; qe < cont.quotient.edge_count(); ++qe) {
    if (!comp_set.count(cont.quotient_edge_orig[qe])) continue;
    int a = cont.quotient.edge(qe).u, b = cont.quotient.edge(qe).v;
    if (a == b) continue;
    qadj[a].push_back({qe, b});
    qadj[b].push_back({qe, a});
  }
  int root = cont.vertex_map[unb[0].verts[0]];
  std::map<int, std::pair<int, int>> parent;  // qv -> (parent qv, qedge)
  parent[root] = {-1, -1};
  std::vector<int> order = {root};
  for (size_t i = 0; i < order.size(); ++i)
    for (auto [qe, w] : qadj[order[i]])
      if (!parent.count(w)) {
        parent[w] = {order[i], qe};
        order.push_back(w);
      }
  std::map<int, int> use_count;
  auto walk_up = [&](int v, std::vector<int>* path) {
    while (parent.at(v).first >= 0) {
      path->push_back(parent.at(v).second);
      v = parent.at(v).first;
    }
  };
  for (size_t j = 0; j + 1 < unb.size(); j += 2) {
    int a = cont.vertex_map[unb[j].verts[0]];
    int b = cont.vertex_map[unb[j + 1].verts[0]];
    std::vector<int> pa, pb;
    walk_up(a, &pa);
    walk_up(b, &pb);
    std::set<int> sa(pa.begin(), pa.end());
    std::set<int> sb(pb.begin(), pb.end());
    for (int qe : pa)
      if (!sb.count(qe)) use_count[qe] += 1;
    for (int qe : pb)
      if (!sa.count(qe)) use_count[qe] += 1;
  }
  std::vector<int> fprime;
  for (auto [qe, cnt] : use_count)
    if (cnt % 2 != 0) fprime.push_back(cont.quotient_edge_orig[qe]);

  GeneralizedBarbellCert cert;
  cert.pieces = pieces;
  cert.host = fprime;
  for (const auto& p : pieces)
    cert.host.insert(cert.host.end(), p.begin(), p.end());
  cert.host = sorted_unique(cert.host);
  CoverFamily fstar = gcycle_cover(g, cert);

  out.family = fstar;
  for (const Circuit& c : bal)
    out.family.members.push_back(balanced_circuit(c));
  for (const SignedCircuit& b : barbs) out.family.members.push_back(b);

  // Spares: two leaf circuits of the connecting forest.
  std::map<int, int> fdeg;
  for (int e : fprime)
    for (int side = 0; side < 2; ++side) {
      int qv = cont.vertex_map[endpoint(g, e, side)];
      fdeg[qv] += 1;
    }
  std::vector<int> leaves;
  for (size_t i = 0; i < unb.size(); ++i)
    if (fdeg[cont.vertex_map[unb[i].verts[0]]] == 1)
      leaves.push_back(static_cast<int>(i));
  if (leaves.size() < 2)
    throw defect_error("{1,2}-cover: fewer than two leaf circuits");
  out.has_spares = true;
  out.spare1 = unb[leaves[0]];
  out.spare2 = unb[leaves[1]];
  return out;
}

}  // namespace

OneTwoCover one_two_cover(const SignedMultigraph& g,
                          GeneralizedBarbellCert cert) {
  Diagnosis d = validate_gbarbell(g, cert);
  if (!d.ok) throw input_error("not a generalized barbell: " + d.reason);

  std::vector<char> in_host(g.edge_count(), 0);
  for (int e : cert.host) in_host[e] = 1;

  OneTwoCover result;
  bool all_decomposition = true;
  bool spares_set = false;
  for (const auto& comp : edge_components(g, cert.host)) {
    CompOutcome oc;
    if (subgraph_has_bridge(g, comp)) {
      GeneralizedBarbellCert sub;
      sub.host = comp;
      std::set<int> cs(comp.begin(), comp.end());
      for (const auto& p : cert.pieces)
        if (!p.empty() && cs.count(p[0])) sub.pieces.push_back(p);
      CoverFamily dbl = gbarbell_scdc(g, sub);
      int pick = -1;
      for (int i = 0; i < dbl.size(); ++i)
        if (dbl.members[i].kind != SignedCircuit::Kind::Balanced) pick = i;
      if (pick < 0)
        throw defect_error("{1,2}-cover: no barbell in a bridged component");
      oc.spare1 = dbl.members[pick].c1;
      oc.spare2 = dbl.members[pick].c2;
      oc.has_spares = true;
      oc.family = drop_members(dbl, {pick});
    } else {
      oc = one_two_eulerian(g, comp);
    }
    if (!oc.decomposition) all_decomposition = false;
    result.family.members.insert(result.family.members.end(),
                                 oc.family.members.begin(),
                                 oc.family.members.end());
    if (oc.has_spares && !spares_set) {
      result.spare1 = oc.spare1;
      result.spare2 = oc.spare2;
      spares_set = true;
    }
  }
  result.is_decomposition = all_decomposition;
  canonicalize(result.family);

  CoverStats s = cover_multiplicities(g, result.family);
  for (int e = 0; e < g.edge_count(); ++e) {
    int m = s.multiplicity[e];
    if (!in_host[e] ? (m != 0)
                    : (result.is_decomposition ? (m != 1) : (m < 1 || m > 2)))
      throw defect_error("{1,2}-cover verification failed at edge " +
                         std::to_string(e));
  }
  if (result.is_decomposition) {
    for (const auto& m : result.family.members)
      if (m.kind != SignedCircuit::Kind::Balanced)
        throw defect_error("{1,2}-cover: decomposition member not balanced");
  } else {
    if (!spares_set) throw defect_error("{1,2}-cover: missing spare circuits");
    if (is_balanced(g, result.spare1) || is_balanced(g, result.spare2))
      throw defect_error("{1,2}-cover: spare circuit balanced");
    std::set<int> e1(result.spare1.edges.begin(), result.spare1.edges.end());
    for (int e : result.spare2.edges)
      if (e1.count(e)) throw defect_error("{1,2}-cover: spares share an edge");
    for (int e : result.spare1.edges)
      if (s.multiplicity[e] != 1)
        throw defect_error("{1,2}-cover: spare edge covered twice");
    for (int e : result.spare2.edges)
      if (s.multiplicity[e] != 1)
        throw defect_error("{1,2}-cover: spare edge covered twice");
  }
  return result;
}

}  // namespace sgc
