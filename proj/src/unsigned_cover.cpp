#include "sgc/unsigned_cover.hpp"

#include <algorithm>
#include <limits>

#include "sgc/cycle_tools.hpp"

namespace sgc {
namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_input(const SignedMultigraph& g, const std::vector<int>& edges) {
  for (int e : edges) {
    if (g.edge(e).sign < 0)
      throw input_error("unsigned cover requires all-positive edges");
    if (g.is_loop(e)) continue;
    std::vector<int> rest;
    for (int f : edges)
      if (f != e) rest.push_back(f);
    if (!bfs_path(g, rest, g.edge(e).u, g.edge(e).v).found)
      throw input_error("bridge detected in unsigned cover input");
  }
}

// Greedy: cover the smallest uncovered edge by a shortest circuit through it,
// then drop members whose edges are all covered twice.
CoverFamily greedy_cover(const SignedMultigraph& g,
                         const std::vector<int>& edges) {
  std::vector<int> mult(g.edge_count(), 0);
  CoverFamily f;
  for (int e : edges) {
    if (mult[e] > 0) continue;
    Circuit c;
    if (g.is_loop(e)) {
      c = Circuit{{g.edge(e).u}, {e}};
    } else {
      std::vector<int> rest;
      for (int x : edges)
        if (x != e) rest.push_back(x);
      auto p = bfs_path(g, rest, g.edge(e).u, g.edge(e).v);
      if (!p.found) throw input_error("bridge detected in unsigned cover input");
      auto ids = p.edges;
      ids.push_back(e);
      c = make_circuit_from_edges(g, ids);
    }
    for (int id : c.edges) mult[id]++;
    f.members.push_back(balanced_circuit(c));
  }
  // Inclusion pruning, longest members first.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> order(f.size());
    for (int i = 0; i < f.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return f.members[a].length() > f.members[b].length();
    });
    for (int i : order) {
      bool removable = true;
      for (int id : f.members[i].edge_set())
        if (mult[id] < 2) removable = false;
      if (!removable) continue;
      for (int id : f.members[i].edge_set()) mult[id]--;
      f.members.erase(f.members.begin() + i);
      changed = true;
      break;
    }
  }
  return f;
}

long long family_length(const CoverFamily& f) {
  long long len = 0;
  for (const auto& m : f.members) len += m.length();
  return len;
}

}  // namespace

CoverFamily exact_scc_unsigned(const SignedMultigraph& g,
                               const std::vector<int>& raw,
                               const UnsignedLimits& lim) {
  auto edges = sorted_unique(raw);
  if (edges.empty()) return {};
  if (static_cast<int>(edges.size()) > lim.exact_edge_limit)
    throw limit_error("exact unsigned cover limited to " +
                      std::to_string(lim.exact_edge_limit) + " edges");
  check_input(g, edges);

  std::vector<Circuit> circs;
  bool full = enumerate_circuits(g, edges, [&](const Circuit& c) {
    circs.push_back(c);
    return circs.size() < lim.circuit_cap;
  });
  if (!full) throw limit_error("circuit enumeration cap exceeded");
  std::stable_sort(circs.begin(), circs.end(),
                   [](const Circuit& a, const Circuit& b) {
                     return a.length() < b.length();
                   });
  std::vector<std::vector<int>> through(g.edge_count());
  for (int i = 0; i < static_cast<int>(circs.size()); ++i)
    for (int e : circs[i].edges) through[e].push_back(i);
  for (int e : edges)
    if (through[e].empty())
      throw input_error("edge lies on no circuit (bridge)");

  CoverFamily seed = greedy_cover(g, edges);
  long long best_len = family_length(seed);
  std::vector<int> best;
  std::vector<int> cur;
  std::vector<int> mult(g.edge_count(), 0);
  long long uncovered = static_cast<long long>(edges.size());
  long long nodes = 0;

  std::function<void(long long)> rec = [&](long long len) {
    if (++nodes > lim.node_budget)
      throw limit_error("exact unsigned cover budget exceeded");
    if (uncovered == 0) {
      if (len < best_len) {
        best_len = len;
        best = cur;
      }
      return;
    }
    if (len + uncovered >= best_len) return;
    int e = -1;
    for (int id : edges)
      if (mult[id] == 0) {
        e = id;
        break;
      }
    for (int ci : through[e]) {
      const Circuit& c = circs[ci];
      cur.push_back(ci);
      long long newly = 0;
      for (int id : c.edges)
        if (mult[id]++ == 0) ++newly;
      uncovered -= newly;
      rec(len + c.length());
      uncovered += newly;
      for (int id : c.edges) --mult[id];
      cur.pop_back();
    }
  };
  rec(0);

  CoverFamily out;
  if (best.empty() && best_len == family_length(seed)) {
    out = seed;
  } else {
    for (int ci : best) out.members.push_back(balanced_circuit(circs[ci]));
  }
  canonicalize(out);
  return out;
}

UnsignedCoverReport circuit_cover_bridgeless(const SignedMultigraph& g,
                                             const std::vector<int>& raw,
                                             const UnsignedLimits& lim) {
  auto edges = sorted_unique(raw);
  UnsignedCoverReport rep;
  long long e_count = static_cast<long long>(edges.size());
  long long v_count =
      static_cast<long long>(touched_vertices(g, edges).size());
  rep.bound_53 = Rational(5, 3) * e_count;
  rep.bound_fan = e_count + v_count - 1;
  if (edges.empty()) {
    rep.backend = "exact";
    rep.bound_fan = 0;
    return rep;
  }
  check_input(g, edges);

  rep.cover = greedy_cover(g, edges);
  rep.length = family_length(rep.cover);
  rep.backend = "heuristic";
  Rational target = std::min(rep.bound_53, Rational(rep.bound_fan));
  if (Rational(rep.length) > target) {
    rep.cover = exact_scc_unsigned(g, edges, lim);
    rep.length = family_length(rep.cover);
    rep.backend = "exact";
    if (Rational(rep.length) > target)
      throw defect_error("unsigned cover exceeds its length contract");
  }

  auto stats = cover_multiplicities(g, rep.cover);
  for (int e : edges)
    if (stats.multiplicity[e] == 0)
      throw defect_error("unsigned cover left an edge uncovered");
  for (int e = 0; e < g.edge_count(); ++e)
    if (stats.multiplicity[e] > 0 &&
        !std::binary_search(edges.begin(), edges.end(), e))
      throw defect_error("unsigned cover left its edge set");
  canonicalize(rep.cover);
  return rep;
}

}  // namespace sgc
