#include "sgc/cycle_tools.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace sgc {

namespace {

// Adjacency restricted to an edge subset: vertex -> (edge id, other end),
// sorted by edge id. A loop contributes a single entry at its vertex.
std::map<int, std::vector<std::pair<int, int>>> make_adjacency(
    const SignedMultigraph& g, const std::vector<int>& edge_ids) {
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (int e : edge_ids) {
    const auto& ed = g.edge(e);
    if (ed.u == ed.v) {
      adj[ed.u].push_back({e, ed.u});
    } else {
      adj[ed.u].push_back({e, ed.v});
      adj[ed.v].push_back({e, ed.u});
    }
  }
  for (auto& [v, lst] : adj) std::sort(lst.begin(), lst.end());
  return adj;
}

}  // namespace

std::vector<std::vector<int>> edge_components(
    const SignedMultigraph& g, const std::vector<int>& edge_ids) {
  auto adj = make_adjacency(g, edge_ids);
  std::set<int> unseen;
  for (auto& [v, _] : adj) unseen.insert(v);
  std::vector<std::vector<int>> comps;
  while (!unseen.empty()) {
    int start = *unseen.begin();
    std::vector<int> stack = {start};
    unseen.erase(start);
    std::set<int> comp_edges;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [e, w] : adj[v]) {
        comp_edges.insert(e);
        if (unseen.count(w)) {
          unseen.erase(w);
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::vector<int>(comp_edges.begin(), comp_edges.end()));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<int> touched_vertices(const SignedMultigraph& g,
                                  const std::vector<int>& edge_ids) {
  std::set<int> vs;
  for (int e : edge_ids) {
    vs.insert(g.edge(e).u);
    vs.insert(g.edge(e).v);
  }
  return std::vector<int>(vs.begin(), vs.end());
}

namespace {

struct CircuitEnum {
  const SignedMultigraph& g;
  const std::map<int, std::vector<std::pair<int, int>>>& adj;
  const std::function<bool(const Circuit&)>& cb;
  int anchor;       // smallest edge id in every circuit emitted
  int target;       // close the circuit here
  std::vector<int> verts;
  std::vector<int> edges;
  std::set<int> visited;
  bool keep_going = true;

  void dfs(int v) {
    if (!keep_going) return;
    auto it = adj.find(v);
    if (it == adj.end()) return;
    for (auto [e, w] : it->second) {
      if (!keep_going) return;
      if (e <= anchor) continue;
      if (w == v) continue;  // loops only form the 1-edge circuit
      if (w == target) {
        Circuit c;
        c.verts = verts;
        c.edges = edges;
        c.edges.push_back(e);
        // anchor edge closes target -> verts.front()
        keep_going = cb(c);
        continue;
      }
      if (visited.count(w)) continue;
      visited.insert(w);
      verts.push_back(w);
      edges.push_back(e);
      dfs(w);
      edges.pop_back();
      verts.pop_back();
      visited.erase(w);
    }
  }
};

}  // namespace

bool enumerate_circuits(const SignedMultigraph& g,
                        const std::vector<int>& edge_ids,
                        const std::function<bool(const Circuit&)>& cb) {
  auto adj = make_adjacency(g, edge_ids);
  std::vector<int> sorted_ids = edge_ids;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  for (int a : sorted_ids) {
    const auto& ed = g.edge(a);
    if (ed.u == ed.v) {
      Circuit c;
      c.verts = {ed.u};
      c.edges = {a};
      if (!cb(c)) return false;
      continue;
    }
    // Circuits whose smallest edge is `a`: path from v back to u over larger
    // edge ids. Anchor traversal order: u -> (a) -> v -> ... -> u.
    CircuitEnum en{g, adj, cb, a, ed.u, {ed.u, ed.v}, {a}, {ed.u, ed.v}};
    en.dfs(ed.v);
    if (!en.keep_going) return false;
  }
  return true;
}

Trail eulerian_trail(const SignedMultigraph& g,
                     const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) throw input_error("eulerian trail of empty edge set");
  auto adj = make_adjacency(g, edge_ids);
  std::map<int, int> deg;
  for (int e : edge_ids) {
    deg[g.edge(e).u] += 1;
    deg[g.edge(e).v] += 1;
  }
  for (auto& [v, d] : deg)
    if (d % 2 != 0) throw input_error("odd degree vertex in eulerian edge set");

  std::map<int, size_t> ptr;
  std::vector<char> used(g.edge_count(), 0);
  int start = adj.begin()->first;
  std::vector<std::pair<int, int>> out;  // (vertex, edge used to arrive)
  std::vector<std::pair<int, int>> stack = {{start, -1}};
  while (!stack.empty()) {
    auto [v, in_e] = stack.back();
    auto& lst = adj[v];
    size_t& p = ptr[v];
    while (p < lst.size() && used[lst[p].first]) ++p;
    if (p == lst.size()) {
      out.push_back({v, in_e});
      stack.pop_back();
    } else {
      auto [e, w] = lst[p];
      used[e] = 1;
      stack.push_back({w, e});
    }
  }
  std::reverse(out.begin(), out.end());
  if (out.size() != edge_ids.size() + 1)
    throw input_error("edge set is not connected");
  Trail t;
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    t.verts.push_back(out[i].first);
    t.edges.push_back(out[i + 1].second);
  }
  return t;
}

std::vector<Circuit> circuit_decomposition(const SignedMultigraph& g,
                                           const std::vector<int>& edge_ids) {
  Trail t = eulerian_trail(g, edge_ids);
  const int m = static_cast<int>(t.edges.size());
  std::vector<Circuit> out;
  std::vector<int> vs = {t.verts[0]};
  std::vector<int> es;
  std::map<int, int> pos = {{t.verts[0], 0}};
  for (int i = 0; i < m; ++i) {
    int e = t.edges[i];
    int w = (i + 1 < m) ? t.verts[i + 1] : t.verts[0];
    auto it = pos.find(w);
    if (it != pos.end()) {
      int p = it->second;
      Circuit c;
      c.verts.assign(vs.begin() + p, vs.end());
      c.edges.assign(es.begin() + p, es.end());
      c.edges.push_back(e);
      out.push_back(std::move(c));
      for (size_t j = p + 1; j < vs.size(); ++j) pos.erase(vs[j]);
      vs.resize(p + 1);
      es.resize(p);
    } else {
      vs.push_back(w);
      pos[w] = static_cast<int>(vs.size()) - 1;
      es.push_back(e);
    }
  }
  return out;
}

PathResult bfs_path(const SignedMultigraph& g, const std::vector<int>& edge_ids,
                    int from, int to) {
  return bfs_path_to_set(g, edge_ids, from, {to});
}

PathResult bfs_path_to_set(const SignedMultigraph& g,
                           const std::vector<int>& edge_ids, int from,
                           const std::vector<int>& targets) {
  PathResult r;
  std::set<int> tset(targets.begin(), targets.end());
  if (tset.count(from)) {
    r.found = true;
    r.verts = {from};
    return r;
  }
  auto adj = make_adjacency(g, edge_ids);
  std::map<int, std::pair<int, int>> parent;  // vertex -> (prev vertex, edge)
  std::queue<int> q;
  q.push(from);
  parent[from] = {-1, -1};
  int hit = -1;
  while (!q.empty() && hit < 0) {
    int v = q.front();
    q.pop();
    for (auto [e, w] : adj[v]) {
      if (parent.count(w)) continue;
      parent[w] = {v, e};
      if (tset.count(w)) {
        hit = w;
        break;
      }
      q.push(w);
    }
  }
  if (hit < 0) return r;
  r.found = true;
  int cur = hit;
  while (cur != from) {
    auto [pv, pe] = parent[cur];
    r.verts.push_back(cur);
    r.edges.push_back(pe);
    cur = pv;
  }
  r.verts.push_back(from);
  std::reverse(r.verts.begin(), r.verts.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

namespace {

struct PathEnum {
  const std::map<int, std::vector<std::pair<int, int>>>& adj;
  const std::set<int>& from_set;
  const std::set<int>& to_set;
  const std::function<bool(const std::vector<int>&,
                           const std::vector<int>&)>& cb;
  std::vector<int> verts;
  std::vector<int> edges;
  std::set<int> visited;
  bool keep_going = true;

  void dfs(int v) {
    if (!keep_going) return;
    auto it = adj.find(v);
    if (it == adj.end()) return;
    for (auto [e, w] : it->second) {
      if (!keep_going) return;
      if (w == v) continue;
      if (to_set.count(w)) {
        verts.push_back(w);
        edges.push_back(e);
        keep_going = cb(edges, verts);
        verts.pop_back();
        edges.pop_back();
        continue;
      }
      if (from_set.count(w) || visited.count(w)) continue;
      visited.insert(w);
      verts.push_back(w);
      edges.push_back(e);
      dfs(w);
      edges.pop_back();
      verts.pop_back();
      visited.erase(w);
    }
  }
};

}  // namespace

bool enumerate_connecting_paths(
    const SignedMultigraph& g, const std::vector<int>& edge_ids,
    const std::vector<int>& from_set, const std::vector<int>& to_set,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>&
        cb) {
  auto adj = make_adjacency(g, edge_ids);
  std::set<int> fs(from_set.begin(), from_set.end());
  std::set<int> ts(to_set.begin(), to_set.end());
  for (int a : fs) {
    PathEnum en{adj, fs, ts, cb, {a}, {}, {a}};
    en.dfs(a);
    if (!en.keep_going) return false;
  }
  return true;
}

}  // namespace sgc
