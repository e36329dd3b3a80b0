#include "sgc/switching.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sgc {

SignedMultigraph switch_graph(const SignedMultigraph& g,
                              const std::vector<int>& s) {
  for (int v : s) g.check_vertex(v);
  std::set<int> in_s(s.begin(), s.end());
  SignedMultigraph out = g;
  for (auto& e : out.edges) {
    if (e.u == e.v) continue;
    if (in_s.count(e.u) != in_s.count(e.v)) e.sign = -e.sign;
  }
  return out;
}

std::vector<int> negative_edges(const SignedMultigraph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges[e].sign == -1) out.push_back(e);
  return out;
}

std::vector<std::vector<int>> vertex_components(const SignedMultigraph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(comps.size());
    comps.push_back({});
    std::vector<int> stack = {s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comps[id].push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(comps[id].begin(), comps[id].end());
  }
  return comps;
}

namespace {

struct ComponentSearch {
  int best_count = 0;
  std::vector<int> best_switch;  // sorted vertex ids
};

// Gray-code walk over subsets of comp_verts[1..], vertex comp_verts[0] fixed
// outside S.
ComponentSearch search_component(const SignedMultigraph& g,
                                 const std::vector<int>& comp_verts) {
  const int k = static_cast<int>(comp_verts.size());
  // incident non-loop edges per local vertex index
  std::vector<std::vector<int>> inc(k);
  std::vector<int> local(g.n, -1);
  for (int i = 0; i < k; ++i) local[comp_verts[i]] = i;
  std::vector<int> cur_sign(g.edge_count(), 0);
  int base_count = 0;
  std::vector<int> comp_edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[e];
    if (local[ed.u] < 0) continue;
    comp_edges.push_back(e);
    cur_sign[e] = ed.sign;
    if (ed.sign == -1) ++base_count;
    if (ed.u != ed.v) {
      inc[local[ed.u]].push_back(e);
      inc[local[ed.v]].push_back(e);
    }
  }

  int count = base_count;
  ComponentSearch best;
  best.best_count = count;
  best.best_switch = {};
  if (k <= 1) return best;

  auto materialize = [&](unsigned mask) {
    std::vector<int> s;
    for (int b = 0; b < k - 1; ++b)
      if (mask & (1u << b)) s.push_back(comp_verts[b + 1]);
    return s;
  };

  unsigned mask = 0;
  const unsigned total = 1u << (k - 1);
  for (unsigned i = 1; i < total; ++i) {
    int bit = std::countr_zero(i);
    mask ^= 1u << bit;
    for (int e : inc[bit + 1]) {
      count += (cur_sign[e] == -1) ? -1 : 1;
      cur_sign[e] = -cur_sign[e];
    }
    if (count < best.best_count) {
      best.best_count = count;
      best.best_switch = materialize(mask);
    } else if (count == best.best_count) {
      auto s = materialize(mask);
      if (s < best.best_switch) best.best_switch = std::move(s);
    }
  }
  return best;
}

}  // namespace

NegativenessCertificate negativeness_exact(const SignedMultigraph& g,
                                           const SwitchLimits& lim) {
  NegativenessCertificate cert;
  std::vector<int> full_switch;
  for (const auto& comp : vertex_components(g)) {
    if (static_cast<int>(comp.size()) > lim.exact_vertex_limit)
      throw limit_error("exact search refused: component has " +
                        std::to_string(comp.size()) + " vertices (limit " +
                        std::to_string(lim.exact_vertex_limit) + ")");
    auto r = search_component(g, comp);
    cert.epsilon_n += r.best_count;
    full_switch.insert(full_switch.end(), r.best_switch.begin(),
                       r.best_switch.end());
  }
  std::sort(full_switch.begin(), full_switch.end());
  cert.optimal_switch = full_switch;
  cert.resulting_negative_edges = negative_edges(switch_graph(g, full_switch));
  return cert;
}

bool verify_minimal_signature(const SignedMultigraph& g,
                              const SwitchLimits& lim) {
  for (const auto& comp : vertex_components(g)) {
    const int k = static_cast<int>(comp.size());
    if (k > lim.cut_enum_vertex_limit)
      throw limit_error("cut enumeration refused: component has " +
                        std::to_string(k) + " vertices (limit " +
                        std::to_string(lim.cut_enum_vertex_limit) + ")");
    if (k <= 1) continue;
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < k; ++i) local[comp[i]] = i;
    std::vector<std::pair<int, int>> span;  // (local u, local v) per non-loop
    std::vector<int> sign;
    for (const auto& e : g.edges) {
      if (local[e.u] < 0 || e.u == e.v) continue;
      span.push_back({local[e.u], local[e.v]});
      sign.push_back(e.sign);
    }
    // delta(S) == delta(complement): fix comp[0] outside S.
    const unsigned total = 1u << (k - 1);
    for (unsigned mask = 1; mask < total; ++mask) {
      int cut = 0, neg = 0;
      for (size_t i = 0; i < span.size(); ++i) {
        bool a = span[i].first > 0 && (mask >> (span[i].first - 1)) & 1u;
        bool b = span[i].second > 0 && (mask >> (span[i].second - 1)) & 1u;
        if (a != b) {
          ++cut;
          if (sign[i] == -1) ++neg;
        }
      }
      if (2 * neg > cut) return false;
    }
  }
  return true;
}

std::pair<SignedMultigraph, NegativenessCertificate> normalize(
    const SignedMultigraph& g, const SwitchLimits& lim) {
  auto cert = negativeness_exact(g, lim);
  return {switch_graph(g, cert.optimal_switch), cert};
}

}  // namespace sgc
