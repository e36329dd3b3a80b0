#include "sgc/gen.hpp"

#include <string>

#include "sgc/switching.hpp"

namespace sgc {

SignedMultigraph gen_connected(Rng64& rng, int n, int m, int negatives,
                               bool allow_loops) {
  if (n < 1) throw input_error("need at least one vertex");
  if (m < n - 1) m = n - 1;
  SignedMultigraph g;
  g.n = n;
  for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v, 1);
  for (int i = n - 1; i < m; ++i) {
    int u = rng.below(n);
    int v = rng.below(n);
    if (u == v && (!allow_loops || n == 1)) {
      if (n == 1) {
        // only loops exist on one vertex
      } else {
        v = (u + 1) % n;
      }
    }
    g.add_edge(u, v, 1);
  }
  int placed = 0;
  for (int tries = 0; placed < negatives && tries < 20 * m + 20; ++tries) {
    int e = rng.below(g.edge_count());
    if (g.edges[e].sign < 0) continue;
    g.edges[e].sign = -1;
    ++placed;
  }
  // Loops that stayed positive are legal; the pipeline covers them directly.
  return g;
}

SignedMultigraph generate(const GenOptions& opt) {
  Rng64 rng(opt.seed);
  for (int attempt = 0; attempt < opt.attempt_cap; ++attempt) {
    SignedMultigraph g =
        gen_connected(rng, opt.n, opt.m, opt.negatives, opt.allow_loops);
    if (opt.want_s_bridgeless || opt.want_g_bridgeless_even) {
      auto cert = negativeness_exact(g, opt.limits.switching);
      if (cert.epsilon_n < 2) continue;
      if (opt.want_g_bridgeless_even) {
        if (cert.epsilon_n % 2 != 0) continue;
        if (!is_g_bridgeless(g, opt.limits.switching)) continue;
      }
      if (!is_s_bridgeless(g, opt.limits).ok) continue;
    }
    return g;
  }
  throw limit_error("instance generation failed after " +
                    std::to_string(opt.attempt_cap) + " attempts");
}

SignedMultigraph gen_eulerian_even(uint64_t seed, int n, int m) {
  Rng64 rng(seed);
  SignedMultigraph g = gen_connected(rng, n, m, 0, true);
  // Fix parities: pair up the odd-degree vertices.
  std::vector<int> deg(g.n, 0);
  for (const auto& e : g.edges) {
    deg[e.u]++;
    deg[e.v]++;
  }
  std::vector<int> odd;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] % 2) odd.push_back(v);
  for (size_t i = 0; i + 1 < odd.size(); i += 2)
    g.add_edge(odd[i], odd[i + 1], 1);
  // Random signs with even negative count.
  int flips = 0;
  for (auto& e : g.edges)
    if (rng.below(3) == 0) {
      e.sign = -1;
      ++flips;
    }
  if (flips % 2) {
    for (auto& e : g.edges)
      if (e.sign < 0) {
        e.sign = 1;
        break;
      }
  }
  return g;
}

SignedMultigraph gen_h_graph(uint64_t seed, int n, int negatives) {
  Rng64 rng(seed);
  if (n < 1) throw input_error("need at least one vertex");
  SignedMultigraph g;
  g.n = n;
  for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v, 1);
  for (int i = 0; i < negatives; ++i) {
    int u = rng.below(n);
    // every third chord is a loop to exercise the loop constructions
    int v = rng.below(3) == 0 ? u : rng.below(n);
    g.add_edge(u, v, -1);
  }
  return g;
}

}  // namespace sgc
