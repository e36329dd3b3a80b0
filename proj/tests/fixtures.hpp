#pragma once

#include <cstdint>

#include "sgc/graph.hpp"

// Named desk instances used across the suites.
namespace fixtures {

// Two negative loops joined by one positive edge.
inline sgc::SignedMultigraph l2p1() {
  sgc::SignedMultigraph g;
  g.n = 2;
  g.add_edge(0, 0, -1);
  g.add_edge(1, 1, -1);
  g.add_edge(0, 1, 1);
  return g;
}

// Three parallel edges, exactly one negative.
inline sgc::SignedMultigraph theta_minus() {
  sgc::SignedMultigraph g;
  g.n = 2;
  g.add_edge(0, 1, 1);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 1, -1);
  return g;
}

// Two triangles sharing vertex 2, one negative edge per triangle.
inline sgc::SignedMultigraph bowtie() {
  sgc::SignedMultigraph g;
  g.n = 5;
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 0, -1);
  g.add_edge(2, 3, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(4, 2, -1);
  return g;
}

// Two triangles joined by a 2-edge path, one negative edge per triangle.
inline sgc::SignedMultigraph two_tri_path() {
  sgc::SignedMultigraph g;
  g.n = 7;
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 0, -1);
  g.add_edge(2, 3, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(4, 5, 1);
  g.add_edge(5, 6, 1);
  g.add_edge(6, 4, -1);
  return g;
}

inline sgc::SignedMultigraph all_negative_k4() {
  sgc::SignedMultigraph g;
  g.n = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v, -1);
  return g;
}

inline sgc::SignedMultigraph triangle(int negatives = 0) {
  sgc::SignedMultigraph g;
  g.n = 3;
  g.add_edge(0, 1, negatives >= 1 ? -1 : 1);
  g.add_edge(1, 2, negatives >= 2 ? -1 : 1);
  g.add_edge(2, 0, negatives >= 3 ? -1 : 1);
  return g;
}

inline sgc::SignedMultigraph positive_cycle(int k) {
  sgc::SignedMultigraph g;
  g.n = k;
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k, 1);
  return g;
}

inline sgc::SignedMultigraph petersen() {
  sgc::SignedMultigraph g;
  g.n = 10;
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5, 1);   // outer
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5, 1);  // star
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i, 1);         // spokes
  return g;
}

// Small deterministic rng for property tests.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % n); }
};

// Random connected signed multigraph: spanning tree plus extra edges.
inline sgc::SignedMultigraph random_connected(Rng& rng, int n, int extra,
                                              int negatives) {
  sgc::SignedMultigraph g;
  g.n = n;
  for (int v = 1; v < n; ++v) g.add_edge(rng.below(v), v, 1);
  for (int i = 0; i < extra; ++i) {
    int u = rng.below(n), v = rng.below(n);
    g.add_edge(u, v, 1);
  }
  for (int i = 0; i < negatives && g.edge_count() > 0; ++i)
    g.edges[rng.below(g.edge_count())].sign = -1;
  return g;
}

}  // namespace fixtures
