#pragma once

#include <cstdint>

#include "sgc/graph.hpp"
#include "sgc/structure.hpp"

namespace sgc {

// Deterministic xorshift generator: identical seeds give identical instances
// on every platform.
struct Rng64 {
  uint64_t s;
  explicit Rng64(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % n); }
};

struct GenOptions {
  int n = 6;
  int m = 10;
  int negatives = 2;
  uint64_t seed = 1;
  int attempt_cap = 10000;
  bool want_s_bridgeless = false;
  bool want_g_bridgeless_even = false;
  bool allow_loops = true;
  StructureLimits limits;
};

// Connected random multigraph: random spanning tree plus extra edges, with
// `negatives` of the edges made negative (loops forced negative).
SignedMultigraph gen_connected(Rng64& rng, int n, int m, int negatives,
                               bool allow_loops);

// Rejection sampling against the requested predicates; throws a limit error
// once attempt_cap is exhausted.
SignedMultigraph generate(const GenOptions& opt);

// Connected, every degree even, even number of negative edges.
SignedMultigraph gen_eulerian_even(uint64_t seed, int n, int m);

// Spanning tree of positive edges plus `negatives` negative chords/loops.
SignedMultigraph gen_h_graph(uint64_t seed, int n, int negatives);

}  // namespace sgc
