#pragma once

#include <vector>

#include "sgc/barbell.hpp"
#include "sgc/graph.hpp"
#include "sgc/structure.hpp"

namespace sgc {

// Output of pair_decomposition: E(G) = g1 ∪ g2 where g1 is all-positive and
// bridgeless, g2 minus the negative edges is acyclic, and f2 covers every
// edge of g2 with multiplicity in {1..k}.
struct PairDecomposition {
  std::vector<int> g1_edges;  // sorted
  std::vector<int> g2_edges;  // sorted
  CoverFamily f2;
  int k = 3;
};

// Generalized barbell inside h (an edge set whose positive part is a spanning
// tree of its vertices and whose negative part has even size >= 2). The host
// contains every bridge of h with odd-negative sides and every S_h(e).
GeneralizedBarbellCert build_gbarbell_in_H(const SignedMultigraph& g,
                                           const std::vector<int>& h_edges);

// A signed circuit of the bridgeless graph h containing all of S_h(e).
SignedCircuit signed_circuit_through_S(const SignedMultigraph& g,
                                       const std::vector<int>& h_edges, int e);

// {0,1,2,3}-cover of h: every edge of B_s(h) ∪ (∪_e S_h(e)) is covered at
// least once, every negative loop exactly twice, no edge more than 3 times,
// and no edge outside h at all.
CoverFamily cover_0123(const SignedMultigraph& g,
                       const std::vector<int>& h_edges);

// Splits an s-bridgeless graph with minimal signature and |E_N| >= 2 into the
// positive bridgeless remainder g1 and a covered part g2 with its family.
PairDecomposition pair_decomposition(const SignedMultigraph& g,
                                     const StructureLimits& lim = {});

}  // namespace sgc
