#pragma once

#include <utility>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/structure.hpp"

namespace sgc {

// Certificate that `host` (an edge-id set of a parent graph) is a generalized
// barbell with the given eulerian pieces. Quotient and parity data are filled
// in by validate_gbarbell.
struct GeneralizedBarbellCert {
  std::vector<int> host;                 // sorted edge ids
  std::vector<std::vector<int>> pieces;  // edge-id sets, vertex-disjoint

  // Filled by validate_gbarbell: per quotient vertex (piece index, or -1 for
  // a plain vertex paired with its id), the pair (|E_N(B_x)|, |delta_H(x)|).
  struct ParityEntry {
    int piece = -1;     // index into pieces, or -1
    int vertex = -1;    // plain host vertex when piece == -1
    int negatives = 0;  // |E_N(B_x)|
    int boundary = 0;   // |delta_H(V(B_x))|
  };
  std::vector<ParityEntry> parity_log;
};

Diagnosis validate_gbarbell(const SignedMultigraph& g,
                            GeneralizedBarbellCert& cert);

// Signed circuit double cover of a connected eulerian edge set with an even
// number of negative edges; every edge of b gets multiplicity exactly 2.
CoverFamily eulerian_scdc(const SignedMultigraph& g, const std::vector<int>& b);

// Signed circuit double cover of a generalized barbell host.
CoverFamily gbarbell_scdc(const SignedMultigraph& g,
                          GeneralizedBarbellCert cert);

// Cover of a generalized barbell whose pieces are all circuits: leaf-piece
// edges exactly once, other piece edges once or twice, non-piece edges at
// most once.
CoverFamily gcycle_cover(const SignedMultigraph& g,
                         GeneralizedBarbellCert cert);

// Outcome of one_two_cover: either a decomposition into balanced circuits or
// a {1,2}-cover with two edge-disjoint once-covered unbalanced circuits.
struct OneTwoCover {
  bool is_decomposition = false;
  CoverFamily family;
  Circuit spare1, spare2;  // meaningful only when !is_decomposition
};

OneTwoCover one_two_cover(const SignedMultigraph& g,
                          GeneralizedBarbellCert cert);

// Barbell surgery: removes the designated loop circuit from each of two
// barbells and rejoins the remainders, either at the loops' shared vertex or
// through the edge uv whose deletion created the loops.
SignedCircuit splice_barbells_at_vertex(const SignedCircuit& a, int loop_a,
                                        const SignedCircuit& b, int loop_b,
                                        int v);
SignedCircuit splice_barbells_through_edge(const SignedCircuit& a, int loop_a,
                                           const SignedCircuit& b, int loop_b,
                                           int e);

}  // namespace sgc
