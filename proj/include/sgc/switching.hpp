#pragma once

#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

struct NegativenessCertificate {
  int epsilon_n = 0;
  std::vector<int> optimal_switch;            // vertex set S*, sorted
  std::vector<int> resulting_negative_edges;  // sorted edge ids
};

struct SwitchLimits {
  int exact_vertex_limit = 20;   // per-component cap for negativeness_exact
  int cut_enum_vertex_limit = 14;  // per-component cap for cut enumeration
};

// Flips the sign of every edge with exactly one endpoint in s. Loops never
// flip; edge ids are preserved.
SignedMultigraph switch_graph(const SignedMultigraph& g,
                              const std::vector<int>& s);

// Exact negativeness by exhaustive search over switching classes, one fixed
// vertex per connected component. Deterministic: lexicographically smallest
// optimal S* wins ties.
NegativenessCertificate negativeness_exact(const SignedMultigraph& g,
                                           const SwitchLimits& lim = {});

// Edge-cut criterion: |E_N(G) ∩ T| <= |T|/2 for every cut T, checked by
// enumerating delta(S) per component. Equivalent to |E_N(g)| = eps_N(g).
bool verify_minimal_signature(const SignedMultigraph& g,
                              const SwitchLimits& lim = {});

// Switching-equivalent graph with |E_N| = eps_N, plus the certificate.
std::pair<SignedMultigraph, NegativenessCertificate> normalize(
    const SignedMultigraph& g, const SwitchLimits& lim = {});

// Current negative edge set of g, sorted.
std::vector<int> negative_edges(const SignedMultigraph& g);

// Connected components over all of V(g) (vertex sets, including isolated
// vertices), sorted by smallest vertex.
std::vector<std::vector<int>> vertex_components(const SignedMultigraph& g);

}  // namespace sgc
