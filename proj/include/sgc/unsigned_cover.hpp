#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

using Rational = boost::rational<long long>;

struct UnsignedLimits {
  int exact_edge_limit = 18;
  size_t circuit_cap = 500000;
  long long node_budget = 20000000;
};

struct UnsignedCoverReport {
  CoverFamily cover;  // all members balanced circuits inside the edge set
  long long length = 0;
  Rational bound_53;      // 5/3 |E|
  long long bound_fan = 0;  // |E| + |V| - 1
  std::string backend;    // "heuristic" or "exact"
};

// Circuit cover of a bridgeless all-positive edge set with length at most
// min(5/3 |E|, |E| + |V| - 1): greedy shortest circuits plus pruning, with an
// exact fallback when the greedy result misses the bound.
UnsignedCoverReport circuit_cover_bridgeless(const SignedMultigraph& g,
                                             const std::vector<int>& edges,
                                             const UnsignedLimits& lim = {});

// Minimum-length circuit cover by branch and bound over all circuits.
CoverFamily exact_scc_unsigned(const SignedMultigraph& g,
                               const std::vector<int>& edges,
                               const UnsignedLimits& lim = {});

}  // namespace sgc
