#pragma once

#include <string>
#include <vector>

#include "sgc/decomp.hpp"
#include "sgc/graph.hpp"
#include "sgc/structure.hpp"
#include "sgc/unsigned_cover.hpp"

namespace sgc {

struct BoundReport {
  long long E = 0;
  long long V = 0;
  long long eps_n = 0;
  int k = 3;
  Rational z1, z2;
  Rational bound_general;   // |E| + 3|V| + z1
  Rational bound_even;      // |E| + 2|V| + z2
  Rational corollary_bound; // 14/3 |E| - 5/3 eps - 4
  Rational chained_bound;   // min of the two k-parameterized expressions
};

BoundReport theorem_bounds(long long E, long long V, long long eps_n, int k);

struct EngineLimits {
  StructureLimits structure;
  UnsignedLimits unsigned_cover;
  int oracle_edge_limit = 14;
  size_t oracle_candidate_cap = 200000;
};

// Inclusion-minimal subfamily of f still covering g2; asserts the pruned
// length stays within k|E(g2)| - 2(k-1) when |E_N(g2)| >= 2 and g2 has no
// positive loops.
CoverFamily prune_cover(const SignedMultigraph& g,
                        const std::vector<int>& g2_edges, CoverFamily f,
                        int k);

struct UpperCoverResult {
  CoverFamily cover;          // full cover, positive loops included
  BoundReport bounds;         // for the loop-stripped graph
  long long length = 0;       // total cover length
  long long stripped_length = 0;  // length minus the positive-loop members
  int positive_loops = 0;
  int k = 0;  // 2 or 3; 0 when eps_n = 0 (pure unsigned delegation)
};

// Full upper-bound pipeline: strip positive loops, normalize the signature, split
// via pair_decomposition, cover G1 by unsigned circuits and G2 by the pruned
// family, and check every bound with exact rationals.
UpperCoverResult scc_upper_cover(const SignedMultigraph& g,
                                 const EngineLimits& lim = {});

struct VerifyReport {
  bool valid = false;
  std::string reason;
  CoverStats stats;
};

// Checks every member and the multiplicity profile; `allowed` empty means
// any multiplicity >= 1, otherwise multiplicities must belong to it.
VerifyReport verify_cover(const SignedMultigraph& g, const CoverFamily& f,
                          const std::vector<int>& allowed = {});

struct ExactSignedResult {
  bool has_cover = false;
  CoverFamily cover;
  long long length = 0;
};

// Minimum-length signed circuit cover by branch and bound over every
// balanced circuit, short barbell, and long barbell of g.
ExactSignedResult exact_scc_signed(const SignedMultigraph& g,
                                   const EngineLimits& lim = {});

}  // namespace sgc
