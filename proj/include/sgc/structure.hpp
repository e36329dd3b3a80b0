#pragma once

#include <map>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/switching.hpp"

namespace sgc {

struct CutCatalog {
  std::vector<int> bridges;          // B(G), sorted edge ids
  std::vector<int> s_bridges;        // B_s(G): both sides contain negatives
  std::vector<int> g_class_bridges;  // B_g(G): some side has odd raw count
  std::map<int, std::vector<int>> partner_sets;  // negative edge -> S_G(e)
};

struct TreeCertificate {
  std::vector<int> tree_edges;             // spanning tree of G - E_N, sorted
  std::map<int, Circuit> fundamental_circuit;  // negative edge -> C_e
};

struct Contraction {
  SignedMultigraph quotient;
  std::vector<int> vertex_map;          // original vertex -> quotient vertex
  std::vector<int> quotient_edge_orig;  // quotient edge id -> original edge id
  std::vector<int> orig_edge_quotient;  // original edge id -> quotient id or -1
};

struct StructureLimits {
  int s_bridgeless_edge_limit = 24;
  size_t circuit_cap = 500000;
  SwitchLimits switching;
};

// Bridges of g (loops never qualify), computed by removal-aware low-link.
std::vector<int> bridges(const SignedMultigraph& g);

// S_G(e) = {e} plus every f such that {e,f} is a minimal 2-edge-cut.
std::vector<int> partner_set(const SignedMultigraph& g, int e);

CutCatalog classify_bridges(const SignedMultigraph& g);

// Section-2 notion: both components of g-b have even negativeness.
bool is_g_bridge(const SignedMultigraph& g, int b,
                 const SwitchLimits& lim = {});

// No bridge of g (in any component) is a g-bridge.
bool is_g_bridgeless(const SignedMultigraph& g, const SwitchLimits& lim = {});

struct SBridgelessReport {
  bool ok = false;
  int uncovered_edge = -1;               // set when !ok
  std::map<int, SignedCircuit> witness;  // per-edge containing signed circuit
};

// Definitional check: every edge lies in some signed circuit. Desk scale.
SBridgelessReport is_s_bridgeless(const SignedMultigraph& g,
                                  const StructureLimits& lim = {});

// Spanning tree of g - E_N(g) per component plus all fundamental circuits.
// Fails when g - E_N disconnects a component (non-minimal signature).
TreeCertificate tree_certificate(const SignedMultigraph& g);

// Contracts each piece (given as an edge set) to a single vertex. Edges with
// both endpoints inside one piece are deleted; parallel survivors kept.
Contraction contract(const SignedMultigraph& g,
                     const std::vector<std::vector<int>>& pieces);

// True iff the graph has any cycle (loop, parallel pair, or circuit).
bool has_cycle(const SignedMultigraph& g);

}  // namespace sgc
