#pragma once

#include <functional>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

// Connected components of the subgraph spanned by `edge_ids`. Each component
// is returned as a sorted list of edge ids; isolated vertices do not appear.
std::vector<std::vector<int>> edge_components(const SignedMultigraph& g,
                                              const std::vector<int>& edge_ids);

// Vertices touched by an edge set, sorted.
std::vector<int> touched_vertices(const SignedMultigraph& g,
                                  const std::vector<int>& edge_ids);

// Enumerates every circuit of the subgraph spanned by `edge_ids`, each once.
// The callback may return false to stop early. Returns false iff stopped.
bool enumerate_circuits(const SignedMultigraph& g,
                        const std::vector<int>& edge_ids,
                        const std::function<bool(const Circuit&)>& cb);

// Closed eulerian trail of a connected even-degree edge set, as the edge
// sequence; verts[i] is the tail of edges[i]. Deterministic: starts at the
// smallest touched vertex, follows smallest available edge id.
struct Trail {
  std::vector<int> verts;
  std::vector<int> edges;
};
Trail eulerian_trail(const SignedMultigraph& g,
                     const std::vector<int>& edge_ids);

// Splits an even-degree edge set into edge-disjoint circuits (trail walk,
// popping a circuit whenever a vertex repeats).
std::vector<Circuit> circuit_decomposition(const SignedMultigraph& g,
                                           const std::vector<int>& edge_ids);

// BFS shortest path between two vertices inside an edge set; ties broken by
// smallest predecessor vertex / edge id. Returns edge ids in order plus the
// vertex sequence. Empty result with found=false when disconnected.
struct PathResult {
  bool found = false;
  std::vector<int> edges;
  std::vector<int> verts;  // edges.size() + 1 when found (or just {src})
};
PathResult bfs_path(const SignedMultigraph& g, const std::vector<int>& edge_ids,
                    int from, int to);

// Shortest path from `from` to any vertex in `targets` (as bfs_path).
PathResult bfs_path_to_set(const SignedMultigraph& g,
                           const std::vector<int>& edge_ids, int from,
                           const std::vector<int>& targets);

// Enumerates simple paths (edge sequences) between set A and set B whose
// interior vertices avoid `forbidden` and A and B themselves; used for
// barbell searches at desk scale. Callback gets (edges, verts).
bool enumerate_connecting_paths(
    const SignedMultigraph& g, const std::vector<int>& edge_ids,
    const std::vector<int>& from_set, const std::vector<int>& to_set,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>&
        cb);

}  // namespace sgc
