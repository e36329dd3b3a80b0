#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgc {

// Error categories surfaced through the CLI exit codes.
enum class ErrorKind { Input, Limit, Defect };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) {
  return Error(ErrorKind::Input, what);
}
inline Error limit_error(const std::string& what) {
  return Error(ErrorKind::Limit, what);
}
inline Error defect_error(const std::string& what) {
  return Error(ErrorKind::Defect, what);
}

// Undirected signed multigraph. Vertices are 0..n-1, edge ids are stable
// indices 0..m-1. Loops (u == v) and parallel edges are allowed.
struct SignedMultigraph {
  struct Edge {
    int u = 0;
    int v = 0;
    int sign = 1;  // +1 or -1
  };

  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  const Edge& edge(int id) const {
    if (id < 0 || id >= edge_count())
      throw input_error("unknown edge id " + std::to_string(id));
    return edges[id];
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n)
      throw input_error("vertex id out of range: " + std::to_string(v));
  }

  int add_edge(int u, int v, int sign) {
    check_vertex(u);
    check_vertex(v);
    if (sign != 1 && sign != -1) throw input_error("sign must be +1 or -1");
    edges.push_back({u, v, sign});
    return edge_count() - 1;
  }

  bool is_loop(int id) const { return edge(id).u == edge(id).v; }

  // Other endpoint when entering edge `id` from vertex `from`.
  int other_end(int id, int from) const {
    const Edge& e = edge(id);
    return e.u == from ? e.v : e.u;
  }
};

// A circuit stored as its closed traversal: edge i joins verts[i] and
// verts[(i+1) % k]. A single loop is verts={u}, edges={loop}.
struct Circuit {
  std::vector<int> verts;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
};

// Checks the traversal is a genuine circuit of g (distinct edges, each edge
// joins its two consecutive vertices, no repeated vertex).
bool is_valid_circuit(const SignedMultigraph& g, const Circuit& c,
                      std::string* why = nullptr);

// Rebuilds a Circuit from an edge set, or fails if the set is not a single
// circuit (connected, all degrees exactly 2).
Circuit make_circuit_from_edges(const SignedMultigraph& g,
                                const std::vector<int>& edge_ids);

struct SignedCircuit {
  enum class Kind { Balanced, ShortBarbell, LongBarbell };

  Kind kind = Kind::Balanced;
  Circuit c1;               // Balanced: the circuit; barbells: first circuit
  Circuit c2;               // barbells: second circuit
  int joint = -1;           // ShortBarbell: the shared vertex
  std::vector<int> path_edges;  // LongBarbell: connecting path, in order
  std::vector<int> path_verts;  // LongBarbell: path vertices, |edges|+1

  std::vector<int> edge_set() const;  // sorted, unique
  int length() const { return static_cast<int>(edge_set().size()); }
};

SignedCircuit balanced_circuit(Circuit c);
SignedCircuit short_barbell(Circuit c1, Circuit c2, int joint);
SignedCircuit long_barbell(Circuit c1, Circuit c2,
                           std::vector<int> path_edges,
                           std::vector<int> path_verts);

struct CoverFamily {
  std::vector<SignedCircuit> members;

  int size() const { return static_cast<int>(members.size()); }
};

struct CoverStats {
  std::vector<int> multiplicity;   // indexed by edge id
  long long length = 0;            // sum of multiplicities
  std::vector<int> uncovered;      // edges with multiplicity 0
};

// --- sg-core operations ---

int negative_count(const SignedMultigraph& g, const std::vector<int>& edge_ids);

bool is_balanced(const SignedMultigraph& g, const Circuit& c);

// Diagnostic validation of a signed circuit against g.
struct Diagnosis {
  bool ok = true;
  std::string reason;
};
Diagnosis validate_signed_circuit(const SignedMultigraph& g,
                                  const SignedCircuit& sc);

// Multiplicity map and total length; throws on an invalid member.
CoverStats cover_multiplicities(const SignedMultigraph& g,
                                const CoverFamily& f);

// Canonical member order for deterministic output: sort by smallest edge id.
void canonicalize(CoverFamily& f);

}  // namespace sgc
