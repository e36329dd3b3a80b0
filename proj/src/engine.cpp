#include "sgc/engine.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "sgc/barbell.hpp"
#include "sgc/cycle_tools.hpp"
#include "sgc/switching.hpp"

namespace sgc {
namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

long long family_length(const CoverFamily& f) {
  long long len = 0;
  for (const auto& m : f.members) len += m.length();
  return len;
}

}  // namespace

BoundReport theorem_bounds(long long E, long long V, long long eps_n, int k) {
  if (eps_n < 0) throw input_error("negativeness must be nonnegative");
  if (k != 2 && k != 3) throw input_error("k must be 2 or 3");
  BoundReport r;
  r.E = E;
  r.V = V;
  r.eps_n = eps_n;
  r.k = k;
  r.z1 = std::min(Rational(2, 3) * E + Rational(4, 3) * eps_n - 7,
                  Rational(V + 2 * eps_n - 8));
  r.bound_general = Rational(E + 3 * V) + r.z1;
  r.z2 = std::min(Rational(2, 3) * E + Rational(1, 3) * eps_n - 4,
                  Rational(V + eps_n - 5));
  r.bound_even = Rational(E + 2 * V) + r.z2;
  r.corollary_bound =
      Rational(14, 3) * E - Rational(5, 3) * eps_n - 4;
  r.chained_bound = std::min(
      Rational(5, 3) * E + Rational(k) * V + (Rational(k) - Rational(5, 3)) * eps_n -
          (3 * k - 2),
      Rational(E + (k + 1) * V + (k - 1) * eps_n - (3 * k - 1)));
  const Rational& expected = (k == 3) ? r.bound_general : r.bound_even;
  if (r.chained_bound != expected)
    throw defect_error("chained bound identity failed");
  return r;
}

CoverFamily prune_cover(const SignedMultigraph& g,
                        const std::vector<int>& g2_edges, CoverFamily f,
                        int k) {
  auto g2 = sorted_unique(g2_edges);
  auto stats = cover_multiplicities(g, f);
  for (int e : g2)
    if (stats.multiplicity[e] == 0)
      throw input_error("family does not cover g2");
  std::vector<int> mult = stats.multiplicity;

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> order(f.size());
    for (int i = 0; i < f.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return f.members[a].length() > f.members[b].length();
    });
    for (int i : order) {
      bool removable = true;
      for (int id : f.members[i].edge_set())
        if (std::binary_search(g2.begin(), g2.end(), id) && mult[id] < 2)
          removable = false;
      if (!removable) continue;
      for (int id : f.members[i].edge_set()) mult[id]--;
      f.members.erase(f.members.begin() + i);
      changed = true;
      break;
    }
  }

  int negs = 0;
  bool pos_loop = false;
  for (int e : g2) {
    if (g.edge(e).sign < 0) ++negs;
    if (g.edge(e).sign > 0 && g.is_loop(e)) pos_loop = true;
  }
  if (negs >= 2 && !pos_loop) {
    long long cap = static_cast<long long>(k) * g2.size() - 2 * (k - 1);
    if (family_length(f) > cap)
      throw defect_error("pruned family exceeds the claim bound");
  }
  canonicalize(f);
  return f;
}

UpperCoverResult scc_upper_cover(const SignedMultigraph& g,
                                 const EngineLimits& lim) {
  if (g.edge_count() == 0) throw input_error("graph has no edges");
  if (vertex_components(g).size() != 1)
    throw input_error("cover pipeline needs a connected graph");

  std::vector<int> ploops, active;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e) && g.edge(e).sign > 0)
      ploops.push_back(e);
    else
      active.push_back(e);
  }

  auto [gn, cert] = normalize(g);
  long long eps = cert.epsilon_n;
  long long e_stripped = static_cast<long long>(active.size());
  long long v_count = g.n;

  UpperCoverResult res;
  res.positive_loops = static_cast<int>(ploops.size());
  CoverFamily cover;
  for (int e : ploops)
    cover.members.push_back(balanced_circuit(Circuit{{g.edge(e).u}, {e}}));

  if (eps == 0) {
    res.k = 0;
    auto urep = circuit_cover_bridgeless(gn, active, lim.unsigned_cover);
    for (auto& m : urep.cover.members) cover.members.push_back(m);
    res.bounds = theorem_bounds(e_stripped, v_count, 0, 3);
  } else {
    auto pd = pair_decomposition(gn, lim.structure);
    std::vector<int> g1;
    for (int e : pd.g1_edges)
      if (!(gn.is_loop(e) && gn.edge(e).sign > 0)) g1.push_back(e);
    if (!g1.empty()) {
      auto urep = circuit_cover_bridgeless(gn, g1, lim.unsigned_cover);
      for (auto& m : urep.cover.members) cover.members.push_back(m);
    }
    CoverFamily f2 = prune_cover(gn, pd.g2_edges, pd.f2, pd.k);
    for (auto& m : f2.members) cover.members.push_back(m);
    res.k = pd.k;
    res.bounds = theorem_bounds(e_stripped, v_count, eps, pd.k);
  }

  canonicalize(cover);
  res.cover = cover;
  CoverStats stats;
  try {
    stats = cover_multiplicities(g, cover);
  } catch (const Error& err) {
    throw defect_error(std::string("cover verification failed: ") +
                       err.what());
  }
  if (!stats.uncovered.empty())
    throw defect_error("cover left edge " +
                       std::to_string(stats.uncovered.front()) +
                       " uncovered");
  res.length = stats.length;
  res.stripped_length = res.length - res.positive_loops;

  if (eps > 0) {
    Rational sl(res.stripped_length);
    if (sl > res.bounds.chained_bound)
      throw defect_error("cover exceeds the section-6 chained bound");
    if (sl > res.bounds.bound_general)
      throw defect_error("cover exceeds the general bound");
    if (res.k == 2 && sl > res.bounds.bound_even)
      throw defect_error("cover exceeds the even-case bound");
    if (eps >= 2 && sl > res.bounds.corollary_bound)
      throw defect_error("cover exceeds the corollary bound");
  }
  return res;
}

VerifyReport verify_cover(const SignedMultigraph& g, const CoverFamily& f,
                          const std::vector<int>& allowed) {
  VerifyReport r;
  for (int i = 0; i < f.size(); ++i) {
    auto d = validate_signed_circuit(g, f.members[i]);
    if (!d.ok) {
      r.reason = "member " + std::to_string(i) + ": " + d.reason;
      return r;
    }
  }
  r.stats = cover_multiplicities(g, f);
  if (allowed.empty()) {
    if (!r.stats.uncovered.empty()) {
      r.reason = "edge " + std::to_string(r.stats.uncovered.front()) +
                 " uncovered";
      return r;
    }
  } else {
    auto k = sorted_unique(allowed);
    for (int e = 0; e < g.edge_count(); ++e)
      if (!std::binary_search(k.begin(), k.end(), r.stats.multiplicity[e])) {
        r.reason = "edge " + std::to_string(e) + " covered " +
                   std::to_string(r.stats.multiplicity[e]) +
                   " times, outside K";
        return r;
      }
  }
  r.valid = true;
  return r;
}

ExactSignedResult exact_scc_signed(const SignedMultigraph& g,
                                   const EngineLimits& lim) {
  ExactSignedResult res;
  if (g.edge_count() == 0) {
    res.has_cover = true;
    return res;
  }
  if (g.edge_count() > lim.oracle_edge_limit)
    throw limit_error("exact signed cover limited to " +
                      std::to_string(lim.oracle_edge_limit) + " edges");

  std::vector<int> all(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) all[e] = e;

  std::vector<Circuit> balanced, unbalanced;
  bool full = enumerate_circuits(g, all, [&](const Circuit& c) {
    (is_balanced(g, c) ? balanced : unbalanced).push_back(c);
    return balanced.size() + unbalanced.size() < lim.oracle_candidate_cap;
  });
  if (!full) throw limit_error("oracle circuit enumeration cap exceeded");

  std::vector<SignedCircuit> cand;
  for (auto& c : balanced) cand.push_back(balanced_circuit(c));
  for (size_t i = 0; i < unbalanced.size(); ++i)
    for (size_t j = i + 1; j < unbalanced.size(); ++j) {
      std::vector<int> vi = unbalanced[i].verts, vj = unbalanced[j].verts;
      std::sort(vi.begin(), vi.end());
      std::sort(vj.begin(), vj.end());
      std::vector<int> shared;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::back_inserter(shared));
      if (shared.size() == 1) {
        cand.push_back(short_barbell(unbalanced[i], unbalanced[j], shared[0]));
      } else if (shared.empty()) {
        enumerate_connecting_paths(
            g, all, vi, vj,
            [&](const std::vector<int>& pe, const std::vector<int>& pv) {
              cand.push_back(
                  long_barbell(unbalanced[i], unbalanced[j], pe, pv));
              return cand.size() < lim.oracle_candidate_cap;
            });
        if (cand.size() >= lim.oracle_candidate_cap)
          throw limit_error("oracle candidate cap exceeded");
      }
    }
  std::vector<SignedCircuit> valid;
  for (auto& sc : cand)
    if (validate_signed_circuit(g, sc).ok) valid.push_back(sc);
  std::stable_sort(valid.begin(), valid.end(),
                   [](const SignedCircuit& a, const SignedCircuit& b) {
                     return a.length() < b.length();
                   });

  std::vector<std::vector<int>> through(g.edge_count());
  for (int i = 0; i < static_cast<int>(valid.size()); ++i)
    for (int e : valid[i].edge_set()) through[e].push_back(i);
  for (int e = 0; e < g.edge_count(); ++e)
    if (through[e].empty()) return res;  // has_cover = false

  // Greedy seed for the upper bound.
  std::vector<int> mult(g.edge_count(), 0);
  std::vector<int> seed;
  long long seed_len = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (mult[e] > 0) continue;
    int ci = through[e][0];
    seed.push_back(ci);
    seed_len += valid[ci].length();
    for (int id : valid[ci].edge_set()) mult[id]++;
  }
  std::fill(mult.begin(), mult.end(), 0);

  long long best_len = seed_len;
  std::vector<int> best = seed;
  std::vector<int> cur;
  long long uncovered = g.edge_count();
  long long nodes = 0;

  std::function<void(long long)> rec = [&](long long len) {
    if (++nodes > lim.unsigned_cover.node_budget)
      throw limit_error("exact signed cover budget exceeded");
    if (uncovered == 0) {
      if (len < best_len) {
        best_len = len;
        best = cur;
      }
      return;
    }
    if (len + uncovered >= best_len) return;
    int e = 0;
    while (mult[e] > 0) ++e;
    for (int ci : through[e]) {
      cur.push_back(ci);
      long long newly = 0;
      for (int id : valid[ci].edge_set())
        if (mult[id]++ == 0) ++newly;
      uncovered -= newly;
      rec(len + valid[ci].length());
      uncovered += newly;
      for (int id : valid[ci].edge_set()) --mult[id];
      cur.pop_back();
    }
  };
  rec(0);

  res.has_cover = true;
  for (int ci : best) res.cover.members.push_back(valid[ci]);
  res.length = best_len;
  canonicalize(res.cover);
  return res;
}

}  // namespace sgc
