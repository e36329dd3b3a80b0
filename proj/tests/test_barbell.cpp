#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sgc/barbell.hpp"
#include "sgc/gen.hpp"

using namespace sgc;

namespace {

std::vector<int> all_edges(const SignedMultigraph& g) {
  std::vector<int> ids(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) ids[e] = e;
  return ids;
}

void check_double(const SignedMultigraph& g, const std::vector<int>& host,
                  const CoverFamily& f) {
  auto stats = cover_multiplicities(g, f);
  for (int e = 0; e < g.edge_count(); ++e) {
    bool in = std::binary_search(host.begin(), host.end(), e);
    CHECK(stats.multiplicity[e] == (in ? 2 : 0));
  }
  CHECK(stats.length == 2 * static_cast<long long>(host.size()));
}

// Hub circuit plus `leaves` unbalanced triangles, each joined to a hub vertex
// by a path of the given length. The hub is unbalanced exactly when the leaf
// count is odd, matching the per-piece parity requirement.
SignedMultigraph star_of_triangles(int leaves, int path_len,
                                   GeneralizedBarbellCert* cert) {
  int hub_len = std::max(leaves, 3);
  SignedMultigraph g;
  g.n = hub_len + leaves * (path_len + 2);
  std::vector<std::vector<int>> pieces;
  std::vector<int> hub;
  for (int i = 0; i < hub_len; ++i)
    hub.push_back(
        g.add_edge(i, (i + 1) % hub_len, (i == 0 && leaves % 2) ? -1 : 1));
  pieces.push_back(hub);
  int next = hub_len;
  for (int l = 0; l < leaves; ++l) {
    int cur = l % hub_len;
    for (int s = 0; s < path_len; ++s) {
      int w = next++;
      g.add_edge(cur, w, 1);
      cur = w;
    }
    int a = cur, b = next++, c = next++;
    std::vector<int> tri;
    tri.push_back(g.add_edge(a, b, -1));
    tri.push_back(g.add_edge(b, c, 1));
    tri.push_back(g.add_edge(c, a, 1));
    std::sort(tri.begin(), tri.end());
    pieces.push_back(tri);
  }
  cert->host = all_edges(g);
  cert->pieces = pieces;
  return g;
}

}  // namespace

TEST_CASE("eulerian_scdc examples") {
  auto c4 = fixtures::positive_cycle(4);
  auto f = eulerian_scdc(c4, all_edges(c4));
  CHECK(f.size() == 2);
  for (auto& m : f.members) CHECK(m.kind == SignedCircuit::Kind::Balanced);
  check_double(c4, all_edges(c4), f);

  SignedMultigraph loops;
  loops.n = 1;
  loops.add_edge(0, 0, -1);
  loops.add_edge(0, 0, -1);
  auto f2 = eulerian_scdc(loops, {0, 1});
  CHECK(f2.size() == 2);
  for (auto& m : f2.members)
    CHECK(m.kind == SignedCircuit::Kind::ShortBarbell);
  check_double(loops, {0, 1}, f2);

  auto bow = fixtures::bowtie();
  auto f3 = eulerian_scdc(bow, all_edges(bow));
  check_double(bow, all_edges(bow), f3);
}

TEST_CASE("eulerian_scdc rejects bad input") {
  auto ttp = fixtures::two_tri_path();  // has odd-degree vertices
  CHECK_THROWS_AS(eulerian_scdc(ttp, all_edges(ttp)), Error);

  auto tri1 = fixtures::triangle(1);  // odd negative count
  CHECK_THROWS_AS(eulerian_scdc(tri1, all_edges(tri1)), Error);
}

TEST_CASE("eulerian_scdc on random even-negative eulerian graphs") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = gen_eulerian_even(seed, 4 + static_cast<int>(seed % 5),
                               6 + static_cast<int>(seed % 7));
    auto f = eulerian_scdc(g, all_edges(g));
    check_double(g, all_edges(g), f);
  }
}

TEST_CASE("validate_gbarbell") {
  auto c4 = fixtures::positive_cycle(4);
  GeneralizedBarbellCert one;
  one.host = all_edges(c4);
  one.pieces = {all_edges(c4)};
  CHECK(validate_gbarbell(c4, one).ok);

  auto l2 = fixtures::l2p1();
  GeneralizedBarbellCert lb;
  lb.host = {0, 1, 2};
  lb.pieces = {{0}, {1}};
  CHECK(validate_gbarbell(l2, lb).ok);
  REQUIRE(lb.parity_log.size() >= 2);

  // Two disjoint unbalanced triangles with no connector: parity 1 vs 0.
  auto ttp = fixtures::two_tri_path();
  GeneralizedBarbellCert bad;
  bad.host = {0, 1, 2, 5, 6, 7};
  bad.pieces = {{0, 1, 2}, {5, 6, 7}};
  CHECK_FALSE(validate_gbarbell(ttp, bad).ok);
}

TEST_CASE("gbarbell_scdc examples") {
  auto l2 = fixtures::l2p1();
  GeneralizedBarbellCert cert;
  cert.host = {0, 1, 2};
  cert.pieces = {{0}, {1}};
  auto f = gbarbell_scdc(l2, cert);
  CHECK(f.size() == 2);
  for (auto& m : f.members)
    CHECK(m.kind == SignedCircuit::Kind::LongBarbell);
  check_double(l2, {0, 1, 2}, f);

  auto ttp = fixtures::two_tri_path();
  GeneralizedBarbellCert c2;
  c2.host = {0, 1, 2, 3, 4, 5, 6, 7};
  c2.pieces = {{0, 1, 2}, {5, 6, 7}};
  auto f2 = gbarbell_scdc(ttp, c2);
  check_double(ttp, c2.host, f2);
  auto stats = cover_multiplicities(ttp, f2);
  CHECK(stats.length == 16);

  // Host that is itself eulerian: delegates to the eulerian construction.
  auto bow = fixtures::bowtie();
  GeneralizedBarbellCert c3;
  c3.host = all_edges(bow);
  c3.pieces = {all_edges(bow)};
  check_double(bow, c3.host, gbarbell_scdc(bow, c3));
}

TEST_CASE("gcycle_cover bands") {
  // A long barbell: both loops are leaves, every edge multiplicity 1.
  auto l2 = fixtures::l2p1();
  GeneralizedBarbellCert cert;
  cert.host = {0, 1, 2};
  cert.pieces = {{0}, {1}};
  auto f = gcycle_cover(l2, cert);
  auto stats = cover_multiplicities(l2, f);
  for (int e = 0; e < 3; ++e) CHECK(stats.multiplicity[e] == 1);

  // A balanced circuit piece passes through once.
  auto c4 = fixtures::positive_cycle(4);
  GeneralizedBarbellCert b;
  b.host = all_edges(c4);
  b.pieces = {all_edges(c4)};
  auto fb = gcycle_cover(c4, b);
  auto sb = cover_multiplicities(c4, fb);
  for (int e = 0; e < 4; ++e) CHECK(sb.multiplicity[e] == 1);

  // Stars of unbalanced triangles around an unbalanced hub.
  for (int leaves = 1; leaves <= 5; ++leaves) {
    for (int path_len = 1; path_len <= 2; ++path_len) {
      GeneralizedBarbellCert sc;
      auto g = star_of_triangles(leaves, path_len, &sc);
      auto fam = gcycle_cover(g, sc);
      auto st = cover_multiplicities(g, fam);
      std::vector<char> piece_edge(g.edge_count(), 0), leaf_edge(g.edge_count(), 0);
      for (size_t p = 0; p < sc.pieces.size(); ++p)
        for (int e : sc.pieces[p]) {
          piece_edge[e] = 1;
          if (p > 0) leaf_edge[e] = 1;  // pieces after the hub are leaves
        }
      for (int e = 0; e < g.edge_count(); ++e) {
        if (leaf_edge[e])
          CHECK(st.multiplicity[e] == 1);
        else if (piece_edge[e]) {
          CHECK(st.multiplicity[e] >= 1);
          CHECK(st.multiplicity[e] <= 2);
        } else {
          CHECK(st.multiplicity[e] <= 1);
        }
      }
    }
  }
}

TEST_CASE("one_two_cover outcomes") {
  // Balanced circuit host decomposes.
  auto c4 = fixtures::positive_cycle(4);
  GeneralizedBarbellCert b;
  b.host = all_edges(c4);
  b.pieces = {all_edges(c4)};
  auto r = one_two_cover(c4, b);
  CHECK(r.is_decomposition);
  auto stats = cover_multiplicities(c4, r.family);
  for (int e = 0; e < 4; ++e) CHECK(stats.multiplicity[e] == 1);

  // L2P(1): single member covering once, loops are the spares.
  auto l2 = fixtures::l2p1();
  GeneralizedBarbellCert cert;
  cert.host = {0, 1, 2};
  cert.pieces = {{0}, {1}};
  auto r2 = one_two_cover(l2, cert);
  CHECK_FALSE(r2.is_decomposition);
  auto s2 = cover_multiplicities(l2, r2.family);
  for (int e = 0; e < 3; ++e) CHECK(s2.multiplicity[e] == 1);
  std::vector<int> spare_edges = r2.spare1.edges;
  spare_edges.insert(spare_edges.end(), r2.spare2.edges.begin(),
                     r2.spare2.edges.end());
  std::sort(spare_edges.begin(), spare_edges.end());
  CHECK(spare_edges == std::vector<int>{0, 1});

  // Eulerian host whose decomposition is one short barbell (h=0, m=1).
  SignedMultigraph loops;
  loops.n = 1;
  loops.add_edge(0, 0, -1);
  loops.add_edge(0, 0, -1);
  GeneralizedBarbellCert lc;
  lc.host = {0, 1};
  lc.pieces = {{0, 1}};
  auto r3 = one_two_cover(loops, lc);
  CHECK_FALSE(r3.is_decomposition);
  auto s3 = cover_multiplicities(loops, r3.family);
  CHECK(s3.multiplicity[0] >= 1);
  CHECK(s3.multiplicity[1] >= 1);
  CHECK_FALSE(is_balanced(loops, r3.spare1));
  CHECK_FALSE(is_balanced(loops, r3.spare2));
}

TEST_CASE("one_two_cover on random generalized barbells") {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = gen_eulerian_even(seed * 7 + 1, 5, 9);
    GeneralizedBarbellCert cert;
    cert.host.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) cert.host[e] = e;
    cert.pieces = {cert.host};
    auto r = one_two_cover(g, cert);
    auto stats = cover_multiplicities(g, r.family);
    for (int e = 0; e < g.edge_count(); ++e) {
      CHECK(stats.multiplicity[e] >= 1);
      CHECK(stats.multiplicity[e] <= (r.is_decomposition ? 1 : 2));
    }
    if (!r.is_decomposition) {
      CHECK_FALSE(is_balanced(g, r.spare1));
      CHECK_FALSE(is_balanced(g, r.spare2));
      auto e1 = r.spare1.edges, e2 = r.spare2.edges;
      std::sort(e1.begin(), e1.end());
      std::sort(e2.begin(), e2.end());
      std::vector<int> inter;
      std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                            std::back_inserter(inter));
      CHECK(inter.empty());
      for (int e : e1) CHECK(stats.multiplicity[e] == 1);
      for (int e : e2) CHECK(stats.multiplicity[e] == 1);
    }
  }
}
