#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "sgc/cycle_tools.hpp"
#include "sgc/structure.hpp"

using namespace sgc;

TEST_CASE("bridges") {
  SignedMultigraph tree;
  tree.n = 4;
  tree.add_edge(0, 1, 1);
  tree.add_edge(1, 2, 1);
  tree.add_edge(2, 3, 1);
  CHECK(bridges(tree) == std::vector<int>{0, 1, 2});

  CHECK(bridges(fixtures::positive_cycle(5)).empty());
  CHECK(bridges(fixtures::two_tri_path()) == std::vector<int>{3, 4});
  CHECK(bridges(fixtures::l2p1()) == std::vector<int>{2});
  CHECK(bridges(fixtures::theta_minus()).empty());
}

TEST_CASE("partner_set") {
  auto l2 = fixtures::l2p1();
  CHECK(partner_set(l2, 0) == std::vector<int>{0});

  auto ttp = fixtures::two_tri_path();
  CHECK(partner_set(ttp, 2) == std::vector<int>{0, 1, 2});

  auto k4 = fixtures::all_negative_k4();
  for (int e = 0; e < k4.edge_count(); ++e)
    CHECK(partner_set(k4, e) == std::vector<int>{e});
}

TEST_CASE("partner set members form genuine minimal 2-edge-cuts") {
  fixtures::Rng rng(5);
  for (int it = 0; it < 30; ++it) {
    auto g = fixtures::random_connected(rng, 4 + rng.below(5), rng.below(5),
                                        rng.below(4));
    auto base = bridges(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e) ||
          std::binary_search(base.begin(), base.end(), e))
        continue;
      for (int f : partner_set(g, e)) {
        if (f == e) continue;
        auto comps_before = vertex_components(g);
        SignedMultigraph cut = g;
        cut.edges[e] = {0, 0, 1};  // neutralize as loop at 0
        cut.edges[f] = {0, 0, 1};
        // Removing both must disconnect; removing either alone must not.
        // (Loops at 0 keep vertex/edge indexing stable.)
        SignedMultigraph just_e = g;
        just_e.edges[e] = {0, 0, 1};
        SignedMultigraph just_f = g;
        just_f.edges[f] = {0, 0, 1};
        CHECK(vertex_components(cut).size() > comps_before.size());
        CHECK(vertex_components(just_e).size() == comps_before.size());
        CHECK(vertex_components(just_f).size() == comps_before.size());
      }
    }
  }
}

TEST_CASE("classify_bridges") {
  auto l2 = fixtures::l2p1();
  auto cat = classify_bridges(l2);
  CHECK(cat.bridges == std::vector<int>{2});
  CHECK(cat.s_bridges == std::vector<int>{2});
  CHECK(cat.g_class_bridges == std::vector<int>{2});

  // Bridge with an all-positive side is not in B_s.
  SignedMultigraph g;
  g.n = 5;
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 0, -1);
  g.add_edge(2, 3, 1);  // bridge
  g.add_edge(3, 4, 1);
  g.add_edge(4, 3, 1);
  auto cat2 = classify_bridges(g);
  CHECK(cat2.bridges == std::vector<int>{3});
  CHECK(cat2.s_bridges.empty());
  CHECK(cat2.g_class_bridges == std::vector<int>{3});

  auto cat3 = classify_bridges(fixtures::bowtie());
  CHECK(cat3.bridges.empty());
  CHECK(cat3.s_bridges.empty());
  CHECK(cat3.g_class_bridges.empty());
}

TEST_CASE("is_g_bridge uses component negativeness") {
  auto l2 = fixtures::l2p1();
  CHECK_FALSE(is_g_bridge(l2, 2));

  // Bridge between two balanced blocks.
  SignedMultigraph g;
  g.n = 6;
  g.add_edge(0, 1, -1);
  g.add_edge(0, 1, -1);
  g.add_edge(1, 2, 1);  // bridge (id 2)
  g.add_edge(2, 3, 1);
  g.add_edge(3, 2, 1);
  CHECK(is_g_bridge(g, 2));

  // Sides of negativeness 2 and 0.
  SignedMultigraph h;
  h.n = 3;
  h.add_edge(0, 0, -1);
  h.add_edge(0, 0, -1);
  h.add_edge(0, 1, 1);  // bridge (id 2)
  h.add_edge(1, 2, 1);
  h.add_edge(2, 1, 1);
  CHECK(is_g_bridge(h, 2));

  CHECK_THROWS_AS(is_g_bridge(h, 3), Error);  // not a bridge
}

TEST_CASE("is_s_bridgeless") {
  auto rep = is_s_bridgeless(fixtures::l2p1());
  CHECK(rep.ok);
  CHECK(rep.witness.size() == 3);

  auto rep2 = is_s_bridgeless(fixtures::theta_minus());
  CHECK_FALSE(rep2.ok);
  CHECK(rep2.uncovered_edge == 2);

  auto rep3 = is_s_bridgeless(fixtures::triangle(1));
  CHECK_FALSE(rep3.ok);

  CHECK(is_s_bridgeless(fixtures::bowtie()).ok);
  CHECK(is_s_bridgeless(fixtures::two_tri_path()).ok);
  CHECK(is_s_bridgeless(fixtures::positive_cycle(4)).ok);
}

TEST_CASE("s-bridgelessness is invariant under switching") {
  fixtures::Rng rng(17);
  for (int it = 0; it < 15; ++it) {
    auto g = fixtures::random_connected(rng, 3 + rng.below(4), 2 + rng.below(4),
                                        rng.below(5));
    std::vector<int> s;
    for (int v = 0; v < g.n; ++v)
      if (rng.below(2)) s.push_back(v);
    auto sw = switch_graph(g, s);
    CHECK(is_s_bridgeless(g).ok == is_s_bridgeless(sw).ok);
  }
}

TEST_CASE("tree_certificate") {
  auto ttp = fixtures::two_tri_path();
  auto cert = tree_certificate(ttp);
  CHECK(cert.tree_edges == std::vector<int>{0, 1, 3, 4, 5, 6});
  auto c2 = cert.fundamental_circuit.at(2);
  std::vector<int> c2e = c2.edges;
  std::sort(c2e.begin(), c2e.end());
  CHECK(c2e == std::vector<int>{0, 1, 2});
  auto c7 = cert.fundamental_circuit.at(7);
  std::vector<int> c7e = c7.edges;
  std::sort(c7e.begin(), c7e.end());
  CHECK(c7e == std::vector<int>{5, 6, 7});

  auto pos = fixtures::positive_cycle(4);
  auto cert2 = tree_certificate(pos);
  CHECK(cert2.tree_edges.size() == 3);
  CHECK(cert2.fundamental_circuit.empty());

  auto l2 = fixtures::l2p1();
  auto cert3 = tree_certificate(l2);
  CHECK(cert3.tree_edges == std::vector<int>{2});
  CHECK(cert3.fundamental_circuit.at(0).edges == std::vector<int>{0});

  // Non-minimal signature: negative bridge splits the positive part.
  SignedMultigraph bad;
  bad.n = 2;
  bad.add_edge(0, 1, -1);
  CHECK_THROWS_AS(tree_certificate(bad), Error);
}

TEST_CASE("fundamental circuits contain exactly their negative edge") {
  fixtures::Rng rng(23);
  for (int it = 0; it < 25; ++it) {
    auto g = fixtures::random_connected(rng, 4 + rng.below(5), rng.below(4), 0);
    // sprinkle negative non-tree extras so g - E_N stays spanning
    int extras = 1 + rng.below(3);
    for (int i = 0; i < extras; ++i)
      g.add_edge(rng.below(g.n), rng.below(g.n), -1);
    auto cert = tree_certificate(g);
    for (auto& [e, c] : cert.fundamental_circuit) {
      CHECK(negative_count(g, c.edges) == 1);
      CHECK(std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end());
    }
  }
}

TEST_CASE("contract") {
  auto ttp = fixtures::two_tri_path();
  auto c = contract(ttp, {{0, 1, 2}, {5, 6, 7}});
  CHECK(c.quotient.n == 3);
  CHECK(c.quotient.edge_count() == 2);
  CHECK_FALSE(has_cycle(c.quotient));

  auto id = contract(ttp, {});
  CHECK(id.quotient.n == ttp.n);
  CHECK(id.quotient.edge_count() == ttp.edge_count());

  std::vector<int> everything(ttp.edge_count());
  for (int e = 0; e < ttp.edge_count(); ++e) everything[e] = e;
  auto all = contract(ttp, {everything});
  CHECK(all.quotient.n == 1);
  CHECK(all.quotient.edge_count() == 0);

  CHECK_THROWS_AS(contract(ttp, {{0, 1, 2}, {2, 3}}), Error);  // overlap
}
