#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "sgc/engine.hpp"
#include "sgc/io.hpp"

using namespace sgc;

TEST_CASE("instance round trip") {
  std::string text =
      "p sg 3 4\n"
      "e 1 2 +\n"
      "e 2 3 +\n"
      "e 1 3 -\n"
      "e 2 2 -\n";
  auto g = parse_instance_text(text);
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.edge(2).sign == -1);
  CHECK(g.is_loop(3));
  CHECK(emit_instance(g) == text);

  auto g2 = parse_instance_text(emit_instance(fixtures::two_tri_path()));
  CHECK(g2.edge_count() == 8);
  CHECK(emit_instance(g2) == emit_instance(fixtures::two_tri_path()));
}

TEST_CASE("instance parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, const std::string& frag) {
    try {
      parse_instance_text(text);
      FAIL("expected an input error");
    } catch (const Error& err) {
      std::string msg = err.what();
      CHECK(msg.find(frag) != std::string::npos);
    }
  };
  expect_line("p sg 2\n", "line 1");
  expect_line("p sg 2 1\ne 1 2 *\n", "line 2");
  expect_line("p sg 2 1\ne 0 2 +\n", "1-indexed");
  expect_line("p sg 2 1\ne 1 3 +\n", "line 2");
  expect_line("# comment only\n", "header");
  expect_line("p sg 2 2\ne 1 2 +\n", "declares");
  expect_line("p sg 2 1\ne 1 2 +\ne 2 1 -\n", "line 3");
}

TEST_CASE("cover round trips for every member kind") {
  auto l2 = fixtures::l2p1();
  auto r = scc_upper_cover(l2);  // long barbell member
  auto back = parse_cover_text(l2, emit_cover(r.cover));
  CHECK(verify_cover(l2, back).valid);
  CHECK(emit_cover(back) == emit_cover(r.cover));

  auto bow = fixtures::bowtie();
  auto rb = exact_scc_signed(bow);  // short barbell or balanced members
  auto backb = parse_cover_text(bow, emit_cover(rb.cover));
  CHECK(verify_cover(bow, backb).valid);
  CHECK(cover_multiplicities(bow, backb).length == rb.length);

  std::string text = "balanced: e0 e1 e2\n";
  auto tri = fixtures::triangle(0);
  auto f = parse_cover_text(tri, text);
  CHECK(f.size() == 1);
  CHECK(f.members[0].kind == SignedCircuit::Kind::Balanced);
  CHECK(emit_cover(f) == text);
}

TEST_CASE("cover parse errors") {
  auto l2 = fixtures::l2p1();
  auto expect = [&](const std::string& text, const std::string& frag) {
    try {
      parse_cover_text(l2, text);
      FAIL("expected an input error");
    } catch (const Error& err) {
      std::string msg = err.what();
      CHECK(msg.find(frag) != std::string::npos);
    }
  };
  expect("weird: e0\n", "unknown member kind");
  expect("balanced: e9\n", "out of range");
  expect("short: [e0] @v1 [e1\n", "missing ']'");
  expect("short: [e0] [e1]\n", "@v");
  expect("long: [e0] () [e1]\n", "path");
  expect("balanced:\n", "empty circuit");
}

TEST_CASE("file io") {
  auto g = fixtures::bowtie();
  save_text("/tmp/sgc_io_test.sg", emit_instance(g));
  auto g2 = load_instance("/tmp/sgc_io_test.sg");
  CHECK(emit_instance(g2) == emit_instance(g));
  CHECK_THROWS_AS(load_instance("/tmp/does_not_exist.sg"), Error);
}
