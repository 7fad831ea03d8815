#include <doctest.h>

#include <random>

#include "nutkit/graph.hpp"
#include "oracle.hpp"

using namespace nutkit;

namespace {

const char* kOrder8Quartic =
    "{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 4 6; 3: 0 1 5 7; 4: 0 2 6 7; 5: 1 3 6 7; "
    "6: 2 4 5 7; 7: 3 4 5 6}";

} // namespace

TEST_CASE("adjacency list parsing") {
  SUBCASE("smallest valid list is K2") {
    Graph g = parse_adjacency_list("{0: 1; 1: 0}");
    CHECK(g.order() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
  }
  SUBCASE("order-8 list is 4-regular") {
    Graph g = parse_adjacency_list(kOrder8Quartic);
    CHECK(g.order() == 8);
    auto p = degree_profile(g);
    CHECK(p.is_regular);
    CHECK(p.d == 4);
  }
  SUBCASE("newlines work as group separators") {
    Graph g = parse_adjacency_list("{0: 1 2\n 1: 0 2\n 2: 0 1}");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("asymmetric list is rejected") {
    try {
      parse_adjacency_list("{0: 1; 1: 2}");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::asymmetric_list);
    }
    try {
      parse_adjacency_list("{0: 1; 1:}");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::asymmetric_list);
    }
  }
  SUBCASE("neighbor out of range") {
    try {
      parse_adjacency_list("{0: 1 5; 1: 0}");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::vertex_out_of_range);
    }
  }
  SUBCASE("duplicate neighbor") {
    try {
      parse_adjacency_list("{0: 1 1; 1: 0}");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::duplicate_neighbor);
    }
  }
  SUBCASE("syntax errors") {
    CHECK_THROWS_AS(parse_adjacency_list("0: 1; 1: 0"), error);
    CHECK_THROWS_AS(parse_adjacency_list("{}"), error);
    CHECK_THROWS_AS(parse_adjacency_list("{0: 0}"), error);
  }
  SUBCASE("round trip") {
    Graph g = parse_adjacency_list(kOrder8Quartic);
    CHECK(parse_adjacency_list(to_adjacency_list(g)) == g);
  }
}

TEST_CASE("graph6") {
  SUBCASE("K2 encodes to A_") {
    CHECK(to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
  }
  SUBCASE("appendix order-8 graph round-trips") {
    Graph g = parse_adjacency_list(kOrder8Quartic);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  SUBCASE("random round trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 1 + static_cast<int>(rng() % 20);
      Graph g = oracle::random_graph(n, 0.4, rng);
      CHECK(parse_graph6(to_graph6(g)) == g);
    }
  }
  SUBCASE("nonzero padding is rejected") {
    // n=2 has one matrix bit; "AA" sets a padding bit.
    try {
      parse_graph6("AA");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::trailing_bits);
    }
  }
  SUBCASE("length mismatch") {
    try {
      parse_graph6("A");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::length_mismatch);
    }
    CHECK_THROWS_AS(parse_graph6("A__"), error);
  }
  SUBCASE("bad header") {
    try {
      parse_graph6("\x3a_");
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::bad_header);
    }
    CHECK_THROWS_AS(parse_graph6("~~~"), error);
  }
  SUBCASE("trailing newline tolerated") {
    CHECK(parse_graph6("A_\n") == Graph::from_edges(2, {{0, 1}}));
  }
}

TEST_CASE("complement") {
  SUBCASE("complement of K2 is empty") {
    CHECK(complement(Graph::from_edges(2, {{0, 1}})).edge_count() == 0);
  }
  SUBCASE("degree arithmetic") {
    Graph g = make_antiprism(6); // 4-regular on 12
    auto p = degree_profile(complement(g));
    CHECK(p.is_regular);
    CHECK(p.d == 12 - 1 - 4);
  }
  SUBCASE("involution") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 15), 0.5, rng);
      CHECK(complement(complement(g)) == g);
    }
  }
}

TEST_CASE("antiprism") {
  SUBCASE("k=3 is the octahedron") {
    Graph g = make_antiprism(3);
    CHECK(g.order() == 6);
    auto p = degree_profile(g);
    CHECK(p.is_regular);
    CHECK(p.d == 4);
    CHECK(oracle::brute_isomorphic(g, make_complete_minus_matching(6)));
  }
  SUBCASE("4-regular on 2k vertices") {
    for (int k = 3; k <= 12; ++k) {
      Graph g = make_antiprism(k);
      CHECK(g.order() == 2 * k);
      CHECK(degree_profile(g).d == 4);
    }
  }
  SUBCASE("ring size below 3 rejected") {
    try {
      make_antiprism(2);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::k_too_small);
    }
  }
}

TEST_CASE("complete minus matching") {
  SUBCASE("m=4 gives the 4-cycle") {
    CHECK(oracle::brute_isomorphic(make_complete_minus_matching(4), make_cycle(4)));
  }
  SUBCASE("m=6 gives the 4-regular cocktail-party graph") {
    Graph g = make_complete_minus_matching(6);
    CHECK(g.order() == 6);
    CHECK(degree_profile(g).d == 4);
  }
  SUBCASE("m=2 gives the empty graph on two vertices") {
    Graph g = make_complete_minus_matching(2);
    CHECK(g.order() == 2);
    CHECK(g.edge_count() == 0);
  }
  SUBCASE("odd order rejected") {
    try {
      make_complete_minus_matching(5);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::odd_order);
    }
  }
  SUBCASE("(m-2)-regular") {
    for (int m = 4; m <= 14; m += 2) CHECK(degree_profile(make_complete_minus_matching(m)).d == m - 2);
  }
}

TEST_CASE("graph invariants hold for constructors") {
  // The Graph constructor validates symmetry, loops and range, so building
  // any family already exercises the shared validator.
  for (int k = 3; k <= 10; ++k) (void)make_antiprism(k);
  for (int m = 2; m <= 12; m += 2) (void)make_complete_minus_matching(m);
  CHECK_THROWS_AS(Graph(2, {1, 0}), error);       // loop at vertex 0
  CHECK_THROWS_AS(Graph(2, {2, 0}), error);       // asymmetric
  CHECK_THROWS_AS(Graph(1, {2}), error);          // bit beyond range
  CHECK_THROWS_AS(Graph(0, {}), error);           // empty order
}

TEST_CASE("connectivity and girth") {
  CHECK(is_connected(make_cycle(5)));
  CHECK_FALSE(is_connected(Graph::empty(2)));
  CHECK(girth(make_cycle(5)) == 5);
  CHECK(girth(make_path(4)) == 0);
  CHECK(girth(make_complete(4)) == 3);
  CHECK(girth(make_antiprism(5)) == 3);
}
