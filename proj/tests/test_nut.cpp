#include <doctest.h>

#include "nutkit/canonical.hpp"
#include "nutkit/catalog.hpp"
#include "nutkit/exact_kernel.hpp"
#include "nutkit/nut.hpp"
#include "oracle.hpp"

using namespace nutkit;

namespace {

const Graph& seed(int d, int n) {
  for (const auto& entry : load_seed_catalog())
    if (entry.degree == d && entry.order == n) return entry.graph;
  throw std::runtime_error("no such seed");
}

} // namespace

TEST_CASE("classify") {
  SUBCASE("single vertex is singular but not a nut") {
    auto r = classify(Graph::empty(1));
    CHECK(r.nullity == 1);
    CHECK(r.classification != NutClass::Nut);
  }
  SUBCASE("C4 is a core graph of nullity 2") {
    auto r = classify(make_cycle(4));
    CHECK(r.nullity == 2);
    CHECK(r.classification == NutClass::CoreNonNut);
    REQUIRE(r.kernel_witness.has_value());
    for (const auto& x : *r.kernel_witness) CHECK(x != 0);
    for (const auto& e : matvec(adjacency_matrix(make_cycle(4)), *r.kernel_witness))
      CHECK(e == 0);
  }
  SUBCASE("star K_{1,3} is singular without a full kernel vector") {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    auto r = classify(star);
    CHECK(r.nullity == 2);
    CHECK(r.classification == NutClass::SingularNonCore);
  }
  SUBCASE("P4 is nonsingular") {
    CHECK(classify(make_path(4)).classification == NutClass::NonSingular);
  }
  SUBCASE("appendix order-10 5-regular graph is a nut") {
    auto r = classify(seed(5, 10));
    CHECK(r.classification == NutClass::Nut);
    CHECK(r.nullity == 1);
  }
  SUBCASE("fast path agrees with classify") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
      Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 9), 0.45, rng);
      CHECK(is_nut_graph(g) == (classify(g).classification == NutClass::Nut));
    }
  }
  SUBCASE("nut graphs are connected") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 4000; ++trial) {
      Graph g = oracle::random_graph(7, 0.4, rng);
      if (is_nut_graph(g)) CHECK(is_connected(g));
    }
  }
}

TEST_CASE("fowler_extend") {
  SUBCASE("5-regular seed extends to a 5-regular nut on 20 vertices") {
    const Graph& g = seed(5, 10);
    auto ext = fowler_extend(g, 0);
    CHECK(ext.result.order() == 20);
    auto p = degree_profile(ext.result);
    CHECK(p.is_regular);
    CHECK(p.d == 5);
    CHECK(classify(ext.result).classification == NutClass::Nut);
  }
  SUBCASE("3-regular order-12 seed reaches order 18") {
    auto ext = fowler_extend(seed(3, 12), 2);
    CHECK(ext.result.order() == 18);
    CHECK(degree_profile(ext.result).d == 3);
    CHECK(classify(ext.result).classification == NutClass::Nut);
  }
  SUBCASE("transferred vector lies in the kernel with pivot entry (1-d)x_v") {
    const Graph& g = seed(5, 10);
    auto base_kernel = *classify(g).kernel_witness;
    auto ext = fowler_extend(g, 3);
    for (const auto& e : matvec(adjacency_matrix(ext.result), ext.transferred_kernel))
      CHECK(e == 0);
    CHECK(ext.transferred_kernel[3] == (1 - 5) * base_kernel[3]);
    for (int i = 0; i < 5; ++i) {
      CHECK(ext.transferred_kernel[ext.layer_p[i]] == base_kernel[3]);
      CHECK(ext.transferred_kernel[ext.layer_q[i]] == base_kernel[ext.neighbors[i]]);
    }
  }
  SUBCASE("errors") {
    try {
      fowler_extend(make_cycle(4), 0);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::not_a_nut);
    }
    Graph two = Graph::empty(2);
    try {
      fowler_extend(two, 0);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::isolated_pivot);
    }
  }
}

TEST_CASE("fowler_detect") {
  SUBCASE("order-8 graph cannot decompose") {
    CHECK_FALSE(fowler_detect(seed(4, 8)).has_value());
  }
  SUBCASE("seeds themselves do not decompose") {
    CHECK_FALSE(fowler_detect(seed(5, 10)).has_value());
    CHECK_FALSE(fowler_detect(seed(3, 12)).has_value());
  }
  SUBCASE("construct then detect recovers the base") {
    for (auto [d, n] : {std::pair{3, 12}, {4, 10}, {5, 12}, {6, 12}}) {
      const Graph& g = seed(d, n);
      auto ext = fowler_extend(g, 1);
      auto w = fowler_detect(ext.result);
      REQUIRE(w.has_value());
      CHECK(are_isomorphic(w->base, g));
      CHECK(is_nut_graph(w->base));
    }
  }
}

TEST_CASE("classify_pair") {
  OrderSet n5;
  n5.threshold = 10;
  n5.even_only = true;
  CHECK(classify_pair(10, 5, n5) == PairClass::SeedPair);
  CHECK(classify_pair(22, 5, n5) == PairClass::CPair);
  CHECK(classify_pair(13, 5, n5) == PairClass::NotRealisable);
  CHECK(classify_pair(8, 5, n5) == PairClass::NotRealisable);
  // 20 - 10 = 10 is realizable, so 20 is a C-pair.
  CHECK(classify_pair(20, 5, n5) == PairClass::CPair);
}
