#include <doctest.h>

#include <random>

#include "nutkit/exact_kernel.hpp"
#include "nutkit/graph.hpp"
#include "oracle.hpp"

using namespace nutkit;

namespace {

const char* kOrder8Quartic =
    "{0: 1 2 3 4; 1: 0 2 3 5; 2: 0 1 4 6; 3: 0 1 5 7; 4: 0 2 6 7; 5: 1 3 6 7; "
    "6: 2 4 5 7; 7: 3 4 5 6}";

std::vector<mpz_class> Z(std::initializer_list<long> xs) {
  return std::vector<mpz_class>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("matvec") {
  IntegerMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(matvec(id, Z({4, -5, 6})) == Z({4, -5, 6}));

  CHECK(matvec(adjacency_matrix(make_cycle(4)), Z({1, 0, -1, 0})) == Z({0, 0, 0, 0}));
  CHECK(matvec(adjacency_matrix(Graph::from_edges(2, {{0, 1}})), Z({1, 1})) == Z({1, 1}));

  CHECK_THROWS_AS(matvec(id, Z({1, 2})), error);
}

TEST_CASE("nullity examples") {
  CHECK(nullity(adjacency_matrix(make_cycle(4))) == 2);
  CHECK(nullity(adjacency_matrix(Graph::from_edges(2, {{0, 1}}))) == 0);
  CHECK(nullity(adjacency_matrix(make_path(3))) == 1);
  CHECK(nullity(adjacency_matrix(parse_adjacency_list(kOrder8Quartic))) == 1);

  IntegerMatrix rect(2, 3);
  CHECK_THROWS_AS(nullity(rect), error);
  CHECK_THROWS_AS(kernel_basis(rect), error);
}

TEST_CASE("kernel basis examples") {
  SUBCASE("P3 kernel is (1, 0, -1)") {
    auto basis = kernel_basis(adjacency_matrix(make_path(3)));
    REQUIRE(basis.vectors.size() == 1);
    CHECK(basis.vectors[0] == Z({1, 0, -1}));
  }
  SUBCASE("K2 kernel is empty") {
    CHECK(kernel_basis(adjacency_matrix(Graph::from_edges(2, {{0, 1}}))).vectors.empty());
  }
  SUBCASE("appendix order-8 kernel, frozen from the rational oracle") {
    auto basis = kernel_basis(adjacency_matrix(parse_adjacency_list(kOrder8Quartic)));
    REQUIRE(basis.vectors.size() == 1);
    CHECK(basis.vectors[0] == Z({1, -1, -1, 1, 1, -1, -1, 1}));
  }
}

TEST_CASE("kernel properties against the rational oracle") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (double p : {0.25, 0.5, 0.75}) {
      for (int trial = 0; trial < 120; ++trial) {
        Graph g = oracle::random_graph(n, p, rng);
        IntegerMatrix a = adjacency_matrix(g);
        const int eta = nullity(a);
        CHECK(eta == oracle::rational_nullity(g));
        CHECK(eta == adjacency_nullity(g));
        auto basis = kernel_basis(a);
        CHECK(static_cast<int>(basis.vectors.size()) == eta);
        for (const auto& v : basis.vectors) {
          // A*v = 0 re-checked here even though kernel_basis verifies it.
          for (const auto& e : matvec(a, v)) CHECK(e == 0);
          mpz_class gcd = 0;
          const mpz_class* lead = nullptr;
          for (const auto& x : v) {
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_mpz_t());
            if (!lead && x != 0) lead = &x;
          }
          CHECK(gcd == 1);
          REQUIRE(lead != nullptr);
          CHECK(*lead > 0);
        }
        ++checked;
      }
    }
  }
  CHECK(checked >= 2500);
}

TEST_CASE("nullity is deterministic and consistent with rank") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 6), 0.5, rng);
    IntegerMatrix a = adjacency_matrix(g);
    auto ef = echelon_form(a);
    CHECK(nullity(a) + ef.rank() == g.order());
    auto b1 = kernel_basis(a);
    auto b2 = kernel_basis(a);
    CHECK(b1.vectors == b2.vectors);
  }
}

TEST_CASE("mod-p rejection is sound") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 9), 0.5, rng);
    if (adjacency_nonsingular_mod_p(g)) CHECK(adjacency_nullity(g) == 0);
    auto v = adjacency_nullity_one_vector(g);
    if (adjacency_nullity(g) == 1) {
      REQUIRE(v.has_value());
      auto basis = kernel_basis(adjacency_matrix(g));
      CHECK(*v == basis.vectors[0]);
    } else {
      CHECK_FALSE(v.has_value());
    }
  }
}
