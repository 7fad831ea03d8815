#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nutkit/canonical.hpp"
#include "nutkit/catalog.hpp"
#include "oracle.hpp"

using namespace nutkit;

namespace {

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

} // namespace

TEST_CASE("canonical certificates are relabeling-invariant") {
  std::mt19937 rng(17);
  const Graph& g = load_seed_catalog()[3].graph; // 4-regular order 8
  auto cert = canonical_form(g).certificate;
  for (int trial = 0; trial < 25; ++trial)
    CHECK(canonical_form(shuffled(g, rng)).certificate == cert);
}

TEST_CASE("distinct graphs get distinct certificates") {
  CHECK(canonical_form(make_complete(4)).certificate != canonical_form(make_cycle(4)).certificate);
}

TEST_CASE("all 11 graphs on 4 vertices are distinguished") {
  // Enumerate all labelled graphs on 4 vertices, bucket both by brute-force
  // minimum code and by the library certificate.
  std::set<std::vector<std::uint64_t>> brute;
  std::set<std::vector<unsigned char>> certs;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, ++bit)
        if ((mask >> bit) & 1) edges.emplace_back(i, j);
    Graph g = Graph::from_edges(4, edges);
    brute.insert(oracle::brute_canonical_code(g));
    certs.insert(canonical_form(g).certificate);
  }
  CHECK(brute.size() == 11);
  CHECK(certs.size() == 11);
}

TEST_CASE("are_isomorphic") {
  std::mt19937 rng(23);
  SUBCASE("shuffled copies are isomorphic") {
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 10), 0.5, rng);
      CHECK(are_isomorphic(g, shuffled(g, rng)));
    }
  }
  SUBCASE("antiprism(4) vs the cube graph") {
    Graph cube = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                       {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                       {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK_FALSE(are_isomorphic(make_antiprism(4), cube));
    CHECK_FALSE(oracle::brute_isomorphic(make_antiprism(4), cube));
  }
  SUBCASE("K2 vs empty graph on two vertices") {
    CHECK_FALSE(are_isomorphic(Graph::from_edges(2, {{0, 1}}), Graph::empty(2)));
  }
  SUBCASE("agreement with brute force on n <= 5 pairs") {
    for (int trial = 0; trial < 300; ++trial) {
      int n = 2 + static_cast<int>(rng() % 4);
      Graph a = oracle::random_graph(n, 0.5, rng);
      Graph b = oracle::random_graph(n, 0.5, rng);
      CHECK(are_isomorphic(a, b) == oracle::brute_isomorphic(a, b));
    }
  }
}

TEST_CASE("automorphism generators produce correct orbits") {
  auto orbits_count = [](const Graph& g) {
    auto form = canonical_form(g);
    auto orbit = vertex_orbits(g.order(), form.aut_generators);
    std::set<int> roots(orbit.begin(), orbit.end());
    return roots.size();
  };
  CHECK(orbits_count(make_cycle(5)) == 1);
  CHECK(orbits_count(make_path(3)) == 2);
  CHECK(orbits_count(make_antiprism(4)) == 1);
  CHECK(orbits_count(make_complete(6)) == 1);
  CHECK(orbits_count(make_complete_minus_matching(8)) == 1);
  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(orbits_count(star) == 2);
}
