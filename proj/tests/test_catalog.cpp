#include <doctest.h>

#include <map>
#include <set>

#include "nutkit/catalog.hpp"
#include "nutkit/nut.hpp"

using namespace nutkit;

TEST_CASE("seed catalog loads and validates") {
  const auto& catalog = load_seed_catalog();
  CHECK(catalog.size() == 91);
  std::map<int, int> per_degree;
  for (const auto& e : catalog) ++per_degree[e.degree];
  const std::map<int, int> expected{{3, 3},  {4, 8},  {5, 5},  {6, 12}, {7, 7},
                                    {8, 16}, {9, 9},  {10, 20}, {11, 11}};
  CHECK(per_degree == expected);

  bool found_5_10 = false, found_11_36 = false;
  for (const auto& e : catalog) {
    if (e.degree == 5 && e.order == 10) found_5_10 = true;
    if (e.degree == 11 && e.order == 36) found_11_36 = true;
  }
  CHECK(found_5_10);
  CHECK(found_11_36);
}

TEST_CASE("certify_N basics") {
  CertifyOptions trusting;
  trusting.mode = ExclusionMode::Trusting;

  SUBCASE("d=5 claims all even orders from 10") {
    auto cert = certify_N(5, trusting);
    CHECK(cert.claimed.threshold == 10);
    CHECK(cert.claimed.even_only);
    CHECK(cert.claimed.extra.empty());
    CHECK(cert.claimed.excluded == std::vector<int>{6, 8});
    CHECK(cert.base_orders == std::vector<int>{10, 12, 14, 16, 18});
    CHECK(cert.contains(10));
    CHECK(cert.contains(1000));
    CHECK_FALSE(cert.contains(8));
    CHECK_FALSE(cert.contains(11));
  }
  SUBCASE("d=8 keeps order 12 as an island") {
    auto cert = certify_N(8, trusting);
    CHECK(cert.claimed.threshold == 14);
    CHECK_FALSE(cert.claimed.even_only);
    CHECK(cert.claimed.extra == std::vector<int>{12});
    CHECK(cert.claimed.excluded == std::vector<int>{9, 10, 11, 13});
    CHECK(cert.contains(12));
    CHECK_FALSE(cert.contains(13));
    CHECK(cert.contains(28));
  }
  SUBCASE("missing seed breaks coverage") {
    std::vector<SeedEntry> seeds;
    for (const auto& e : load_seed_catalog())
      if (e.degree == 5 && e.order != 14) seeds.push_back(e);
    try {
      certify_N(5, seeds, trusting);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::insufficient_seeds);
    }
  }
  SUBCASE("strict mode recomputes small exclusions") {
    CertifyOptions strict;
    auto cert = certify_N(5, strict);
    REQUIRE(cert.exclusions.size() == 2);
    for (const auto& ex : cert.exclusions) {
      CHECK(ex.census_count == 0);
      CHECK(ex.mode == ExclusionMode::Strict);
    }
  }
}

TEST_CASE("certificate JSON is canonical") {
  CertifyOptions trusting;
  trusting.mode = ExclusionMode::Trusting;
  auto cert = certify_N(3, trusting);
  auto json = certificate_to_json(cert);
  CHECK(json.back() == '\n');
  // Field order is fixed by the schema.
  auto deg_pos = json.find("\"degree\"");
  auto claimed_pos = json.find("\"claimed_set\"");
  auto seeds_pos = json.find("\"seeds\"");
  auto excl_pos = json.find("\"exclusions\"");
  CHECK(deg_pos < claimed_pos);
  CHECK(claimed_pos < seeds_pos);
  CHECK(seeds_pos < excl_pos);
  CHECK(json.find("\"threshold\": 18") != std::string::npos);
  CHECK(json.find("\"parity\": \"even\"") != std::string::npos);
  // Byte stability.
  CHECK(json == certificate_to_json(certify_N(3, trusting)));
}

TEST_CASE("census reproduces small table entries") {
  CHECK(census(4, 8) == 1);
  CHECK(census(5, 12) == 4);
  CHECK(census(7, 12) == 3);
  try {
    census(5, 9);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::inadmissible_pair);
  }
}

TEST_CASE("census budget can trip") {
  CensusOptions opts;
  opts.budget_seconds = 0.0;
  try {
    census(4, 14, opts);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
}

TEST_CASE("n0/n1 table matches the known values") {
  CertifyOptions trusting;
  trusting.mode = ExclusionMode::Trusting;
  auto rows = n0_n1_table(11, trusting);
  const std::vector<std::array<int, 3>> expected{
      {3, 12, 18}, {4, 8, 14},  {5, 10, 10}, {6, 12, 12}, {7, 12, 12},
      {8, 12, 14}, {9, 16, 16}, {10, 15, 15}, {11, 16, 16}};
  REQUIRE(rows.size() == expected.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].d == expected[i][0]);
    CHECK(rows[i].n0 == expected[i][1]);
    CHECK(rows[i].n1 == expected[i][2]);
  }
}

TEST_CASE("seed pairs per degree follow the residue pattern") {
  CertifyOptions trusting;
  trusting.mode = ExclusionMode::Trusting;
  for (int d = 5; d <= 11; ++d) {
    auto cert = certify_N(d, trusting);
    auto orders = cert.order_set();
    std::vector<int> seed_orders;
    for (int n = d + 1; n <= cert.claimed.threshold + 2 * d; ++n)
      if (classify_pair(n, d, orders) == PairClass::SeedPair) seed_orders.push_back(n);
    const int expected = d % 2 == 1 ? d : 2 * d;
    CAPTURE(d);
    CHECK(static_cast<int>(seed_orders.size()) == expected);
    std::set<int> residues;
    for (int n : seed_orders) residues.insert(n % (2 * d));
    CHECK(static_cast<int>(residues.size()) == expected);
    // Beyond the window every pair is a C-pair, so the list is complete.
    for (int n = cert.claimed.threshold + 2 * d; n < cert.claimed.threshold + 4 * d; ++n)
      if (admissible_pair(n, d)) CHECK(classify_pair(n, d, orders) != PairClass::SeedPair);
  }
}
