// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Criterion 3 (the extended census tier) runs only when NUTKIT_EXTENDED=1 is
// set; it needs hours of CPU. Everything else completes in a few minutes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nutkit/canonical.hpp"
#include "nutkit/catalog.hpp"
#include "nutkit/exact_kernel.hpp"
#include "nutkit/generate.hpp"
#include "nutkit/graph.hpp"
#include "nutkit/nut.hpp"
#include "nutkit/symmetry.hpp"
#include "oracle.hpp"

using namespace nutkit;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string name;
  bool ok = true;
  std::string detail;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Criterion(int i, std::string n) : id(i), name(std::move(n)) {}

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }

  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want))) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what + " (got " + std::to_string(got) + ", want " + std::to_string(want) + ")";
    }
  }

  void finish() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok) {
      std::printf("criterion %d: PASS  %-38s [%.1fs]\n", id, name.c_str(), secs);
    } else {
      std::printf("criterion %d: FAIL  %-38s [%.1fs] %s\n", id, name.c_str(), secs,
                  detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
};

int env_workers() {
  const char* w = std::getenv("NUTKIT_WORKERS");
  if (!w) return 1;
  const int v = std::atoi(w);
  return v >= 1 ? v : 1;
}

bool all_nonzero(const std::vector<mpz_class>& v) {
  for (const auto& x : v)
    if (x == 0) return false;
  return true;
}

// Nut graphs found by the fast-tier censuses, reused by criterion 8.
std::map<std::pair<int, int>, std::vector<Graph>> fast_tier_nuts;

std::uint64_t counted_census(int d, int n) {
  CensusOptions opts;
  opts.workers = env_workers();
  auto& bucket = fast_tier_nuts[{d, n}];
  opts.on_nut = [&bucket](const Graph& g) { bucket.push_back(g); };
  return census(d, n, opts);
}

void criterion_1() {
  Criterion c(1, "seed catalog validation");
  try {
    const auto& catalog = load_seed_catalog();
    c.expect_eq(catalog.size(), std::size_t{91}, "catalog size");
    for (const auto& entry : catalog) {
      const auto profile = degree_profile(entry.graph);
      c.expect(profile.is_regular && profile.d == entry.degree,
               entry.label + " regularity");
      c.expect(entry.graph.order() == entry.order, entry.label + " order");
      auto report = classify(entry.graph);
      c.expect(report.classification == NutClass::Nut, entry.label + " nut");
      c.expect(report.nullity == 1, entry.label + " nullity");
      if (report.kernel_witness) {
        c.expect(all_nonzero(*report.kernel_witness), entry.label + " nonzero kernel");
        mpz_class g = 0;
        for (const auto& x : *report.kernel_witness)
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        c.expect(g == 1, entry.label + " primitive kernel");
      } else {
        c.expect(false, entry.label + " missing witness");
      }
    }
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_2() {
  Criterion c(2, "Table-1 reproduction, fast tier");
  try {
    const std::vector<std::array<std::uint64_t, 3>> rows{
        {3, 12, 9}, {4, 8, 1},  {4, 10, 12}, {4, 12, 269}, {5, 10, 9},
        {5, 12, 4}, {5, 14, 25}, {7, 12, 3},  {8, 12, 24},  {8, 13, 0}};
    for (const auto& row : rows) {
      const int d = static_cast<int>(row[0]);
      const int n = static_cast<int>(row[1]);
      c.expect_eq(counted_census(d, n), row[2],
                  "census d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_3() {
  const char* env = std::getenv("NUTKIT_EXTENDED");
  if (!env || std::strcmp(env, "1") != 0) {
    std::printf("criterion 3: SKIP  Table-1 extended tier (opt-in: NUTKIT_EXTENDED=1)\n");
    std::fflush(stdout);
    return;
  }
  Criterion c(3, "Table-1 reproduction, extended tier");
  try {
    const std::vector<std::array<std::uint64_t, 3>> rows{
        {4, 14, 15633}, {4, 15, 1},    {6, 12, 1964}, {6, 13, 79},
        {6, 14, 1872},  {9, 14, 0},    {11, 14, 0},   {11, 16, 3316},
        {10, 15, 173650}, {5, 16, 13530}};
    for (const auto& row : rows) {
      const int d = static_cast<int>(row[0]);
      const int n = static_cast<int>(row[1]);
      CensusOptions opts;
      opts.workers = env_workers();
      c.expect_eq(census(d, n, opts), row[2],
                  "census d=" + std::to_string(d) + " n=" + std::to_string(n));
      std::printf("  extended: d=%d n=%d done\n", d, n);
      std::fflush(stdout);
    }
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_4() {
  Criterion c(4, "Fowler closure over all seeds");
  try {
    for (const auto& entry : load_seed_catalog()) {
      const int d = entry.degree;
      for (int v = 0; v < entry.graph.order() && c.ok; ++v) {
        auto ext = fowler_extend(entry.graph, v); // verifies the kernel transfer
        c.expect(ext.result.order() == entry.order + 2 * d,
                 entry.label + " order growth at v=" + std::to_string(v));
        const auto profile = degree_profile(ext.result);
        c.expect(profile.is_regular && profile.d == d,
                 entry.label + " regular result at v=" + std::to_string(v));
        c.expect(classify(ext.result).classification == NutClass::Nut,
                 entry.label + " nut result at v=" + std::to_string(v));
        for (const auto& e : matvec(adjacency_matrix(ext.result), ext.transferred_kernel))
          if (e != 0) c.expect(false, entry.label + " transfer check");
        auto witness = fowler_detect(ext.result);
        c.expect(witness.has_value(), entry.label + " detect at v=" + std::to_string(v));
        if (witness)
          c.expect(are_isomorphic(witness->base, entry.graph),
                   entry.label + " base recovery at v=" + std::to_string(v));
      }
    }
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_5() {
  Criterion c(5, "existence certificates d=3..11");
  try {
    CertifyOptions strict;
    strict.workers = env_workers();

    // Claimed sets, stated as (threshold, even_only, extras).
    struct Claim {
      int d;
      int threshold;
      bool even_only;
      std::vector<int> extra;
    };
    const std::vector<Claim> claims{
        {5, 10, true, {}}, {6, 12, false, {}}, {7, 12, true, {}},  {8, 14, false, {12}},
        {9, 16, true, {}}, {10, 15, false, {}}, {11, 16, true, {}}};
    for (const auto& claim : claims) {
      auto cert = certify_N(claim.d, strict);
      c.expect(cert.claimed.threshold == claim.threshold &&
                   cert.claimed.even_only == claim.even_only &&
                   cert.claimed.extra == claim.extra,
               "claimed set for d=" + std::to_string(claim.d));
      for (const auto& ex : cert.exclusions) {
        c.expect(ex.mode == ExclusionMode::Strict, "strict exclusion mode");
        c.expect(ex.census_count == 0,
                 "exclusion census d=" + std::to_string(claim.d) + " n=" +
                     std::to_string(ex.order));
      }
      // Window comparison against the stated set on n <= 60.
      for (int n = 1; n <= 60; ++n) {
        const bool stated = admissible_pair(n, claim.d) &&
                            (claim.even_only ? n % 2 == 0 : true) &&
                            (n >= claim.threshold ||
                             std::find(claim.extra.begin(), claim.extra.end(), n) !=
                                 claim.extra.end());
        if (cert.contains(n) != stated) {
          c.expect(false, "window mismatch d=" + std::to_string(claim.d) +
                              " n=" + std::to_string(n));
          break;
        }
      }
    }

    auto rows = n0_n1_table(11, strict);
    const std::vector<std::array<int, 3>> expected{
        {3, 12, 18}, {4, 8, 14},  {5, 10, 10}, {6, 12, 12}, {7, 12, 12},
        {8, 12, 14}, {9, 16, 16}, {10, 15, 15}, {11, 16, 16}};
    c.expect(rows.size() == expected.size(), "n0/n1 row count");
    for (std::size_t i = 0; i < rows.size() && i < expected.size(); ++i)
      c.expect(rows[i].d == expected[i][0] && rows[i].n0 == expected[i][1] &&
                   rows[i].n1 == expected[i][2],
               "n0/n1 row d=" + std::to_string(expected[i][0]));
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_6() {
  Criterion c(6, "smallest regular nut has order 8");
  try {
    for (int n = 1; n <= 7; ++n)
      for (int d = 0; d < n; ++d) {
        if ((n * d) % 2 != 0) continue;
        std::uint64_t nuts = census(d, n);
        if (nuts != 0)
          c.expect(false, "unexpected nut at n=" + std::to_string(n) +
                              " d=" + std::to_string(d));
      }
    c.expect_eq(census(4, 8), std::uint64_t{1}, "census d=4 n=8");
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_7() {
  Criterion c(7, "antiprism family");
  try {
    for (int k = 3; k <= 12; ++k) {
      Graph g = make_antiprism(k);
      c.expect(is_nut_graph(g) == (k % 3 != 0), "nut status at k=" + std::to_string(k));
      c.expect(is_vertex_transitive(g), "vertex transitivity at k=" + std::to_string(k));
    }
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_8() {
  Criterion c(8, "vertex-transitive necessary conditions");
  try {
    for (int d : {2, 4, 6, 8}) {
      auto ce = cocktail_counterexample(d); // verifies A*x = 0 internally
      c.expect(classify(ce.graph).classification != NutClass::Nut,
               "cocktail graph d=" + std::to_string(d));
      int zeros = 0;
      for (const auto& x : ce.kernel_vec)
        if (x == 0) ++zeros;
      c.expect(zeros == d, "cocktail zeros d=" + std::to_string(d));
    }

    c.expect(check_vt_conditions(8, 4).verdict == VTVerdict::PassMod0, "(8,4)");
    c.expect(check_vt_conditions(12, 6).verdict == VTVerdict::PassMod2, "(12,6)");
    c.expect(check_vt_conditions(14, 6).verdict == VTVerdict::FailParity, "(14,6)");
    c.expect(check_vt_conditions(13, 4).verdict == VTVerdict::FailParity, "(13,4)");
    c.expect(check_vt_conditions(12, 3).verdict == VTVerdict::FailOddDegree, "(12,3)");
    c.expect(check_vt_conditions(14, 5).verdict == VTVerdict::FailOddDegree, "(14,5)");
    c.expect(check_vt_conditions(6, 4).verdict == VTVerdict::FailOrderBound, "(6,4)");
    c.expect(check_vt_conditions(8, 6).verdict == VTVerdict::FailOrderBound, "(8,6)");

    int vt_nuts = 0;
    for (const auto& [key, graphs] : fast_tier_nuts) {
      const auto [d, n] = key;
      for (const auto& g : graphs) {
        if (!is_vertex_transitive(g)) continue;
        ++vt_nuts;
        c.expect(d % 2 == 0, "vt nut with odd degree");
        c.expect(n % 2 == 0, "vt nut with odd order");
        const auto verdict = check_vt_conditions(n, d).verdict;
        c.expect(verdict == VTVerdict::PassMod0 || verdict == VTVerdict::PassMod2,
                 "vt nut fails the conditions");
        auto report = classify(g);
        c.expect(report.classification == NutClass::Nut, "vt census graph is a nut");
        bool pm_one = true;
        for (const auto& x : *report.kernel_witness)
          if (x != 1 && x != -1) pm_one = false;
        c.expect(pm_one, "vt nut kernel is not +-1");
        if (!pm_one) continue;
        auto part = sign_partition(g, report);
        c.expect(part.plus_set.size() == part.minus_set.size(), "sign classes unbalanced");
        const auto profile = degree_profile(part.h_plus);
        c.expect(profile.is_regular && profile.d == d / 2 &&
                     part.h_plus.order() == n / 2,
                 "half-subgraph is not (d/2)-regular of order n/2");
      }
    }
    // The antiprism on 8 vertices is the unique quartic nut there, so at
    // least one vertex-transitive nut must show up.
    c.expect(vt_nuts >= 1, "no vertex-transitive nut found in the fast tier");
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

void criterion_9() {
  Criterion c(9, "oracle equivalence");
  try {
    // Exhaustive over all labelled regular graphs for n <= 8, every degree.
    long instances = 0;
    for (int n = 2; n <= 8; ++n)
      for (int d = 0; d < n; ++d) {
        if ((n * d) % 2 != 0) continue;
        oracle::all_labeled_regular(n, d, [&](const Graph& g) {
          ++instances;
          const int eta = oracle::rational_nullity(g);
          if (nullity(adjacency_matrix(g)) != eta) c.expect(false, "nullity mismatch");
          if (adjacency_nullity(g) != eta) c.expect(false, "fast nullity mismatch");
          auto basis = kernel_basis(adjacency_matrix(g));
          if (static_cast<int>(basis.vectors.size()) != eta)
            c.expect(false, "kernel dimension mismatch");
        });
      }
    // Top up with random graphs across degree sequences.
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 4000; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      Graph g = oracle::random_graph(n, 0.2 + 0.15 * (trial % 5), rng);
      ++instances;
      if (nullity(adjacency_matrix(g)) != oracle::rational_nullity(g))
        c.expect(false, "random nullity mismatch");
    }
    c.expect(instances >= 10000, "fewer than 10^4 oracle instances");

    // Canonical class counts against brute-force bucketing for n <= 6.
    const std::array<std::size_t, 6> expected_classes{1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
      std::set<std::vector<std::uint64_t>> brute;
      std::set<std::vector<unsigned char>> certs;
      const int bits = n * (n - 1) / 2;
      for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        brute.insert(oracle::brute_canonical_code(g));
        certs.insert(canonical_form(g).certificate);
      }
      c.expect(brute.size() == certs.size() && brute.size() == expected_classes[n - 1],
               "class count at n=" + std::to_string(n));
    }
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  c.finish();
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
