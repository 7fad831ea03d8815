#include "nutkit/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>

#include <json.hpp>

#include "nutkit/detail/catalog_data.hpp"

namespace nutkit {

const std::vector<SeedEntry>& load_seed_catalog() {
  static std::mutex mutex;
  static std::vector<SeedEntry> catalog;
  static bool loaded = false;
  std::lock_guard<std::mutex> lock(mutex);
  if (loaded) return catalog;

  std::size_t count = 0;
  const detail::RawSeed* raw = detail::raw_seed_catalog(&count);
  std::vector<SeedEntry> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = raw[i];
    SeedEntry entry;
    entry.degree = r.degree;
    entry.order = r.order;
    entry.label = "seed d=" + std::to_string(r.degree) + " order=" + std::to_string(r.order);
    try {
      entry.graph = parse_adjacency_list(r.text);
    } catch (const error& e) {
      fail(errc::catalog_corrupt, entry.label + ": " + e.what());
    }
    if (entry.graph.order() != r.order)
      fail(errc::catalog_corrupt, entry.label + ": order mismatch");
    const auto profile = degree_profile(entry.graph);
    if (!profile.is_regular || profile.d != r.degree)
      fail(errc::catalog_corrupt, entry.label + ": not " + std::to_string(r.degree) + "-regular");
    if (classify(entry.graph).classification != NutClass::Nut)
      fail(errc::catalog_corrupt, entry.label + ": not a nut graph");
    entries.push_back(std::move(entry));
  }
  catalog = std::move(entries);
  loaded = true;
  return catalog;
}

std::uint64_t census(int d, int n, const CensusOptions& options) {
  if (!admissible_pair(n, d) || n > Graph::max_vertices)
    fail(errc::inadmissible_pair, "no d-regular graph has n=" + std::to_string(n) +
                                      " d=" + std::to_string(d));
  GenSpec spec;
  spec.n = n;
  spec.d = d;
  EnumOptions eopts;
  eopts.workers = options.workers;
  if (options.budget_seconds)
    eopts.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(*options.budget_seconds));
  std::uint64_t nuts = 0;
  std::mutex count_mutex;
  enumerate(
      spec,
      [&](const Graph& g) {
        if (!is_nut_graph(g)) return;
        std::lock_guard<std::mutex> lock(count_mutex);
        ++nuts;
        if (options.on_nut) options.on_nut(g);
      },
      eopts);
  return nuts;
}

bool ExistenceCertificate::contains(int n) const {
  if (!admissible_pair(n, degree)) return false;
  if (claimed.even_only && n % 2 != 0) return false;
  if (n >= claimed.threshold) return true;
  return std::find(claimed.extra.begin(), claimed.extra.end(), n) != claimed.extra.end();
}

OrderSet ExistenceCertificate::order_set() const {
  OrderSet s;
  s.threshold = claimed.threshold;
  s.even_only = claimed.even_only;
  s.members_below_threshold = claimed.extra;
  return s;
}

ExistenceCertificate certify_N(int d, const CertifyOptions& options) {
  const auto& catalog = load_seed_catalog();
  std::vector<SeedEntry> seeds;
  for (const auto& entry : catalog)
    if (entry.degree == d) seeds.push_back(entry);
  return certify_N(d, seeds, options);
}

ExistenceCertificate certify_N(int d, const std::vector<SeedEntry>& seeds,
                               const CertifyOptions& options) {
  if (d < 1) fail(errc::inadmissible_pair, "degree must be positive");
  if (seeds.empty()) fail(errc::insufficient_seeds, "no seeds for degree " + std::to_string(d));

  ExistenceCertificate cert;
  cert.degree = d;
  cert.step = 2 * d;

  for (const auto& seed : seeds) {
    if (seed.degree != d) fail(errc::insufficient_seeds, "seed of wrong degree");
    const auto profile = degree_profile(seed.graph);
    if (!profile.is_regular || profile.d != d || seed.graph.order() != seed.order)
      fail(errc::catalog_corrupt, seed.label + ": seed fails validation");
    cert.base_orders.push_back(seed.order);
    cert.seeds.emplace_back(seed.order, to_graph6(seed.graph));
  }
  std::sort(cert.base_orders.begin(), cert.base_orders.end());
  std::sort(cert.seeds.begin(), cert.seeds.end());

  // Orders reachable from a seed by +2d steps cover a residue class upward;
  // the claimed set has a threshold once every admissible residue class
  // mod 2d has a base.
  cert.claimed.even_only = d % 2 != 0;
  std::map<int, int> min_base_for_residue;
  for (int b : cert.base_orders) {
    const int r = b % cert.step;
    auto it = min_base_for_residue.find(r);
    if (it == min_base_for_residue.end() || b < it->second) min_base_for_residue[r] = b;
  }
  const int parity_step = cert.claimed.even_only ? 2 : 1;
  const int first_admissible = cert.claimed.even_only ? (d + 1 + (d + 1) % 2) : d + 1;
  std::vector<int> residues;
  for (int r = first_admissible; r < first_admissible + cert.step; r += parity_step)
    residues.push_back(r % cert.step);
  for (int r : residues)
    if (!min_base_for_residue.count(r))
      fail(errc::insufficient_seeds, "degree " + std::to_string(d) +
                                         ": no seed covers residue " + std::to_string(r) +
                                         " mod " + std::to_string(cert.step));

  int largest_unreachable = 0;
  for (int r : residues) {
    const int base = min_base_for_residue[r];
    // Admissible orders below `base` in this residue class are unreachable.
    for (int m = base - cert.step; m > d; m -= cert.step)
      largest_unreachable = std::max(largest_unreachable, m);
  }
  int threshold = largest_unreachable + 1;
  // The threshold is quoted as the least realizable order past all gaps.
  while (!min_base_for_residue.count(threshold % cert.step) ||
         min_base_for_residue[threshold % cert.step] > threshold)
    ++threshold;
  cert.claimed.threshold = threshold;

  auto reachable = [&](int m) {
    auto it = min_base_for_residue.find(m % cert.step);
    return it != min_base_for_residue.end() && it->second <= m;
  };
  for (int m = d + 1; m < threshold; ++m) {
    if (!admissible_pair(m, d)) continue;
    if (reachable(m))
      cert.claimed.extra.push_back(m);
    else
      cert.claimed.excluded.push_back(m);
  }

  for (int m : cert.claimed.excluded) {
    Exclusion ex;
    ex.order = m;
    ex.mode = options.mode;
    if (options.mode == ExclusionMode::Strict) {
      CensusOptions copts;
      copts.workers = options.workers;
      copts.budget_seconds = options.budget_seconds;
      try {
        ex.census_count = census(d, m, copts);
      } catch (const error& e) {
        if (e.code() == errc::budget_exceeded)
          fail(errc::exclusion_unverified, "census for excluded order " + std::to_string(m) +
                                               " exceeded its budget");
        throw;
      }
      if (ex.census_count != 0)
        throw std::logic_error("excluded order has a nut graph; certificate impossible");
    } else {
      ex.census_count = 0;
    }
    cert.exclusions.push_back(ex);
  }
  return cert;
}

std::string certificate_to_json(const ExistenceCertificate& cert) {
  nlohmann::ordered_json j;
  j["degree"] = cert.degree;
  nlohmann::ordered_json claimed;
  claimed["threshold"] = cert.claimed.threshold;
  claimed["parity"] = cert.claimed.even_only ? "even" : "all";
  claimed["extra"] = cert.claimed.extra;
  claimed["excluded"] = cert.claimed.excluded;
  j["claimed_set"] = claimed;
  nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
  for (const auto& [order, g6] : cert.seeds) {
    nlohmann::ordered_json s;
    s["order"] = order;
    s["graph6"] = g6;
    seeds.push_back(s);
  }
  j["seeds"] = seeds;
  nlohmann::ordered_json exclusions = nlohmann::ordered_json::array();
  for (const auto& ex : cert.exclusions) {
    nlohmann::ordered_json e;
    e["order"] = ex.order;
    e["census_count"] = ex.census_count;
    e["mode"] = ex.mode == ExclusionMode::Strict ? "strict" : "trusting";
    exclusions.push_back(e);
  }
  j["exclusions"] = exclusions;
  return j.dump(2) + "\n";
}

std::vector<N0N1Row> n0_n1_table(int max_d, const CertifyOptions& options) {
  std::vector<N0N1Row> rows;
  for (int d = 3; d <= max_d; ++d) {
    auto cert = certify_N(d, options);
    N0N1Row row;
    row.d = d;
    row.n0 = cert.claimed.extra.empty() ? cert.claimed.threshold : cert.claimed.extra.front();
    row.n1 = cert.claimed.threshold;
    rows.push_back(row);
  }
  return rows;
}

} // namespace nutkit
