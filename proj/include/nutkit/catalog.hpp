#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nutkit/generate.hpp"
#include "nutkit/graph.hpp"
#include "nutkit/nut.hpp"

namespace nutkit {

struct SeedEntry {
  int degree = 0;
  int order = 0;
  Graph graph;
  std::string label;
};

// The embedded catalog, parsed and fully validated (degree, order, nut
// classification) on first use; throws catalog_corrupt if any entry fails.
const std::vector<SeedEntry>& load_seed_catalog();

struct CensusOptions {
  int workers = 1;
  std::optional<double> budget_seconds;
  std::function<void(const Graph&)> on_nut; // called for every nut found
};

// Number of isomorphism classes of d-regular nut graphs of order n.
std::uint64_t census(int d, int n, const CensusOptions& options = {});

enum class ExclusionMode { Strict, Trusting };

struct Exclusion {
  int order = 0;
  std::uint64_t census_count = 0;
  ExclusionMode mode = ExclusionMode::Strict;
};

struct ClaimedSet {
  int threshold = 0;      // every admissible order >= threshold is realizable
  bool even_only = false; // parity restriction (odd degrees)
  std::vector<int> extra;    // realizable orders below the threshold
  std::vector<int> excluded; // admissible non-realizable orders below it
};

/// Machine-checkable record that the realizable orders of d-regular nut
/// graphs are exactly the claimed set: every claimed order is reachable from
/// a validated seed by repeated degree-preserving expansion (+2d vertices per
/// step), and every excluded order carries an exhaustive census of zero.
struct ExistenceCertificate {
  int degree = 0;
  std::vector<int> base_orders;
  int step = 0; // 2 * degree
  ClaimedSet claimed;
  std::vector<std::pair<int, std::string>> seeds; // (order, graph6)
  std::vector<Exclusion> exclusions;

  bool contains(int n) const;
  OrderSet order_set() const;
};

struct CertifyOptions {
  ExclusionMode mode = ExclusionMode::Strict;
  int workers = 1;
  std::optional<double> budget_seconds; // per exclusion census
};

ExistenceCertificate certify_N(int d, const CertifyOptions& options = {});
ExistenceCertificate certify_N(int d, const std::vector<SeedEntry>& seeds,
                               const CertifyOptions& options = {});

// Canonical JSON rendering: fixed field order, two-space indentation,
// newline-terminated.
std::string certificate_to_json(const ExistenceCertificate& cert);

struct N0N1Row {
  int d = 0;
  int n0 = 0; // smallest realizable order
  int n1 = 0; // smallest realizable order beyond which every admissible order works
};

std::vector<N0N1Row> n0_n1_table(int max_d, const CertifyOptions& options = {});

} // namespace nutkit
