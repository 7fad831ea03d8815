#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "nutkit/graph.hpp"

namespace nutkit {

enum class ComplementMode {
  Auto, // complement when d > (n-1)/2
  Off,
  On,
};

struct GenSpec {
  int n = 0;
  int d = 0;
  int min_girth = 0; // 0 or 3 means unconstrained
  bool connected_only = false;
  ComplementMode complement = ComplementMode::Auto;
};

struct EnumOptions {
  int workers = 1;
  // Visits are serialized through one lock unless the callback is declared
  // safe for concurrent invocation.
  bool concurrent_visits = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Visits every isomorphism class matching the spec exactly once and returns
// the number of graphs emitted.  Emission order is deterministic at one
// worker; any worker count yields the same multiset.
std::uint64_t enumerate(const GenSpec& spec, const std::function<void(const Graph&)>& visit,
                        const EnumOptions& options = {});

} // namespace nutkit
