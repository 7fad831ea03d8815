#pragma once

#include <vector>

#include <gmpxx.h>

#include "nutkit/graph.hpp"
#include "nutkit/nut.hpp"

namespace nutkit {

bool is_vertex_transitive(const Graph& g);

enum class VTVerdict { PassMod0, PassMod2, FailOddDegree, FailParity, FailOrderBound };

struct VTConditions {
  int n = 0;
  int d = 0;
  VTVerdict verdict = VTVerdict::FailOddDegree;
};

// Necessary conditions on (order, degree) for a vertex-transitive nut graph:
// d must be even; for d = 0 mod 4, n must be even with n >= d+4; for
// d = 2 mod 4, n must be 0 mod 4 with n >= d+6.
VTConditions check_vt_conditions(int n, int d);

struct SignPartition {
  std::vector<int> plus_set;
  std::vector<int> minus_set;
  Graph h_plus; // subgraph induced on plus_set, relabelled in ascending order
};

// Splits the vertices by the sign of a +-1 kernel vector; requires a Nut
// report whose witness has every entry in {+1, -1}.  For regular hosts of
// even degree the local balance (d/2 positive, d/2 negative neighbors) is
// verified along the way.
SignPartition sign_partition(const Graph& g, const NutReport& report);

struct CocktailCounterexample {
  Graph graph;                       // complete graph of order d+2 minus a perfect matching
  std::vector<mpz_class> kernel_vec; // +1 on vertex 0, -1 on vertex d+1, zeros elsewhere
};

// The unique vertex-transitive graph of order d+2 together with a kernel
// vector that has zero entries, witnessing that a vertex-transitive nut graph
// of order d+2 is impossible.  Verified exactly before returning.
CocktailCounterexample cocktail_counterexample(int d);

} // namespace nutkit
