#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "nutkit/graph.hpp"

namespace nutkit {

enum class NutClass { NonSingular, SingularNonCore, CoreNonNut, Nut };

struct NutReport {
  int nullity = 0;
  NutClass classification = NutClass::NonSingular;
  // Primitive kernel vector, present whenever nullity >= 1.  For Nut and
  // CoreNonNut verdicts every entry is nonzero.
  std::optional<std::vector<mpz_class>> kernel_witness;
};

NutReport classify(const Graph& g);

// Equivalent to classify(g).classification == NutClass::Nut, on the fast path
// used by censuses: mod-p rejection first, exact elimination for survivors.
bool is_nut_graph(const Graph& g);

/// Expansion of a nut graph at a pivot: the pivot's edges are rerouted through
/// two new layers of deg(pivot) vertices spanning a complete bipartite graph
/// minus a perfect matching.  Original vertices keep their labels; layer_q[i]
/// is matched to layer_p[i], and layer_p[i] is attached to the pivot's former
/// neighbor neighbors[i].
struct FowlerExtension {
  Graph base;
  int pivot = 0;
  Graph result;
  std::vector<int> neighbors; // pivot's neighbors in the base, ascending
  std::vector<int> layer_q;
  std::vector<int> layer_p;
  std::vector<std::pair<int, int>> matching; // (layer_q[i], layer_p[i])
  std::vector<mpz_class> transferred_kernel; // exact kernel vector of result
};

FowlerExtension fowler_extend(const Graph& g, int pivot);

struct FowlerWitness {
  Graph base;
  int pivot = 0;
};

// Searches pivots in ascending order for a decomposition of h as an expansion
// of a smaller nut graph; returns the first witness found.
std::optional<FowlerWitness> fowler_detect(const Graph& h);

enum class PairClass { NotRealisable, SeedPair, CPair };

// Membership view over a set of realizable orders for one degree.
struct OrderSet {
  std::vector<int> members_below_threshold; // sorted
  int threshold = 0;                        // every admissible order >= threshold is in
  bool even_only = false;

  bool contains(int n) const;
};

PairClass classify_pair(int n, int d, const OrderSet& realizable);

bool admissible_pair(int n, int d);

} // namespace nutkit
