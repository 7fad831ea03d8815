#include "nutkit/nut.hpp"

#include <algorithm>
#include <bit>

#include "nutkit/exact_kernel.hpp"

namespace nutkit {

namespace {

bool all_nonzero(const std::vector<mpz_class>& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
}

void normalize_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                           47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
                           109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

std::vector<mpz_class> combine(const KernelBasis& basis, const std::vector<mpz_class>& weights) {
  const std::size_t n = basis.vectors[0].size();
  std::vector<mpz_class> v(n, 0);
  for (std::size_t k = 0; k < basis.vectors.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) v[i] += weights[k] * basis.vectors[k][i];
  return v;
}

// Searches the kernel for an all-nonzero vector.  A coordinate on which every
// basis vector vanishes rules one out; otherwise a witness exists, and we look
// for it with prime weights, then small coefficients, then a coordinate sweep
// that cannot fail.
std::optional<std::vector<mpz_class>> core_witness(const KernelBasis& basis) {
  const std::size_t k = basis.vectors.size();
  const std::size_t n = basis.vectors[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    bool forced_zero = true;
    for (const auto& vec : basis.vectors)
      if (vec[i] != 0) {
        forced_zero = false;
        break;
      }
    if (forced_zero) return std::nullopt;
  }

  for (std::size_t shift = 0; shift + k <= std::size(kPrimes) && shift < 32; ++shift) {
    std::vector<mpz_class> w(k);
    for (std::size_t j = 0; j < k; ++j) w[j] = kPrimes[shift + j];
    auto v = combine(basis, w);
    if (all_nonzero(v)) {
      normalize_primitive(v);
      return v;
    }
  }

  for (int bound = 1; bound <= 4; ++bound) {
    std::vector<int> w(k, -bound);
    for (;;) {
      std::vector<mpz_class> weights(w.begin(), w.end());
      auto v = combine(basis, weights);
      if (all_nonzero(v)) {
        normalize_primitive(v);
        return v;
      }
      std::size_t pos = 0;
      while (pos < k && w[pos] == bound) w[pos++] = -bound;
      if (pos == k) break;
      ++w[pos];
    }
  }

  // Sweep: keep a partial combination and fix each zero coordinate in turn.
  // At most n scalars are excluded when choosing c, so some c in [1, n+1] works.
  std::vector<mpz_class> v = basis.vectors[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) continue;
    std::size_t donor = 0;
    while (basis.vectors[donor][i] == 0) ++donor;
    for (int c = 1; c <= static_cast<int>(n) + 1; ++c) {
      std::vector<mpz_class> trial(n);
      bool ok = true;
      for (std::size_t m = 0; m < n; ++m) {
        trial[m] = c * v[m] + basis.vectors[donor][m];
        if (v[m] != 0 && trial[m] == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        v = std::move(trial); // trial[i] = donor[i] != 0 since v[i] = 0
        break;
      }
    }
  }
  if (!all_nonzero(v)) throw std::logic_error("core witness sweep failed");
  normalize_primitive(v);
  return v;
}

} // namespace

NutReport classify(const Graph& g) {
  NutReport report;
  const int n = g.order();
  auto basis = kernel_basis(adjacency_matrix(g));
  report.nullity = static_cast<int>(basis.vectors.size());
  if (report.nullity == 0) {
    report.classification = NutClass::NonSingular;
    return report;
  }
  if (report.nullity == 1) {
    report.kernel_witness = basis.vectors[0];
    report.classification = (n > 1 && all_nonzero(basis.vectors[0]))
                                ? NutClass::Nut
                                : NutClass::SingularNonCore;
    return report;
  }
  auto witness = core_witness(basis);
  if (witness) {
    report.kernel_witness = std::move(*witness);
    report.classification = NutClass::CoreNonNut;
  } else {
    report.kernel_witness = basis.vectors[0];
    report.classification = NutClass::SingularNonCore;
  }
  return report;
}

bool is_nut_graph(const Graph& g) {
  if (g.order() <= 1) return false;
  if (adjacency_nonsingular_mod_p(g)) return false;
  auto v = adjacency_nullity_one_vector(g);
  return v && all_nonzero(*v);
}

FowlerExtension fowler_extend(const Graph& g, int pivot) {
  const int n = g.order();
  if (pivot < 0 || pivot >= n) fail(errc::vertex_out_of_range, "pivot out of range");
  const int d = g.degree(pivot);
  if (d == 0) fail(errc::isolated_pivot, "pivot has no neighbors");
  auto report = classify(g);
  if (report.classification != NutClass::Nut)
    fail(errc::not_a_nut, "base graph is not a nut graph");
  if (n + 2 * d > Graph::max_vertices)
    fail(errc::vertex_out_of_range, "extension exceeds 64 vertices");

  FowlerExtension ext;
  ext.base = g;
  ext.pivot = pivot;
  auto nb = g.neighbors(pivot);
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    ext.neighbors.push_back(u);
  }
  for (int i = 0; i < d; ++i) {
    ext.layer_q.push_back(n + i);
    ext.layer_p.push_back(n + d + i);
    ext.matching.emplace_back(n + i, n + d + i);
  }

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    auto row = g.neighbors(u);
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      if (u < v && u != pivot && v != pivot) edges.emplace_back(u, v);
    }
  }
  for (int i = 0; i < d; ++i) {
    edges.emplace_back(pivot, ext.layer_q[i]);
    edges.emplace_back(ext.layer_p[i], ext.neighbors[i]);
    for (int j = 0; j < d; ++j)
      if (i != j) edges.emplace_back(ext.layer_q[i], ext.layer_p[j]);
  }
  ext.result = Graph::from_edges(n + 2 * d, edges);

  // Transfer the kernel vector: old entries stay, the pivot entry becomes
  // (1-d) times its old value, layer q copies the neighbor entries and layer p
  // repeats the pivot entry.
  const auto& x = *report.kernel_witness;
  ext.transferred_kernel.assign(n + 2 * d, 0);
  for (int u = 0; u < n; ++u) ext.transferred_kernel[u] = x[u];
  ext.transferred_kernel[pivot] = (1 - d) * x[pivot];
  for (int i = 0; i < d; ++i) {
    ext.transferred_kernel[ext.layer_q[i]] = x[ext.neighbors[i]];
    ext.transferred_kernel[ext.layer_p[i]] = x[pivot];
  }
  for (const auto& entry : matvec(adjacency_matrix(ext.result), ext.transferred_kernel))
    if (entry != 0) throw std::logic_error("transferred vector is not in the kernel");
  return ext;
}

namespace {

// Attempts to decode h as an expansion at the given pivot; on success returns
// the contracted base (before the nut check).
std::optional<FowlerWitness> try_decode(const Graph& h, int pivot) {
  const int n = h.order();
  const int d = h.degree(pivot);
  if (d == 0 || n - 2 * d < 1) return std::nullopt;

  std::vector<int> q_layer;
  auto qmask = h.neighbors(pivot);
  auto bits = qmask;
  while (bits) {
    q_layer.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  // Q must be independent and each q must have degree d.
  for (int q : q_layer) {
    if (h.neighbors(q) & qmask) return std::nullopt;
    if (h.degree(q) != d) return std::nullopt;
  }
  // P = neighbors of Q other than the pivot and Q itself.
  Graph::row_t pmask = 0;
  for (int q : q_layer) pmask |= h.neighbors(q);
  pmask &= ~qmask;
  pmask &= ~(Graph::row_t{1} << pivot);
  if (std::popcount(pmask) != d) return std::nullopt;
  std::vector<int> p_layer;
  bits = pmask;
  while (bits) {
    p_layer.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }

  // Q-P must be complete bipartite minus a perfect matching: every q misses
  // exactly one p and vice versa.
  std::vector<int> missed_by_q(d, -1);
  for (int i = 0; i < d; ++i) {
    auto missing = pmask & ~h.neighbors(q_layer[i]);
    if (std::popcount(missing) != 1) return std::nullopt;
    missed_by_q[i] = std::countr_zero(missing);
  }
  std::vector<bool> hit(n, false);
  for (int m : missed_by_q) {
    if (hit[m]) return std::nullopt;
    hit[m] = true;
  }

  // Each p: d-1 neighbors in Q plus exactly one anchor outside Q, P, pivot.
  const Graph::row_t inside = qmask | pmask | (Graph::row_t{1} << pivot);
  std::vector<int> anchor(d, -1);
  Graph::row_t anchors = 0;
  for (int i = 0; i < d; ++i) {
    const int p = p_layer[i];
    if (h.degree(p) != d) return std::nullopt;
    if (std::popcount(h.neighbors(p) & qmask) != d - 1) return std::nullopt;
    auto outside = h.neighbors(p) & ~inside;
    if (std::popcount(outside) != 1) return std::nullopt;
    anchor[i] = std::countr_zero(outside);
    if (anchors & (Graph::row_t{1} << anchor[i])) return std::nullopt;
    anchors |= Graph::row_t{1} << anchor[i];
  }

  // Contract: drop both layers, reattach the pivot to the anchors.
  std::vector<int> old_to_new(n, -1);
  int next = 0;
  const Graph::row_t dropped = qmask | pmask;
  for (int v = 0; v < n; ++v)
    if (!((dropped >> v) & 1u)) old_to_new[v] = next++;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    if (old_to_new[u] < 0) continue;
    auto row = h.neighbors(u);
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      if (u < v && old_to_new[v] >= 0) edges.emplace_back(old_to_new[u], old_to_new[v]);
    }
  }
  for (int a : anchor) edges.emplace_back(old_to_new[pivot], old_to_new[a]);
  FowlerWitness w;
  w.base = Graph::from_edges(next, edges);
  w.pivot = old_to_new[pivot];
  return w;
}

} // namespace

std::optional<FowlerWitness> fowler_detect(const Graph& h) {
  for (int pivot = 0; pivot < h.order(); ++pivot) {
    auto w = try_decode(h, pivot);
    if (!w) continue;
    if (is_nut_graph(w->base)) return w;
  }
  return std::nullopt;
}

bool admissible_pair(int n, int d) {
  return d >= 0 && d < n && (n * d) % 2 == 0;
}

bool OrderSet::contains(int n) const {
  if (even_only && n % 2 != 0) return false;
  if (n >= threshold) return true;
  return std::binary_search(members_below_threshold.begin(), members_below_threshold.end(), n);
}

PairClass classify_pair(int n, int d, const OrderSet& realizable) {
  if (!admissible_pair(n, d) || !realizable.contains(n)) return PairClass::NotRealisable;
  return realizable.contains(n - 2 * d) ? PairClass::CPair : PairClass::SeedPair;
}

} // namespace nutkit
