#include "nutkit/symmetry.hpp"

#include <algorithm>
#include <bit>

#include "nutkit/canonical.hpp"
#include "nutkit/exact_kernel.hpp"

namespace nutkit {

bool is_vertex_transitive(const Graph& g) {
  auto form = canonical_form(g);
  auto orbit = vertex_orbits(g.order(), form.aut_generators);
  for (int v = 1; v < g.order(); ++v)
    if (orbit[v] != orbit[0]) return false;
  return true;
}

VTConditions check_vt_conditions(int n, int d) {
  VTConditions c;
  c.n = n;
  c.d = d;
  if (d % 2 != 0) {
    c.verdict = VTVerdict::FailOddDegree;
  } else if (d % 4 == 0) {
    if (n % 2 != 0)
      c.verdict = VTVerdict::FailParity;
    else
      c.verdict = n >= d + 4 ? VTVerdict::PassMod0 : VTVerdict::FailOrderBound;
  } else {
    if (n % 4 != 0)
      c.verdict = VTVerdict::FailParity;
    else
      c.verdict = n >= d + 6 ? VTVerdict::PassMod2 : VTVerdict::FailOrderBound;
  }
  return c;
}

SignPartition sign_partition(const Graph& g, const NutReport& report) {
  if (report.classification != NutClass::Nut || !report.kernel_witness)
    fail(errc::not_a_nut, "sign partition requires a nut report");
  const auto& x = *report.kernel_witness;
  for (const auto& entry : x)
    if (entry != 1 && entry != -1)
      fail(errc::not_plus_minus_one, "kernel entries are not all +-1");

  SignPartition part;
  for (int v = 0; v < g.order(); ++v)
    (x[v] == 1 ? part.plus_set : part.minus_set).push_back(v);

  const auto profile = degree_profile(g);
  if (profile.is_regular && profile.d % 2 == 0) {
    for (int v = 0; v < g.order(); ++v) {
      int plus = 0;
      auto nb = g.neighbors(v);
      while (nb) {
        const int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (x[w] == 1) ++plus;
      }
      if (2 * plus != profile.d)
        throw std::logic_error("neighborhood of a +-1 kernel vector is unbalanced");
    }
  }

  std::vector<int> new_label(g.order(), -1);
  for (std::size_t i = 0; i < part.plus_set.size(); ++i) new_label[part.plus_set[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : part.plus_set) {
    auto nb = g.neighbors(u);
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (new_label[w] >= 0 && u < w) edges.emplace_back(new_label[u], new_label[w]);
    }
  }
  part.h_plus = Graph::from_edges(static_cast<int>(part.plus_set.size()), edges);
  return part;
}

CocktailCounterexample cocktail_counterexample(int d) {
  if (d < 2 || d % 2 != 0) fail(errc::odd_degree, "degree must be even and at least 2");
  CocktailCounterexample out;
  out.graph = make_complete_minus_matching(d + 2);
  out.kernel_vec.assign(d + 2, 0);
  out.kernel_vec[0] = 1;
  out.kernel_vec[d + 1] = -1;
  for (const auto& entry : matvec(adjacency_matrix(out.graph), out.kernel_vec))
    if (entry != 0) throw std::logic_error("cocktail kernel vector fails A*x = 0");
  if (classify(out.graph).classification == NutClass::Nut)
    throw std::logic_error("cocktail-party graph misclassified as a nut");
  return out;
}

} // namespace nutkit
