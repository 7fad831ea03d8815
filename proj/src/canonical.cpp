#include "nutkit/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace nutkit {

namespace {

using mask_t = std::uint64_t;

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  bool same(int a, int b) { return find(a) == find(b); }
};

// Ordered partition of the vertex set into cells.
using Partition = std::vector<mask_t>;

// One full refinement pass: split every cell by the vector of neighbor counts
// against all current cells, ordering the pieces by signature.  Iterated to a
// fixpoint this yields the standard equitable refinement, and both the split
// and the ordering are isomorphism-invariant.
void refine(const Graph& g, Partition& cells) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    Partition next;
    next.reserve(cells.size());
    for (mask_t cell : cells) {
      if (std::popcount(cell) <= 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, mask_t> split;
      mask_t bits = cell;
      while (bits) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        std::vector<int> sig;
        sig.reserve(cells.size());
        for (mask_t other : cells) sig.push_back(std::popcount(g.neighbors(v) & other));
        split[sig] |= mask_t{1} << v;
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, part] : split) next.push_back(part);
    }
    cells.swap(next);
  }
  (void)n;
}

struct Search {
  const Graph& g;
  int n;
  std::vector<int> path; // individualized vertices, root to current node

  bool have_first = false;
  std::vector<mask_t> first_code;
  std::vector<int> first_labeling;
  std::vector<mask_t> best_code;
  std::vector<int> best_labeling;
  std::vector<std::vector<int>> generators;

  explicit Search(const Graph& graph) : g(graph), n(graph.order()) {}

  std::vector<mask_t> leaf_code(const std::vector<int>& labeling) const {
    std::vector<int> label_of(n);
    for (int k = 0; k < n; ++k) label_of[labeling[k]] = k;
    std::vector<mask_t> code(n, 0);
    for (int k = 0; k < n; ++k) {
      mask_t row = g.neighbors(labeling[k]);
      while (row) {
        const int v = std::countr_zero(row);
        row &= row - 1;
        code[k] |= mask_t{1} << label_of[v];
      }
    }
    return code;
  }

  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    // Both labelings produce the same code, so mapping a[k] -> b[k] preserves
    // adjacency; verify anyway before trusting it.
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[a[k]] = b[k];
    bool identity = true;
    for (int v = 0; v < n; ++v)
      if (perm[v] != v) {
        identity = false;
        break;
      }
    if (identity) return;
    for (int v = 0; v < n; ++v) {
      mask_t image = 0;
      mask_t row = g.neighbors(v);
      while (row) {
        const int w = std::countr_zero(row);
        row &= row - 1;
        image |= mask_t{1} << perm[w];
      }
      if (image != g.neighbors(perm[v])) throw std::logic_error("bogus automorphism");
    }
    generators.push_back(std::move(perm));
  }

  void handle_leaf(const Partition& cells) {
    std::vector<int> labeling;
    labeling.reserve(n);
    for (mask_t cell : cells) labeling.push_back(std::countr_zero(cell));
    auto code = leaf_code(labeling);
    if (!have_first) {
      have_first = true;
      first_code = code;
      first_labeling = labeling;
      best_code = std::move(code);
      best_labeling = std::move(labeling);
      return;
    }
    if (code == first_code) record_automorphism(first_labeling, labeling);
    if (code < best_code) {
      best_code = std::move(code);
      best_labeling = std::move(labeling);
    } else if (code == best_code && best_labeling != labeling && code != first_code) {
      record_automorphism(best_labeling, labeling);
    }
  }

  // Orbits of the subgroup fixing the current path pointwise.
  UnionFind path_orbits() const {
    UnionFind uf(n);
    for (const auto& perm : generators) {
      bool fixes = true;
      for (int p : path)
        if (perm[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) uf.unite(v, perm[v]);
    }
    return uf;
  }

  void dfs(Partition cells) {
    refine(g, cells);
    if (static_cast<int>(cells.size()) == n) {
      handle_leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;

    std::vector<int> tried;
    std::size_t gens_seen = generators.size();
    UnionFind uf = path_orbits();
    mask_t bits = cells[target];
    while (bits) {
      const int v = std::countr_zero(bits);
      bits &= bits - 1;
      if (generators.size() != gens_seen) {
        uf = path_orbits();
        gens_seen = generators.size();
      }
      bool skip = false;
      for (int u : tried)
        if (uf.same(u, v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      tried.push_back(v);

      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(mask_t{1} << v);
          child.push_back(cells[i] & ~(mask_t{1} << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      path.push_back(v);
      dfs(std::move(child));
      path.pop_back();
    }
  }
};

CanonicalForm run_search(const Graph& g, Partition initial) {
  Search search(g);
  search.dfs(std::move(initial));

  CanonicalForm form;
  form.canonical_labeling = search.best_labeling;
  form.aut_generators = std::move(search.generators);
  const int n = g.order();
  form.certificate.reserve(1 + 8 * n);
  form.certificate.push_back(static_cast<unsigned char>(n));
  for (mask_t row : search.best_code)
    for (int b = 0; b < 8; ++b) form.certificate.push_back((row >> (8 * b)) & 0xff);
  return form;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
  Partition initial{(g.order() >= 64 ? ~mask_t{0} : ((mask_t{1} << g.order()) - 1))};
  return run_search(g, std::move(initial));
}

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order())
    fail(errc::dimension_mismatch, "one color per vertex required");
  std::map<int, mask_t> by_color;
  for (int v = 0; v < g.order(); ++v) by_color[colors[v]] |= mask_t{1} << v;
  Partition initial;
  for (auto& [c, cell] : by_color) initial.push_back(cell);
  return run_search(g, std::move(initial));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& generators) {
  UnionFind uf(n);
  for (const auto& perm : generators)
    for (int v = 0; v < n; ++v) uf.unite(v, perm[v]);
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = uf.find(v);
  return orbit;
}

} // namespace nutkit
