#include "nutkit/generate.hpp"

#include <atomic>
#include <bit>
#include <cstring>
#include <mutex>
#include <thread>
#include <vector>

namespace nutkit {

namespace {

using mask_t = std::uint64_t;

// Orderly generation of d-regular graphs on n labelled vertices.
//
// A graph is encoded as the column-major upper triangle of its adjacency
// matrix, read as a bit string; the canonical representative of an
// isomorphism class is the labelling whose string is lexicographically
// largest.  Vertices are added one at a time together with their back-edges
// (one column of the string), so every prefix of a canonical string is
// reachable, and a prefix whose partial graph already admits a lex-greater
// relabelling can be discarded: deleting the last edge of a canonical string
// leaves a canonical string.
//
// The expensive part is recognising such prefixes.  Instead of searching for
// a lex-greater relabelling from scratch at every column, the generator
// carries the frontier of all partial relabellings that tie with the current
// string.  Adding a column extends each tied relabelling by one label: an
// extension that beats the new column kills the node, extensions that tie
// ride along, the rest die.  A node accepted with a complete frontier needs
// no further canonicity test.  If the frontier outgrows its cap (heavily
// symmetric prefixes, e.g. unions of complete graphs), the subtree falls
// back to running the full search at every column.
struct OrderlyGen {
  static constexpr int kFrontierCap = 3000;

  struct Prefix {
    mask_t assigned = 0;                    // vertices used by the relabelling
    std::int8_t vertex_at[Graph::max_vertices]; // label -> vertex
    std::int8_t label_of[Graph::max_vertices];  // vertex -> label (-1 unused)
  };

  int n, d;
  int min_girth;
  const std::function<bool(const mask_t*, int)>& sink; // returns false to stop early

  mask_t rows[Graph::max_vertices] = {};
  int deg[Graph::max_vertices] = {};
  std::uint64_t emitted = 0;

  // frontiers[k]: tied relabellings of labels 0..k, valid along the current
  // DFS path. overflow_depth >= 0 marks the level where the cap was hit.
  std::vector<std::vector<Prefix>> frontiers;
  int overflow_depth = -1;

  // Split-mode bookkeeping: when stop_depth >= 0 the search stops descending
  // at that column and records prefixes instead of completing them.
  int stop_depth = -1;
  std::vector<std::vector<mask_t>>* prefix_out = nullptr;

  std::atomic<bool>* abort = nullptr;
  std::uint64_t steps = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  OrderlyGen(int n_, int d_, int girth, const std::function<bool(const mask_t*, int)>& s)
      : n(n_), d(d_), min_girth(girth), sink(s), frontiers(n_ + 1) {
    std::vector<Prefix>& root = frontiers[0];
    root.resize(n);
    for (int v = 0; v < n; ++v) {
      Prefix& p = root[v];
      p.assigned = mask_t{1} << v;
      std::memset(p.vertex_at, -1, sizeof(p.vertex_at));
      std::memset(p.label_of, -1, sizeof(p.label_of));
      p.vertex_at[0] = static_cast<std::int8_t>(v);
      p.label_of[v] = 0;
    }
  }

  bool budget_ok() {
    if (++steps % 8192 != 0) return true;
    if (abort && abort->load(std::memory_order_relaxed)) return false;
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      if (abort) abort->store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  enum class Advance { Reject, Tied, Overflow };

  // Extend every tied relabelling by label k against the just-placed column
  // of vertex k.  Reject as soon as any extension exceeds it.
  Advance advance_frontier(int k) {
    const mask_t target = rows[k] & ((mask_t{1} << k) - 1);
    auto& parent = frontiers[k - 1];
    auto& child = frontiers[k];
    child.clear();
    for (const Prefix& p : parent) {
      // Image of the target labels under the relabelling.
      mask_t timage = 0;
      mask_t tb = target;
      while (tb) {
        const int q = std::countr_zero(tb);
        tb &= tb - 1;
        timage |= mask_t{1} << p.vertex_at[q];
      }
      for (int v = 0; v < n; ++v) {
        if ((p.assigned >> v) & 1u) continue;
        const mask_t col_img = rows[v] & p.assigned;
        if (col_img == timage) {
          if (static_cast<int>(child.size()) >= kFrontierCap) return Advance::Overflow;
          Prefix& q = child.emplace_back(p);
          q.assigned |= mask_t{1} << v;
          q.vertex_at[k] = static_cast<std::int8_t>(v);
          q.label_of[v] = static_cast<std::int8_t>(k);
          continue;
        }
        // First differing label decides.
        mask_t diff = col_img ^ timage;
        int q_min = n;
        while (diff) {
          const int w = std::countr_zero(diff);
          diff &= diff - 1;
          const int q = p.label_of[w];
          if (q < q_min) q_min = q;
        }
        const int w_min = p.vertex_at[q_min];
        if ((rows[v] >> w_min) & 1u) return Advance::Reject; // relabelling exceeds ours
      }
    }
    return Advance::Tied;
  }

  // Full search used below an overflow point: is there a relabelling whose
  // column string strictly exceeds the current one on columns 0..upto?
  bool exists_greater(int upto) {
    int label_of[Graph::max_vertices];
    for (int i = 0; i < n; ++i) label_of[i] = -1;
    int sigma[Graph::max_vertices];
    return greater_search(0, upto, sigma, label_of);
  }

  bool greater_search(int p, int upto, int* sigma, int* label_of) {
    if (p > upto) return false;
    const mask_t target = rows[p] & ((mask_t{1} << p) - 1);
    // All still-isolated vertices are interchangeable here; try just one.
    bool tried_isolated = false;
    for (int v = 0; v < n; ++v) {
      if (label_of[v] >= 0) continue;
      if (deg[v] == 0) {
        if (tried_isolated) continue;
        tried_isolated = true;
      }
      mask_t col = 0;
      mask_t nb = rows[v];
      while (nb) {
        const int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (label_of[w] >= 0 && label_of[w] <= p) col |= mask_t{1} << label_of[w];
      }
      const mask_t diff = col ^ target;
      if (diff) {
        const mask_t low = diff & (~diff + 1);
        if (col & low) return true; // strictly greater at the first difference
        continue;                   // strictly smaller: dead branch
      }
      sigma[p] = v;
      label_of[v] = p;
      const bool found = greater_search(p + 1, upto, sigma, label_of);
      label_of[v] = -1;
      if (found) return true;
    }
    return false;
  }

  bool short_cycle(int v, int w, int limit, int exclude) const {
    // BFS from v up to `limit` hops, looking for w; `exclude` (the vertex
    // whose column is being filled) stays off the path.
    if (limit <= 0) return false;
    mask_t seen = (mask_t{1} << v) | (mask_t{1} << exclude);
    mask_t frontier = mask_t{1} << v;
    for (int hop = 0; hop < limit; ++hop) {
      mask_t next = 0;
      mask_t f = frontier;
      while (f) {
        const int x = std::countr_zero(f);
        f &= f - 1;
        next |= rows[x];
      }
      next &= ~seen;
      if (next & (mask_t{1} << w)) return true;
      seen |= next;
      frontier = next;
      if (!frontier) return false;
    }
    return false;
  }

  // Fill column k (back-edges of vertex k), then recurse.
  bool fill_column(int k) {
    if (!budget_ok()) return false;
    if (stop_depth >= 0 && k == stop_depth) {
      // Record columns 1..k-1 as back-neighbor masks; a worker resumes the
      // job by replaying them.
      std::vector<mask_t> prefix;
      prefix.reserve(k - 1);
      for (int c = 1; c < k; ++c) prefix.push_back(rows[c] & ((mask_t{1} << c) - 1));
      prefix_out->push_back(std::move(prefix));
      return true;
    }
    if (k == n) {
      if (overflow_depth >= 0 && exists_greater(n - 1)) return true;
      ++emitted;
      return sink(rows, n);
    }
    return choose_backset(k, 0, 0, 0);
  }

  // Recursive subset choice over back-neighbors of k among vertices < k;
  // `v` scans candidates ascending, `taken` is the size so far.
  bool choose_backset(int k, int v, int taken, mask_t smask) {
    const int future = n - 1 - k; // vertices after k
    if (v == k) {
      // Column complete: degree feasibility, then canonicity.
      int total_deficit = d - deg[k];
      int max_deficit = d - deg[k];
      for (int u = 0; u < k; ++u) {
        const int def = d - deg[u];
        total_deficit += def;
        if (def > max_deficit) max_deficit = def;
      }
      if (max_deficit > future) return true;
      const long capacity = static_cast<long>(future) * d;
      if (total_deficit > capacity) return true;
      if ((capacity - total_deficit) % 2 != 0) return true;
      if (capacity - total_deficit > static_cast<long>(future) * (future - 1)) return true;

      if (overflow_depth >= 0) {
        if (exists_greater(k)) return true;
        return fill_column(k + 1);
      }
      switch (advance_frontier(k)) {
        case Advance::Reject:
          return true;
        case Advance::Tied:
          return fill_column(k + 1);
        case Advance::Overflow: {
          if (exists_greater(k)) return true;
          overflow_depth = k;
          const bool keep_going = fill_column(k + 1);
          overflow_depth = -1;
          return keep_going;
        }
      }
      return true;
    }
    if (!budget_ok()) return false;

    const int deficit_v = d - deg[v];
    // A vertex that future columns alone cannot satisfy must take an edge now.
    const bool forced = deficit_v > future;
    if (deficit_v > future + 1) return true;

    if (deficit_v > 0 && taken < d) {
      bool girth_ok = true;
      if (min_girth > 3) {
        mask_t s = smask;
        while (s && girth_ok) {
          const int w = std::countr_zero(s);
          s &= s - 1;
          if (short_cycle(v, w, min_girth - 3, k)) girth_ok = false;
        }
      }
      if (girth_ok) {
        rows[v] |= mask_t{1} << k;
        rows[k] |= mask_t{1} << v;
        ++deg[v];
        ++deg[k];
        const bool keep_going = choose_backset(k, v + 1, taken + 1, smask | (mask_t{1} << v));
        --deg[v];
        --deg[k];
        rows[v] &= ~(mask_t{1} << k);
        rows[k] &= ~(mask_t{1} << v);
        if (!keep_going) return false;
      }
    }
    if (forced) return true;
    return choose_backset(k, v + 1, taken, smask);
  }

  // Rebuild generator state (rows, degrees, frontier chain) from a stored
  // job prefix; returns false if the prefix is not canonically viable, which
  // cannot happen for prefixes produced by the splitter.
  bool load_prefix(const std::vector<mask_t>& prefix) {
    for (int v = 0; v < n; ++v) {
      rows[v] = 0;
      deg[v] = 0;
    }
    overflow_depth = -1;
    for (std::size_t c = 0; c < prefix.size(); ++c) {
      const int k = static_cast<int>(c) + 1;
      mask_t back = prefix[c];
      while (back) {
        const int u = std::countr_zero(back);
        back &= back - 1;
        rows[u] |= mask_t{1} << k;
        rows[k] |= mask_t{1} << u;
        ++deg[u];
        ++deg[k];
      }
      if (overflow_depth < 0) {
        switch (advance_frontier(k)) {
          case Advance::Reject:
            return false;
          case Advance::Tied:
            break;
          case Advance::Overflow:
            if (exists_greater(k)) return false;
            overflow_depth = k;
            break;
        }
      }
    }
    return true;
  }
};

} // namespace

std::uint64_t enumerate(const GenSpec& spec, const std::function<void(const Graph&)>& visit,
                        const EnumOptions& options) {
  const int n = spec.n;
  const int d = spec.d;
  if (n < 1 || n > Graph::max_vertices || d < 0 || d >= n || (n * d) % 2 != 0)
    fail(errc::inadmissible_spec, "no d-regular graph matches n=" + std::to_string(n) +
                                      " d=" + std::to_string(d));

  const bool use_complement = spec.complement == ComplementMode::On ||
                              (spec.complement == ComplementMode::Auto && d > (n - 1) / 2);
  const int gen_d = use_complement ? n - 1 - d : d;
  // Girth constraints on the final graph cannot be pushed through the
  // complement, so they become a post-filter there.
  const int inline_girth = (!use_complement && spec.min_girth > 3) ? spec.min_girth : 0;

  std::atomic<std::uint64_t> emitted{0};
  std::atomic<bool> abort_flag{false};
  std::mutex visit_mutex;

  auto deliver = [&](const mask_t* rows, int order) -> bool {
    Graph g(order, std::vector<mask_t>(rows, rows + order));
    if (use_complement) g = complement(g);
    if (spec.min_girth > 3 && use_complement) {
      const int gg = girth(g);
      if (gg != 0 && gg < spec.min_girth) return true;
    }
    if (spec.connected_only && !is_connected(g)) return true;
    emitted.fetch_add(1, std::memory_order_relaxed);
    if (visit) {
      if (options.concurrent_visits) {
        visit(g);
      } else {
        std::lock_guard<std::mutex> lock(visit_mutex);
        visit(g);
      }
    }
    return true;
  };

  auto run_sequential = [&]() {
    std::function<bool(const mask_t*, int)> sink = deliver;
    OrderlyGen gen(n, gen_d, inline_girth, sink);
    gen.abort = &abort_flag;
    gen.deadline = options.deadline;
    gen.fill_column(1);
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    run_sequential();
    if (abort_flag.load()) fail(errc::budget_exceeded, "enumeration exceeded its budget");
    return emitted.load();
  }

  // Split the tree at a fixed column into independent prefix jobs.
  int split = 3;
  std::vector<std::vector<mask_t>> jobs;
  while (split < n) {
    jobs.clear();
    std::function<bool(const mask_t*, int)> no_sink = [](const mask_t*, int) { return true; };
    OrderlyGen splitter(n, gen_d, inline_girth, no_sink);
    splitter.stop_depth = split;
    splitter.prefix_out = &jobs;
    splitter.fill_column(1);
    if (static_cast<int>(jobs.size()) >= 16 * workers || split + 1 >= n) break;
    ++split;
  }
  if (split >= n || jobs.empty()) {
    run_sequential();
    if (abort_flag.load()) fail(errc::budget_exceeded, "enumeration exceeded its budget");
    return emitted.load();
  }

  std::atomic<std::size_t> next_job{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      std::function<bool(const mask_t*, int)> sink = deliver;
      OrderlyGen gen(n, gen_d, inline_girth, sink);
      gen.abort = &abort_flag;
      gen.deadline = options.deadline;
      for (;;) {
        const std::size_t j = next_job.fetch_add(1);
        if (j >= jobs.size() || abort_flag.load()) break;
        if (!gen.load_prefix(jobs[j])) continue;
        if (!gen.fill_column(static_cast<int>(jobs[j].size()) + 1)) break;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (abort_flag.load()) fail(errc::budget_exceeded, "enumeration exceeded its budget");
  return emitted.load();
}

} // namespace nutkit
