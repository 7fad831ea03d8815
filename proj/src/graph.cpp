#include "nutkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <bit>

namespace nutkit {

namespace {

inline std::uint64_t mask_below(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

} // namespace

Graph::Graph(int n, std::vector<row_t> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 1 || n > max_vertices)
    fail(errc::vertex_out_of_range, "graph order must be in [1, 64], got " + std::to_string(n));
  if (static_cast<int>(rows_.size()) != n)
    fail(errc::malformed_list, "row count does not match order");
  const row_t allowed = mask_below(n);
  for (int i = 0; i < n; ++i) {
    if (rows_[i] & ~allowed)
      fail(errc::vertex_out_of_range, "adjacency bit beyond vertex range");
    if ((rows_[i] >> i) & 1u)
      fail(errc::malformed_list, "loop at vertex " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((rows_[i] >> j) & 1u) != ((rows_[j] >> i) & 1u))
        fail(errc::asymmetric_list,
             "asymmetric adjacency between " + std::to_string(i) + " and " + std::to_string(j));
}

Graph Graph::empty(int n) { return Graph(n, std::vector<row_t>(n, 0)); }

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<row_t> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(errc::vertex_out_of_range, "edge endpoint out of range");
    rows[u] |= row_t{1} << v;
    rows[v] |= row_t{1} << u;
  }
  return Graph(n, std::move(rows));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(int u) const { return std::popcount(rows_[u]); }

Graph Graph::with_edge(int u, int v) const {
  auto rows = rows_;
  rows[u] |= row_t{1} << v;
  rows[v] |= row_t{1} << u;
  return Graph(n_, std::move(rows));
}

Graph Graph::without_edge(int u, int v) const {
  auto rows = rows_;
  rows[u] &= ~(row_t{1} << v);
  rows[v] &= ~(row_t{1} << u);
  return Graph(n_, std::move(rows));
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  p.is_regular = std::all_of(p.degrees.begin(), p.degrees.end(),
                             [&](int d) { return d == p.degrees[0]; });
  p.d = p.is_regular ? p.degrees[0] : -1;
  return p;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == mask_below(n);
}

int girth(const Graph& g) {
  // BFS from every vertex; a cycle through the root is detected either by a
  // cross edge inside one level (odd cycle) or between consecutive levels.
  const int n = g.order();
  int best = 0;
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        } else if (dist[w] >= dist[v]) {
          int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// --- adjacency-list text format ----------------------------------------------

Graph parse_adjacency_list(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&](bool also_newlines) {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
            (also_newlines && text[i] == '\n')))
      ++i;
  };
  auto read_int = [&]() -> long {
    skip_ws(true);
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail(errc::malformed_list, "expected an integer at offset " + std::to_string(i));
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 100000) fail(errc::malformed_list, "integer too large");
      ++i;
    }
    return value;
  };

  skip_ws(true);
  if (i >= text.size() || text[i] != '{') fail(errc::malformed_list, "expected '{'");
  ++i;

  struct group {
    long head;
    std::vector<long> neighbors;
  };
  std::vector<group> groups;
  bool done = false;
  while (!done) {
    skip_ws(true);
    if (i < text.size() && text[i] == '}') {
      ++i;
      break;
    }
    group grp;
    grp.head = read_int();
    skip_ws(true);
    if (i >= text.size() || text[i] != ':') fail(errc::malformed_list, "expected ':' after vertex");
    ++i;
    // Neighbors run to the next ';', newline or '}'.
    for (;;) {
      skip_ws(false);
      if (i >= text.size()) fail(errc::malformed_list, "unterminated list");
      char c = text[i];
      if (c == ';' || c == '\n') {
        ++i;
        break;
      }
      if (c == '}') {
        ++i;
        done = true;
        break;
      }
      grp.neighbors.push_back(read_int());
    }
    groups.push_back(std::move(grp));
  }
  skip_ws(true);
  if (i != text.size()) fail(errc::malformed_list, "trailing characters after '}'");
  if (groups.empty()) fail(errc::malformed_list, "empty adjacency list");

  const long n = static_cast<long>(groups.size());
  if (n > Graph::max_vertices)
    fail(errc::vertex_out_of_range, "more than 64 vertices");

  std::vector<std::vector<long>> lists(n);
  std::vector<bool> seen_head(n, false);
  for (const auto& grp : groups) {
    if (grp.head < 0 || grp.head >= n)
      fail(errc::vertex_out_of_range, "group head " + std::to_string(grp.head) +
                                          " out of range for order " + std::to_string(n));
    if (seen_head[grp.head]) fail(errc::malformed_list, "duplicate group for vertex " +
                                                            std::to_string(grp.head));
    seen_head[grp.head] = true;
    for (long nb : grp.neighbors) {
      if (nb == grp.head) fail(errc::malformed_list, "loop at vertex " + std::to_string(nb));
      if (std::find(lists[grp.head].begin(), lists[grp.head].end(), nb) != lists[grp.head].end())
        fail(errc::duplicate_neighbor, "vertex " + std::to_string(grp.head) + " lists " +
                                           std::to_string(nb) + " twice");
      lists[grp.head].push_back(nb);
    }
  }
  // Symmetry among in-range pairs is diagnosed before range errors.
  for (long u = 0; u < n; ++u)
    for (long v : lists[u]) {
      if (v < 0 || v >= n) continue;
      if (std::find(lists[v].begin(), lists[v].end(), u) == lists[v].end())
        fail(errc::asymmetric_list, "vertex " + std::to_string(u) + " lists " +
                                        std::to_string(v) + " but not vice versa");
    }
  std::vector<Graph::row_t> rows(n, 0);
  for (long u = 0; u < n; ++u)
    for (long v : lists[u]) {
      if (v < 0 || v >= n)
        fail(errc::vertex_out_of_range, "neighbor " + std::to_string(v) +
                                            " out of range for order " + std::to_string(n));
      rows[u] |= Graph::row_t{1} << v;
    }
  return Graph(static_cast<int>(n), std::move(rows));
}

std::string to_adjacency_list(const Graph& g) {
  std::ostringstream out;
  out << '{';
  for (int v = 0; v < g.order(); ++v) {
    if (v) out << "; ";
    out << v << ':';
    auto nb = g.neighbors(v);
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      out << ' ' << w;
    }
  }
  out << '}';
  return out.str();
}

// --- graph6 -------------------------------------------------------------------

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) fail(errc::bad_header, "short-form graph6 supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0, value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + 63));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(const std::string& s) {
  std::string body = s;
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
  if (body.empty()) fail(errc::bad_header, "empty graph6 string");
  const unsigned char h = static_cast<unsigned char>(body[0]);
  if (h == 126) fail(errc::bad_header, "long-form graph6 header not supported");
  if (h < 63 || h > 63 + 62) fail(errc::bad_header, "invalid graph6 header byte");
  const int n = h - 63;
  if (n < 1) fail(errc::bad_header, "graph of order 0");

  const long nbits = static_cast<long>(n) * (n - 1) / 2;
  const long nbytes = (nbits + 5) / 6;
  if (static_cast<long>(body.size()) - 1 != nbytes)
    fail(errc::length_mismatch, "graph6 body has wrong length");

  std::vector<Graph::row_t> rows(n, 0);
  long bit = 0;
  for (long k = 0; k < nbytes; ++k) {
    const unsigned char c = static_cast<unsigned char>(body[1 + k]);
    if (c < 63 || c > 126) fail(errc::length_mismatch, "invalid graph6 body byte");
    const int v = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      const int set = (v >> b) & 1;
      if (bit >= nbits) {
        if (set) fail(errc::trailing_bits, "nonzero padding bits");
        continue;
      }
      if (set) {
        // recover (i, j) for column-major bit index
        long t = bit;
        int j = 1;
        while (t >= j) t -= j, ++j;
        const int i = static_cast<int>(t);
        rows[i] |= Graph::row_t{1} << j;
        rows[j] |= Graph::row_t{1} << i;
      }
    }
  }
  return Graph(n, std::move(rows));
}

// --- derived graphs and named families -----------------------------------------

Graph complement(const Graph& g) {
  const int n = g.order();
  const Graph::row_t all = mask_below(n);
  std::vector<Graph::row_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = (~g.neighbors(v) & all) & ~(Graph::row_t{1} << v);
  return Graph(n, std::move(rows));
}

Graph make_antiprism(int k) {
  if (k < 3) fail(errc::k_too_small, "antiprism needs ring size >= 3");
  if (2 * k > Graph::max_vertices) fail(errc::vertex_out_of_range, "antiprism too large");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, (i + 1) % k);                 // outer ring
    edges.emplace_back(k + i, k + (i + 1) % k);         // inner ring
    edges.emplace_back(i, k + i);                       // zig
    edges.emplace_back(i, k + (i + 1) % k);             // zag
  }
  return Graph::from_edges(2 * k, edges);
}

Graph make_complete_minus_matching(int m) {
  if (m < 2 || m % 2 != 0) fail(errc::odd_order, "needs an even order >= 2");
  if (m > Graph::max_vertices) fail(errc::vertex_out_of_range, "order exceeds 64");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (j != m - 1 - i) edges.emplace_back(i, j);
  return Graph::from_edges(m, edges);
}

Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

} // namespace nutkit
