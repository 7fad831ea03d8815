#include "nutkit/exact_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <type_traits>

namespace nutkit {

namespace {

// Mersenne prime; folding reductions keep the GF(p) elimination division-free.
constexpr std::uint64_t kP = (std::uint64_t{1} << 31) - 1;

inline std::uint64_t fold31(std::uint64_t x) {
  x = (x & kP) + (x >> 31);
  x = (x & kP) + (x >> 31);
  return x >= kP ? x - kP : x;
}

inline std::uint64_t mulmod31(std::uint64_t a, std::uint64_t b) { return fold31(a * b); }

std::uint64_t powmod31(std::uint64_t base, std::uint64_t e) {
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = mulmod31(acc, base);
    base = mulmod31(base, base);
    e >>= 1;
  }
  return acc;
}

// Rank of the 0/1 adjacency matrix over GF(2^31 - 1).
int gf31_adjacency_rank(const Graph& g) {
  const int n = g.order();
  std::uint64_t m[Graph::max_vertices][Graph::max_vertices];
  for (int i = 0; i < n; ++i) {
    auto row = g.neighbors(i);
    for (int j = 0; j < n; ++j) m[i][j] = (row >> j) & 1u;
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (m[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < n; ++j) std::swap(m[piv][j], m[rank][j]);
    const std::uint64_t inv = powmod31(m[rank][col], kP - 2);
    for (int r = rank + 1; r < n; ++r) {
      if (!m[r][col]) continue;
      const std::uint64_t f = kP - mulmod31(m[r][col], inv);
      m[r][col] = 0;
      for (int j = col + 1; j < n; ++j) m[r][j] = fold31(m[r][j] + f * m[rank][j]);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination shared by the word-sized and bignum paths.  The
// pivot for each column is the first row with a nonzero entry; intermediate
// entries are minors of the input, so the divisions are exact.
template <typename Int, typename Wide>
struct Bareiss {
  int rows, cols;
  std::vector<std::vector<Int>> m;
  std::vector<int> pivot_cols;

  explicit Bareiss(std::vector<std::vector<Int>> data)
      : rows(static_cast<int>(data.size())),
        cols(rows ? static_cast<int>(data[0].size()) : 0),
        m(std::move(data)) {}

  void run() {
    Int prev{1};
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
      int piv = -1;
      for (int r = rank; r < rows; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != rank) m[piv].swap(m[rank]);
      for (int r = rank + 1; r < rows; ++r) {
        for (int j = col + 1; j < cols; ++j) {
          if constexpr (std::is_same_v<Int, std::int64_t>) {
            Wide t = Wide(m[rank][col]) * m[r][j] - Wide(m[r][col]) * m[rank][j];
            m[r][j] = static_cast<Int>(t / prev);
          } else {
            Int t = m[rank][col] * m[r][j] - m[r][col] * m[rank][j];
            mpz_divexact(m[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          }
        }
        m[r][col] = 0;
      }
      prev = m[rank][col];
      pivot_cols.push_back(col);
      ++rank;
    }
  }
};

using BareissI64 = Bareiss<std::int64_t, __int128>;
using BareissMpz = Bareiss<mpz_class, mpz_class>;

// Hadamard: every minor of a 0/1 matrix of order n is at most n^(n/2), which
// stays below 2^63 up to n = 22.
constexpr int kWordSafeOrder = 22;

std::vector<std::vector<std::int64_t>> adjacency_rows_i64(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    auto row = g.neighbors(i);
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      m[i][j] = 1;
    }
  }
  return m;
}

std::vector<std::vector<mpz_class>> matrix_rows_mpz(const IntegerMatrix& a) {
  std::vector<std::vector<mpz_class>> m(a.rows, std::vector<mpz_class>(a.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m[i][j] = a.at(i, j);
  return m;
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

std::vector<mpz_class> back_substitute(const EchelonForm& ef, int free_col) {
  const int n = ef.cols;
  std::vector<mpq_class> x(n, 0);
  x[free_col] = 1;
  for (int i = ef.rank() - 1; i >= 0; --i) {
    const int p = ef.pivot_cols[i];
    mpq_class acc = 0;
    for (int j = p + 1; j < n; ++j)
      if (x[j] != 0) acc += mpq_class(ef.rows[i][j]) * x[j];
    x[p] = -acc / mpq_class(ef.rows[i][p]);
  }
  mpz_class lcm = 1;
  for (const auto& q : x)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> v(n);
  for (int j = 0; j < n; ++j) {
    mpq_class scaled = x[j] * lcm;
    v[j] = scaled.get_num();
  }
  normalize_primitive(v);
  return v;
}

} // namespace

IntegerMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntegerMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = g.has_edge(i, j) ? 1 : 0;
  return a;
}

std::vector<mpz_class> matvec(const IntegerMatrix& a, const std::vector<mpz_class>& v) {
  if (static_cast<int>(v.size()) != a.cols)
    fail(errc::dimension_mismatch, "matvec: vector length does not match column count");
  std::vector<mpz_class> out(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j) != 0) out[i] += a.at(i, j) * v[j];
  return out;
}

EchelonForm echelon_form(const IntegerMatrix& a) {
  BareissMpz b(matrix_rows_mpz(a));
  b.run();
  EchelonForm ef;
  ef.cols = a.cols;
  ef.pivot_cols = b.pivot_cols;
  ef.rows.assign(b.m.begin(), b.m.begin() + b.pivot_cols.size());
  return ef;
}

int nullity(const IntegerMatrix& a) {
  if (a.rows != a.cols) fail(errc::non_square, "nullity requires a square matrix");
  BareissMpz b(matrix_rows_mpz(a));
  b.run();
  return a.cols - static_cast<int>(b.pivot_cols.size());
}

KernelBasis kernel_basis(const IntegerMatrix& a) {
  if (a.rows != a.cols) fail(errc::non_square, "kernel_basis requires a square matrix");
  EchelonForm ef = echelon_form(a);
  KernelBasis basis;
  std::vector<bool> is_pivot(a.cols, false);
  for (int p : ef.pivot_cols) is_pivot[p] = true;
  for (int col = 0; col < a.cols; ++col) {
    if (is_pivot[col]) continue;
    auto v = back_substitute(ef, col);
    for (const auto& entry : matvec(a, v))
      if (entry != 0) throw std::logic_error("kernel vector fails A*v = 0");
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

std::vector<mpz_class> solve_for_free_column(const EchelonForm& ef, int free_col) {
  return back_substitute(ef, free_col);
}

bool adjacency_nonsingular_mod_p(const Graph& g) {
  return gf31_adjacency_rank(g) == g.order();
}

int adjacency_nullity(const Graph& g) {
  const int n = g.order();
  if (n <= kWordSafeOrder) {
    BareissI64 b(adjacency_rows_i64(g));
    b.run();
    return n - static_cast<int>(b.pivot_cols.size());
  }
  return nullity(adjacency_matrix(g));
}

std::optional<std::vector<mpz_class>> adjacency_nullity_one_vector(const Graph& g) {
  const int n = g.order();
  EchelonForm ef;
  if (n <= kWordSafeOrder) {
    BareissI64 b(adjacency_rows_i64(g));
    b.run();
    if (n - static_cast<int>(b.pivot_cols.size()) != 1) return std::nullopt;
    ef.cols = n;
    ef.pivot_cols = b.pivot_cols;
    ef.rows.resize(b.pivot_cols.size());
    for (std::size_t i = 0; i < b.pivot_cols.size(); ++i)
      ef.rows[i].assign(b.m[i].begin(), b.m[i].end());
  } else {
    ef = echelon_form(adjacency_matrix(g));
    if (n - ef.rank() != 1) return std::nullopt;
  }
  std::vector<bool> is_pivot(n, false);
  for (int p : ef.pivot_cols) is_pivot[p] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  return back_substitute(ef, free_col);
}

} // namespace nutkit
