#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Dense arbitrary-precision integer matrix, row-major.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> entries;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  mpz_class& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * cols + j];
  }
};

/// Primitive integer vectors spanning the nullspace; each has entry gcd 1 and
/// a positive leading nonzero entry.  Verified against the matrix before being
/// returned, so vectors.size() is the nullity.
struct KernelBasis {
  std::vector<std::vector<mpz_class>> vectors;
};

IntegerMatrix adjacency_matrix(const Graph& g);

std::vector<mpz_class> matvec(const IntegerMatrix& a, const std::vector<mpz_class>& v);

// Nullity = dim ker = n - rank, by fraction-free (Bareiss) elimination.
int nullity(const IntegerMatrix& a);

// Deterministic primitive basis of the exact integer kernel.
KernelBasis kernel_basis(const IntegerMatrix& a);

// Row echelon form produced by the same elimination; kept around so callers
// can back-substitute without re-eliminating.
struct EchelonForm {
  int cols = 0;
  std::vector<int> pivot_cols;
  std::vector<std::vector<mpz_class>> rows; // one per pivot, in pivot order

  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

EchelonForm echelon_form(const IntegerMatrix& a);

// Solution with free coordinate `free_col` set to 1 and all other free
// coordinates 0, scaled to a primitive integer vector with positive leading
// nonzero entry.
std::vector<mpz_class> solve_for_free_column(const EchelonForm& ef, int free_col);

// --- adjacency fast paths ----------------------------------------------------
//
// Exact shortcuts for the enumeration pipeline.  Rejection is always sound:
// rank over GF(p) never exceeds the rational rank, and the word-sized exact
// elimination is only used where the Hadamard bound rules out overflow.

// True means the adjacency matrix is certainly nonsingular (full rank mod p).
bool adjacency_nonsingular_mod_p(const Graph& g);

// Exact nullity of the adjacency matrix.
int adjacency_nullity(const Graph& g);

// The primitive kernel vector when the nullity is exactly 1, otherwise nullopt.
std::optional<std::vector<mpz_class>> adjacency_nullity_one_vector(const Graph& g);

} // namespace nutkit
