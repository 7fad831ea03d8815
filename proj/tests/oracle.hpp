#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library's elimination and canonical-labelling code paths.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "nutkit/graph.hpp"

namespace oracle {

// Plain Gauss-Jordan over rationals.
int rational_nullity(const nutkit::Graph& g);
std::vector<std::vector<mpq_class>> rational_kernel(const nutkit::Graph& g);

// Every labelled simple graph with all degrees equal to d.
void all_labeled_regular(int n, int d, const std::function<void(const nutkit::Graph&)>& visit);

// Smallest adjacency code over all n! relabelings (n <= 8).
std::vector<std::uint64_t> brute_canonical_code(const nutkit::Graph& g);

bool brute_isomorphic(const nutkit::Graph& a, const nutkit::Graph& b);

nutkit::Graph random_graph(int n, double p, std::mt19937& rng);

} // namespace oracle
