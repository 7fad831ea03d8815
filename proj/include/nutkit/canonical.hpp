#pragma once

#include <vector>

#include "nutkit/graph.hpp"

namespace nutkit {

/// Certificate identifying the isomorphism class plus automorphism-group
/// generators discovered along the way (as old-vertex -> image permutations).
struct CanonicalForm {
  std::vector<unsigned char> certificate;
  std::vector<std::vector<int>> aut_generators;
  std::vector<int> canonical_labeling; // position k holds the vertex given label k
};

CanonicalForm canonical_form(const Graph& g);

// Same, but starting from an initial coloring: vertices with smaller color
// values come first, and only same-colored vertices may be exchanged.
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors);

bool are_isomorphic(const Graph& a, const Graph& b);

// Orbits of the vertex set under the group generated by the given permutations.
std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& generators);

} // namespace nutkit
