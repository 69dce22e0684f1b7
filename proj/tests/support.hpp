#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "toricdimer/toricdimer.hpp"

namespace toricdimer::testing {

/// One white, one black, three edges with offsets (0,0), (1,0), (0,1) and the
/// counterclockwise rotation e0, e1, e2 at both vertices.
TorusGraph honeycomb_cell();

/// Same edges, rotation e0, e1, e2 at white and e0, e2, e1 at black: traces a sphere.
TorusGraph honeycomb_cell_mirrored_black();

/// Square grid modulo 2Z x 2Z: 2 whites, 2 blacks, 8 edges.
TorusGraph square_grid_2x2();

/// Drops the listed edges, reindexing the rest and the rotation. The rotation
/// is kept only if the result is still cellular.
TorusGraph delete_edges(const TorusGraph& g, const std::vector<int>& doomed);

struct NamedGraph {
  std::string name;
  TorusGraph graph;
};

/// Embedded toroidal graph with at most max_whites whites and at least one
/// perfect matching: a random honeycomb, square-grid or B(n, r) quotient with
/// random edge deletions, a random gauge and a random unimodular change of
/// coordinates.
NamedGraph random_embedded_graph(std::mt19937_64& rng, int max_whites);

// Oracles, independent of the library code paths they check.

/// Matchings counted by homology exponent, by iterating over every
/// permutation of blacks and every choice among parallel edges.
std::map<Vec2, std::int64_t> permutation_oracle(const TorusGraph& g);

/// Determinant by the plain Leibniz sum over all permutations.
LaurentPoly2 leibniz_determinant(const OperatorMatrix& m);

/// Every staircase from 0 to v (|v|_1 >= 1) whose nodes pairwise differ
/// outside the lattice, except the endpoints. True if one exists.
bool exhaustive_path_exists(const LatticeBasis& lattice, Vec2 v);

/// Hamiltonian cycle search over all vertex orders (n! / n), no pruning by jumps.
bool permutation_hamiltonian(std::int64_t n, std::int64_t a, std::int64_t b);

}  // namespace toricdimer::testing
