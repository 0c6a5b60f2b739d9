// Test-side oracles, kept independent of the library paths they check:
// all-orders contractibility search, brute-force clique counts, plain
// flood fill over lattice points, fraction-free rank, and by-hand graph
// fixtures.

#ifndef NDTOPO_TESTS_ORACLES_HPP
#define NDTOPO_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "ndtopo/graph.hpp"

namespace oracles {

using ndtopo::Graph;
using ndtopo::VertexId;
using ndtopo::VertexSet;

// Explicit fixtures. The octahedron uses antipodal pairs {0,3},{1,4},{2,5},
// deliberately not the minimal_sphere labeling.
Graph octahedron();
Graph wheel5();  // 4-cycle 0-1-2-3 plus apex 4
Graph cycle(int n);
Graph path(int n);

// All-orders contractibility: reducible to one vertex by deleting points
// whose rims are (recursively, by the same search) contractible, in any
// order. Memoized on vertex subsets; at most 25 vertices.
bool exhaustive_contractible(const Graph& g);

// Clique counts by subset enumeration (at most 20 vertices).
std::vector<std::uint64_t> brute_clique_counts(const Graph& g);

// Connected components of a point set under the written-out Z^n adjacency
// rule (max-norm distance <= 1, comparable parity vectors), BFS only.
std::vector<std::vector<std::size_t>> zn_flood_components(
    const std::vector<std::vector<int>>& points);

// Rank over the rationals via fraction-free elimination.
std::size_t rational_rank(std::vector<std::vector<long long>> m);

// Connected-graph isomorphism classes with exactly n vertices (n <= 7),
// grown one vertex at a time and deduplicated by canonical code. Sound
// because every connected graph has a non-cut vertex, and validated by the
// known class counts (1, 1, 2, 6, 21, 112, 853).
std::vector<Graph> connected_classes(int n);

}  // namespace oracles

#endif
