#pragma once

#include <cstdint>

#include "core/graph.hpp"

namespace tenscol {

// Deterministic benchmark-family generators. The random families stand in for
// the classic DIMACS instances when the original files are not at hand; the
// Mycielski chain reproduces the myciel* instances exactly.

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);

// myciel_k of the COLOR02 family: repeated Mycielski construction starting
// from K2 (k=3 gives n=11/m=20, k=4 gives n=23/m=71, k=7 gives n=191/m=2360);
// chromatic number k+1.
Graph mycielski_graph(int level);

// Erdos-Renyi G(n, p) with a splitmix64-driven Bernoulli draw per vertex pair
// in row-major (i<j) order.
Graph gnp_graph(int n, double p, uint64_t seed);

// Random geometric graph: n points uniform in the unit square, edge when the
// Euclidean distance is below `radius`. Point t draws x then y.
Graph geometric_graph(int n, double radius, uint64_t seed);

}  // namespace tenscol
