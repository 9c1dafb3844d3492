#pragma once

#include "core/graph.hpp"

namespace tenscol {

struct ExactResult {
    int chromatic_number = 0;  // equitable chromatic number in ECP mode
    Coloring witness;
    long long explored_nodes = 0;
};

// Exhaustive branch-and-bound for the exact (equitable) chromatic number of
// small graphs. Symmetry breaking: vertex 0 is fixed to color 0 and new colors
// are introduced in index order. ECP mode additionally enforces the admissible
// group sizes c1/c2 and prunes branches that cannot reach them. Refuses
// instances with n > max_n.
ExactResult exact_chromatic(const Graph& g, Mode mode, int max_n = 12);

// Decision variant used by the search: is there a legal (mode-respecting)
// k-coloring? Fills `witness` on success.
bool exact_k_colorable(const Graph& g, int k, Mode mode, Coloring& witness,
                       long long& explored_nodes);

}  // namespace tenscol
