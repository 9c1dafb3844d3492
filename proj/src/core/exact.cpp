#include "core/exact.hpp"

#include <algorithm>
#include <vector>

namespace tenscol {

namespace {

struct Search {
    const Graph& g;
    int k;
    bool ecp;
    long long c1, c2;
    std::vector<int> color;
    std::vector<long long> counts;
    long long nodes = 0;

    Search(const Graph& gr, int kk, bool e)
        : g(gr), k(kk), ecp(e), color(gr.n(), -1), counts(kk, 0) {
        auto [a, b] = equity_bounds(gr.n(), kk);
        c1 = a;
        c2 = b;
    }

    bool feasible_tail(int assigned) const {
        if (!ecp) return true;
        // Every group must still be able to reach size c1.
        long long deficit = 0;
        for (long long c : counts) deficit += std::max(0LL, c1 - c);
        return deficit <= g.n() - assigned;
    }

    bool extend(int v, int max_used) {
        ++nodes;
        if (v == g.n()) return true;
        const int limit = std::min(k - 1, max_used + 1);  // new colors in order
        for (int c = 0; c <= limit; ++c) {
            if (ecp && counts[c] >= c2) continue;
            bool ok = true;
            for (const int* nb = g.neighbors_begin(v); nb != g.neighbors_end(v); ++nb)
                if (color[*nb] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            ++counts[c];
            if (feasible_tail(v + 1) && extend(v + 1, std::max(max_used, c))) return true;
            --counts[c];
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

bool exact_k_colorable(const Graph& g, int k, Mode mode, Coloring& witness,
                       long long& explored_nodes) {
    Search s(g, k, mode == Mode::ECP);
    const bool found = s.extend(0, -1);
    explored_nodes = s.nodes;
    if (found) {
        witness.assignment = s.color;
        witness.k = k;
    }
    return found;
}

ExactResult exact_chromatic(const Graph& g, Mode mode, int max_n) {
    if (g.n() > max_n)
        throw std::invalid_argument("exact oracle refuses n=" + std::to_string(g.n()) +
                                    " (limit " + std::to_string(max_n) + ")");
    ExactResult res;
    for (int k = 1; k <= g.n(); ++k) {
        long long nodes = 0;
        Coloring witness;
        const bool ok = exact_k_colorable(g, k, mode, witness, nodes);
        res.explored_nodes += nodes;
        if (ok) {
            res.chromatic_number = k;
            res.witness = std::move(witness);
            const ValidationReport rep = validate(g, res.witness, mode);
            if (!rep.legal) throw std::logic_error("exact oracle produced an illegal witness");
            return res;
        }
    }
    throw std::logic_error("exact oracle found no coloring with n colors");
}

}  // namespace tenscol
