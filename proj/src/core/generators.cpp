#include "core/generators.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "core/rng.hpp"

namespace tenscol {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges), "k" + std::to_string(n));
}

Graph edgeless_graph(int n) {
    return Graph(n, {}, "empty" + std::to_string(n));
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges), "c" + std::to_string(n));
}

Graph mycielski_graph(int level) {
    if (level < 2) throw std::invalid_argument("mycielski level must be >= 2");
    int n = 2;
    std::vector<std::pair<int, int>> edges = {{0, 1}};
    for (int step = 1; step < level; ++step) {
        // V' = V (0..n-1) + shadow copies (n..2n-1) + apex 2n.
        std::vector<std::pair<int, int>> next = edges;
        for (auto [a, b] : edges) {
            next.emplace_back(n + a, b);
            next.emplace_back(a, n + b);
        }
        for (int v = 0; v < n; ++v) next.emplace_back(n + v, 2 * n);
        edges = std::move(next);
        n = 2 * n + 1;
    }
    return Graph(n, std::move(edges), "myciel" + std::to_string(level));
}

Graph gnp_graph(int n, double p, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_uniform() < p) edges.emplace_back(i, j);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "gnp%d_%03d_s%llu", n, static_cast<int>(p * 100 + 0.5),
                  static_cast<unsigned long long>(seed));
    return Graph(n, std::move(edges), buf);
}

Graph geometric_graph(int n, double radius, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = rng.next_uniform();
        ys[i] = rng.next_uniform();
    }
    const double r2 = radius * radius;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
            if (dx * dx + dy * dy <= r2) edges.emplace_back(i, j);
        }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "geo%d_r%04d_s%llu", n, static_cast<int>(radius * 1000 + 0.5),
                  static_cast<unsigned long long>(seed));
    return Graph(n, std::move(edges), buf);
}

}  // namespace tenscol
