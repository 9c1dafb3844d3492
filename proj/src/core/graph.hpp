#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tenscol {

enum class Mode { GCP, ECP };

inline const char* mode_name(Mode m) { return m == Mode::GCP ? "gcp" : "ecp"; }

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable undirected graph with a dense adjacency matrix. Vertices are
// 0-indexed internally; DIMACS 1-indexing is converted at the parse boundary.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges, std::string name = "");

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(edges_.size()); }
    double density() const;
    const std::string& name() const { return name_; }

    // Edge list with i < j, sorted, no duplicates.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int i, int j) const { return adj_[static_cast<size_t>(i) * n_ + j] != 0; }
    const uint8_t* adjacency_row(int i) const { return adj_.data() + static_cast<size_t>(i) * n_; }
    const std::vector<uint8_t>& adjacency() const { return adj_; }

    int degree(int v) const { return static_cast<int>(adj_offsets_[v + 1] - adj_offsets_[v]); }
    // Neighbors of v in ascending order.
    const int* neighbors_begin(int v) const { return adj_targets_.data() + adj_offsets_[v]; }
    const int* neighbors_end(int v) const { return adj_targets_.data() + adj_offsets_[v + 1]; }

private:
    int n_;
    std::string name_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<uint8_t> adj_;       // n*n dense, symmetric, zero diagonal
    std::vector<size_t> adj_offsets_;  // CSR over sorted neighbor lists
    std::vector<int> adj_targets_;
};

struct Coloring {
    std::vector<int> assignment;  // length n, entries in [0, k)
    int k = 0;
};

struct ValidationReport {
    long long conflict_count = 0;    // monochromatic edges
    long long equity_violation = 0;  // surplus/deficit sum; computed in ECP mode only
    bool legal = false;
};

// Parses DIMACS .col text. Fatal problems (missing p line, bad indices,
// non-integer tokens, self-loops) throw ParseError naming the line number.
// Tolerated oddities (unknown line types, declared-vs-actual edge count
// mismatch, duplicate edges) are reported through `warnings` when non-null.
Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr,
                   const std::string& name = "");
Graph parse_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

std::string write_dimacs(const Graph& g);
void write_dimacs_file(const Graph& g, const std::string& path);

// DSATUR greedy coloring: highest saturation first, ties by degree, remaining
// ties by a seed-derived priority permutation. Always legal.
Coloring greedy_upper_bound(const Graph& g, uint64_t seed);

// Conflict count by edge scan; equity violation per the c1/c2 group-size rule
// when mode is ECP. Throws std::invalid_argument on length mismatch.
ValidationReport validate(const Graph& g, const Coloring& c, Mode mode);

// Equity bounds: group sizes must be c1 = floor(n/k) or c2 = c1 + 1, with
// c1 = c2 = n/k when k divides n.
std::pair<long long, long long> equity_bounds(int n, int k);

}  // namespace tenscol
