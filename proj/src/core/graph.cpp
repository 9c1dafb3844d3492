#include "core/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "core/rng.hpp"

namespace tenscol {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::string name)
    : n_(n), name_(std::move(name)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(static_cast<size_t>(n_) * n_, 0);
    std::vector<int> deg(n_, 0);
    for (auto [a, b] : edges_) {
        adj_[static_cast<size_t>(a) * n_ + b] = 1;
        adj_[static_cast<size_t>(b) * n_ + a] = 1;
        ++deg[a];
        ++deg[b];
    }
    adj_offsets_.assign(static_cast<size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    adj_targets_.resize(adj_offsets_[n_]);
    std::vector<size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (auto [a, b] : edges_) {
        adj_targets_[cursor[a]++] = b;
        adj_targets_[cursor[b]++] = a;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_targets_.begin() + adj_offsets_[v], adj_targets_.begin() + adj_offsets_[v + 1]);
}

double Graph::density() const {
    if (n_ < 2) return 0.0;
    return static_cast<double>(m()) / (static_cast<double>(n_) * (n_ - 1) / 2.0);
}

namespace {

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
    throw ParseError("dimacs parse error at line " + std::to_string(line_no) + ": " + what);
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings,
                   const std::string& name) {
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    long long n = -1, declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    size_t raw_edge_lines = 0;

    auto warn = [&](const std::string& msg) {
        if (warnings) warnings->push_back("line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt, ntok, mtok;
            if (!(ls >> fmt >> ntok >> mtok)) parse_fail(line_no, "malformed p line");
            if (fmt != "edge" && fmt != "edges" && fmt != "col")
                warn("unexpected problem format '" + fmt + "'");
            if (!parse_int(ntok, n) || !parse_int(mtok, declared_m) || n < 1)
                parse_fail(line_no, "non-integer vertex/edge counts");
            continue;
        }
        if (tag == "e") {
            if (n < 0) parse_fail(line_no, "edge before p line");
            std::string atok, btok;
            if (!(ls >> atok >> btok)) parse_fail(line_no, "malformed e line");
            long long a, b;
            if (!parse_int(atok, a) || !parse_int(btok, b))
                parse_fail(line_no, "non-integer vertex index");
            if (a < 1 || a > n || b < 1 || b > n)
                parse_fail(line_no, "vertex index out of [1, " + std::to_string(n) + "]");
            if (a == b) parse_fail(line_no, "self-loop on vertex " + std::to_string(a));
            ++raw_edge_lines;
            edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
            continue;
        }
        warn("unknown line type '" + tag + "' skipped");
    }
    if (n < 0) throw ParseError("dimacs parse error: no 'p edge' line found");

    Graph g(static_cast<int>(n), std::move(edges), name);
    if (warnings) {
        if (declared_m >= 0 && declared_m != static_cast<long long>(raw_edge_lines))
            warnings->push_back("declared edge count " + std::to_string(declared_m) +
                                " but found " + std::to_string(raw_edge_lines) + " edge lines");
        if (g.m() != static_cast<long long>(raw_edge_lines))
            warnings->push_back(std::to_string(raw_edge_lines - g.m()) +
                                " duplicate edge line(s) collapsed");
    }
    return g;
}

Graph parse_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of("/\\"); slash != std::string::npos) name = name.substr(slash + 1);
    if (name.size() > 4 && name.substr(name.size() - 4) == ".col") name.resize(name.size() - 4);
    return parse_dimacs(ss.str(), warnings, name);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [a, b] : g.edges()) out << "e " << (a + 1) << ' ' << (b + 1) << '\n';
    return out.str();
}

void write_dimacs_file(const Graph& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << write_dimacs(g);
}

Coloring greedy_upper_bound(const Graph& g, uint64_t seed) {
    const int n = g.n();
    // Seeded priority permutation for last-level tie-breaking.
    std::vector<int> priority(n);
    for (int i = 0; i < n; ++i) priority[i] = i;
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i)
        std::swap(priority[i], priority[rng.next_below(static_cast<uint64_t>(i) + 1)]);

    std::vector<int> color(n, -1);
    std::vector<int> sat_deg(n, 0);
    std::vector<int> uncolored_deg(n);
    std::vector<std::set<int>> neighbor_colors(n);
    for (int v = 0; v < n; ++v) uncolored_deg[v] = g.degree(v);

    std::vector<char> used;
    int k = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (pick < 0 || sat_deg[v] > sat_deg[pick] ||
                (sat_deg[v] == sat_deg[pick] &&
                 (uncolored_deg[v] > uncolored_deg[pick] ||
                  (uncolored_deg[v] == uncolored_deg[pick] && priority[v] < priority[pick]))))
                pick = v;
        }
        used.assign(static_cast<size_t>(k) + 1, 0);
        for (const int* nb = g.neighbors_begin(pick); nb != g.neighbors_end(pick); ++nb)
            if (color[*nb] >= 0) used[color[*nb]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[pick] = c;
        k = std::max(k, c + 1);
        for (const int* nb = g.neighbors_begin(pick); nb != g.neighbors_end(pick); ++nb) {
            if (color[*nb] >= 0) continue;
            --uncolored_deg[*nb];
            if (neighbor_colors[*nb].insert(c).second) ++sat_deg[*nb];
        }
    }
    return Coloring{std::move(color), k};
}

std::pair<long long, long long> equity_bounds(int n, int k) {
    const long long c1 = n / k;
    const long long c2 = (n % k == 0) ? c1 : c1 + 1;
    return {c1, c2};
}

ValidationReport validate(const Graph& g, const Coloring& c, Mode mode) {
    if (static_cast<int>(c.assignment.size()) != g.n())
        throw std::invalid_argument("coloring length " + std::to_string(c.assignment.size()) +
                                    " does not match vertex count " + std::to_string(g.n()));
    if (c.k < 1) throw std::invalid_argument("coloring needs k >= 1");
    for (int v : c.assignment)
        if (v < 0 || v >= c.k) throw std::invalid_argument("color index out of [0, k)");

    ValidationReport rep;
    for (auto [a, b] : g.edges())
        if (c.assignment[a] == c.assignment[b]) ++rep.conflict_count;

    if (mode == Mode::ECP) {
        const auto [c1, c2] = equity_bounds(g.n(), c.k);
        std::vector<long long> counts(c.k, 0);
        for (int v : c.assignment) ++counts[v];
        for (long long s : counts)
            rep.equity_violation += std::min(std::llabs(s - c1), std::llabs(s - c2));
    }
    rep.legal = rep.conflict_count == 0 && (mode == Mode::GCP || rep.equity_violation == 0);
    return rep;
}

}  // namespace tenscol
