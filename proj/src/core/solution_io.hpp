#pragma once

#include <string>

#include "core/graph.hpp"

namespace tenscol {

struct SolutionFile {
    std::string instance;
    Mode mode = Mode::GCP;
    Coloring coloring;
    long long conflicts = 0;
    long long equity_violation = 0;
};

// Solution text format: `c key value` header lines (instance, mode, k,
// conflicts, equity), then one `v <vertex> <color>` line per vertex, both
// 1-based. Round-trips through load_solution.
std::string format_solution(const SolutionFile& s);
void write_solution_file(const SolutionFile& s, const std::string& path);
SolutionFile load_solution(const std::string& text);
SolutionFile load_solution_file(const std::string& path);

}  // namespace tenscol
