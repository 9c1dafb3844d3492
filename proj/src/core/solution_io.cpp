#include "core/solution_io.hpp"

#include <fstream>
#include <sstream>

namespace tenscol {

std::string format_solution(const SolutionFile& s) {
    std::ostringstream out;
    out << "c instance " << (s.instance.empty() ? "unknown" : s.instance) << '\n';
    out << "c mode " << mode_name(s.mode) << '\n';
    out << "c k " << s.coloring.k << '\n';
    out << "c conflicts " << s.conflicts << '\n';
    out << "c equity " << s.equity_violation << '\n';
    for (size_t v = 0; v < s.coloring.assignment.size(); ++v)
        out << "v " << (v + 1) << ' ' << (s.coloring.assignment[v] + 1) << '\n';
    return out.str();
}

void write_solution_file(const SolutionFile& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write solution file: " + path);
    f << format_solution(s);
}

SolutionFile load_solution(const std::string& text) {
    SolutionFile s;
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<long long, long long>> entries;
    long long header_k = 0;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") {
            std::string key;
            if (!(ls >> key)) continue;
            if (key == "instance")
                ls >> s.instance;
            else if (key == "mode") {
                std::string m;
                ls >> m;
                s.mode = m == "ecp" ? Mode::ECP : Mode::GCP;
            } else if (key == "k")
                ls >> header_k;
            else if (key == "conflicts")
                ls >> s.conflicts;
            else if (key == "equity")
                ls >> s.equity_violation;
            continue;
        }
        if (tag == "v") {
            long long vertex = 0, color = 0;
            if (!(ls >> vertex >> color) || vertex < 1 || color < 1)
                throw std::runtime_error("solution parse error at line " + std::to_string(line_no));
            entries.emplace_back(vertex, color);
            continue;
        }
        throw std::runtime_error("solution parse error at line " + std::to_string(line_no) +
                                 ": unknown tag '" + tag + "'");
    }
    if (entries.empty()) throw std::runtime_error("solution file has no vertex lines");
    long long n = 0, max_color = 0;
    for (auto [v, c] : entries) {
        n = std::max(n, v);
        max_color = std::max(max_color, c);
    }
    s.coloring.assignment.assign(static_cast<size_t>(n), -1);
    for (auto [v, c] : entries) s.coloring.assignment[v - 1] = static_cast<int>(c - 1);
    for (size_t v = 0; v < s.coloring.assignment.size(); ++v)
        if (s.coloring.assignment[v] < 0)
            throw std::runtime_error("solution file misses vertex " + std::to_string(v + 1));
    s.coloring.k = static_cast<int>(std::max(header_k, max_color));
    return s;
}

SolutionFile load_solution_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open solution file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return load_solution(ss.str());
}

}  // namespace tenscol
