#include <string>
#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"
#include "doctest.h"

using namespace tenscol;

TEST_SUITE("graph") {

TEST_CASE("parses a complete triangle") {
    const std::string text = "c tiny instance\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
    Graph g = parse_dimacs(text);
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.density() == doctest::Approx(1.0));
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 1));
}

TEST_CASE("collapses duplicate edges and reports the mismatch") {
    std::vector<std::string> warnings;
    Graph g = parse_dimacs("p edge 2 1\ne 1 2\ne 2 1\n", &warnings);
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(warnings.empty());
}

TEST_CASE("adjacency is symmetric with zero diagonal") {
    Graph g = gnp_graph(20, 0.4, 7);
    for (int i = 0; i < g.n(); ++i) {
        CHECK_FALSE(g.adjacent(i, i));
        for (int j = 0; j < g.n(); ++j) CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    }
}

TEST_CASE("parse errors name the offending line") {
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("p edge 3 1\ne 1 5\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_dimacs("p edge 3 1\ne 1 x\n"), doctest::Contains("non-integer"),
                         ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("c only comments\n"), ParseError);
}

TEST_CASE("unknown line types are skipped with a warning") {
    std::vector<std::string> warnings;
    Graph g = parse_dimacs("p edge 2 1\nx whatever extra\ne 1 2\n", &warnings);
    CHECK(g.m() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("unknown line type") != std::string::npos);
}

TEST_CASE("dimacs round-trip preserves the edge set") {
    Graph g = gnp_graph(30, 0.3, 11);
    Graph back = parse_dimacs(write_dimacs(g));
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("mycielski chain matches the published instance sizes") {
    // (level, n, m) of the COLOR02 myciel family
    const int expected[][3] = {{3, 11, 20}, {4, 23, 71}, {5, 47, 236}, {6, 95, 755}, {7, 191, 2360}};
    for (auto [level, n, m] : expected) {
        Graph g = mycielski_graph(level);
        CHECK(g.n() == n);
        CHECK(g.m() == m);
    }
}

TEST_CASE("validate counts conflicts and equity violations") {
    Graph k3 = complete_graph(3);
    CHECK(validate(k3, {{0, 1, 2}, 3}, Mode::GCP).legal);
    CHECK(validate(k3, {{0, 1, 2}, 3}, Mode::GCP).conflict_count == 0);

    ValidationReport one = validate(k3, {{0, 0, 1}, 2}, Mode::GCP);
    CHECK(one.conflict_count == 1);
    CHECK_FALSE(one.legal);

    // all five vertices in one of two groups: sizes (5,0) against c1=2, c2=3
    Graph empty5 = edgeless_graph(5);
    ValidationReport eq = validate(empty5, {{0, 0, 0, 0, 0}, 2}, Mode::ECP);
    CHECK(eq.conflict_count == 0);
    CHECK(eq.equity_violation == 4);
    CHECK_FALSE(eq.legal);
    CHECK(validate(empty5, {{0, 0, 0, 0, 0}, 2}, Mode::GCP).legal);

    CHECK_THROWS_AS(validate(k3, {{0, 1}, 2}, Mode::GCP), std::invalid_argument);
}

TEST_CASE("equity bounds collapse when k divides n") {
    CHECK(equity_bounds(5, 2) == std::pair<long long, long long>{2, 3});
    CHECK(equity_bounds(6, 3) == std::pair<long long, long long>{2, 2});
    CHECK(equity_bounds(4, 8) == std::pair<long long, long long>{0, 1});
}

TEST_CASE("dsatur colors cliques and edgeless graphs tightly") {
    CHECK(greedy_upper_bound(complete_graph(3), 0).k == 3);
    CHECK(greedy_upper_bound(edgeless_graph(5), 0).k == 1);
}

TEST_CASE("dsatur bound on myciel4 is pinned") {
    // reference run; the chromatic number is 5
    Coloring c = greedy_upper_bound(mycielski_graph(4), 0);
    CHECK(c.k == 5);
    CHECK(validate(mycielski_graph(4), c, Mode::GCP).legal);
}

TEST_CASE("dsatur output is always a legal coloring") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = gnp_graph(40, 0.35, 100 + seed);
        Coloring c = greedy_upper_bound(g, seed);
        ValidationReport rep = validate(g, c, Mode::GCP);
        CHECK(rep.conflict_count == 0);
        CHECK(rep.legal);
    }
}

}  // TEST_SUITE
