#include <doctest.h>

#include <algorithm>
#include <random>

#include "radiogrid/formulas.hpp"
#include "radiogrid/oracle.hpp"

using namespace radiogrid;

TEST_CASE("t_plus oracle matches the closed form on small grids") {
    CHECK(oracle_t_plus(GridGraph(3, 3)).value == 23);
    CHECK(oracle_t_plus(GridGraph(3, 4)).value == 39);
    CHECK(oracle_t_plus(GridGraph(4, 4)).value == 61);
}

TEST_CASE("t_plus oracle on degenerate paths") {
    CHECK(oracle_t_plus(GridGraph(2, 1)).value == 1);  // single edge
    CHECK(oracle_t_plus(GridGraph(1, 1)).value == 0);
    CHECK(oracle_t_plus(GridGraph(2, 2)).value == 5);
}

TEST_CASE("t_plus oracle witness re-certifies") {
    GridGraph g(4, 4);
    const OracleResult r = oracle_t_plus(g);
    require_permutation(g, r.witness);
    long long sum = 0;
    for (size_t i = 0; i + 1 < r.witness.size(); ++i)
        sum += distance(g, r.witness[i], r.witness[i + 1]);
    CHECK(sum == r.value);
}

TEST_CASE("t_plus oracle guard") {
    CHECK_THROWS_AS(oracle_t_plus(GridGraph(5, 5)), resource_limit_error);
    CHECK_THROWS_AS(oracle_t_plus(GridGraph(4, 4), 10), resource_limit_error);
}

TEST_CASE("rn oracle matches the closed form") {
    CHECK(oracle_rn(GridGraph(3, 3)).value == 17);
    CHECK(oracle_rn(GridGraph(3, 4)).value == 27);
}

TEST_CASE("rn oracle on degenerate grids") {
    CHECK(oracle_rn(GridGraph(1, 1)).value == 0);
    // 4-cycle: (n-1)(D+1) - t_plus = 9 - 5, attained bump-free
    CHECK(oracle_rn(GridGraph(2, 2)).value == 4);
}

TEST_CASE("rn oracle witness re-certifies") {
    GridGraph g(3, 4);
    const OracleResult r = oracle_rn(g);
    require_permutation(g, r.witness);
    const Labeling f = min_span_labeling(g, r.witness);
    CHECK(span(f) == r.value);
    CHECK(validate(g, f).empty());
}

TEST_CASE("rn oracle guard and override") {
    CHECK_THROWS_AS(oracle_rn(GridGraph(6, 6)), resource_limit_error);
    CHECK_THROWS_AS(oracle_rn(GridGraph(4, 4)), resource_limit_error);
    CHECK(oracle_rn(GridGraph(4, 4), 16).value == 46);  // adjudicates the +6 constant
}

TEST_CASE("rn oracle determinism") {
    const OracleResult r1 = oracle_rn(GridGraph(3, 3));
    const OracleResult r2 = oracle_rn(GridGraph(3, 3));
    CHECK(r1.value == r2.value);
    CHECK(r1.witness == r2.witness);
    CHECK(r1.nodes_explored == r2.nodes_explored);
}

TEST_CASE("max d minus b") {
    CHECK(oracle_max_d_minus_b(GridGraph(3, 3)) == 23);  // equals t_plus, bump-free case
    CHECK(oracle_max_d_minus_b(GridGraph(3, 4)) == 39);
    CHECK(oracle_max_d_minus_b(GridGraph(4, 4), 16) == 59);  // t_plus - 2
}

TEST_CASE("greedy labeling is span-minimal for its ordering (exhaustive)") {
    GridGraph g(3, 3);
    std::mt19937 rng(31337);
    Ordering s = g.vertices();
    for (int trial = 0; trial < 60; ++trial) {
        std::shuffle(s.begin(), s.end(), rng);
        CHECK(exhaustive_min_span_check(g, s));
    }
}

TEST_CASE("exhaustive check on a 3x2 grid (generic metric, within guard)") {
    GridGraph g(3, 2);
    std::mt19937 rng(5);
    Ordering s = g.vertices();
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(s.begin(), s.end(), rng);
        CHECK(exhaustive_min_span_check(g, s));
    }
    CHECK_THROWS_AS(exhaustive_min_span_check(GridGraph(4, 3), GridGraph(4, 3).vertices()),
                    resource_limit_error);
}
