#include <doctest.h>

#include <cstdlib>
#include <set>

#include "radiogrid/constructions.hpp"
#include "radiogrid/formulas.hpp"

using namespace radiogrid;

namespace {

long long sum_dx(const Ordering& s) {
    long long t = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i) t += std::abs(s[i + 1].x - s[i].x);
    return t;
}

void check_permutation(const GridGraph& g, const Ordering& s) {
    REQUIRE(s.size() == static_cast<size_t>(g.vertex_count()));
    std::set<std::pair<int, int>> seen;
    for (Vertex v : s) {
        CHECK(g.in_bounds(v));
        CHECK(seen.insert({v.x, v.y}).second);
    }
}

}  // namespace

TEST_CASE("max_dx_ordering attains the per-axis maximum") {
    CHECK(sum_dx(max_dx_ordering(GridGraph(6, 4))) == 71);
    CHECK(sum_dx(max_dx_ordering(GridGraph(5, 4))) == 48);
    for (int a = 2; a <= 9; ++a)
        for (int b = 2; b <= 9; ++b) {
            GridGraph g(a, b);
            const Ordering s = max_dx_ordering(g);
            check_permutation(g, s);
            CHECK(sum_dx(s) == max_dx_formula(a, b));
        }
}

TEST_CASE("max_dx_ordering endpoint discipline") {
    {
        const Ordering s = max_dx_ordering(GridGraph(6, 4));
        CHECK(s.front().x == 3);
        CHECK(s.back().x == 4);
        for (size_t i = 0; i + 1 < s.size(); ++i)  // strict alternation
            CHECK(((s[i].x <= 3) != (s[i + 1].x <= 3)));
    }
    {
        const Ordering s = max_dx_ordering(GridGraph(5, 4));
        CHECK(s.front().x == 3);
        CHECK(s.back().x == 3);
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            const bool bothA = s[i].x < 3 && s[i + 1].x < 3;
            const bool bothB = s[i].x > 3 && s[i + 1].x > 3;
            CHECK_FALSE(bothA);
            CHECK_FALSE(bothB);
        }
    }
}

TEST_CASE("t_plus_ordering certificates") {
    CHECK(step_report(GridGraph(4, 4), t_plus_ordering(GridGraph(4, 4))).distance_sum == 61);
    CHECK(step_report(GridGraph(4, 3), t_plus_ordering(GridGraph(4, 3))).distance_sum == 39);
    CHECK(step_report(GridGraph(3, 3), t_plus_ordering(GridGraph(3, 3))).distance_sum == 23);
    for (int a = 3; a <= 12; ++a)
        for (int b = 3; b <= 12; ++b) {
            GridGraph g(a, b);
            const Ordering s = t_plus_ordering(g);
            check_permutation(g, s);
            CHECK(step_report(g, s).distance_sum == t_plus_formula(a, b));
        }
}

TEST_CASE("t_plus_ordering endpoints per parity case (normalized grids)") {
    {  // even*even: opposing central vertices
        const Ordering s = t_plus_ordering(GridGraph(6, 8));
        CHECK(s.front() == Vertex{4, 5});
        CHECK(s.back() == Vertex{3, 5});
    }
    {  // even*odd: center of the x-median, reserved right neighbour last
        const Ordering s = t_plus_ordering(GridGraph(6, 5));
        CHECK(s.front() == Vertex{3, 3});
        CHECK(s.back() == Vertex{4, 3});
    }
    {  // odd*odd: median intersection to one below
        const Ordering s = t_plus_ordering(GridGraph(5, 7));
        CHECK(s.front() == Vertex{3, 4});
        CHECK(s.back() == Vertex{3, 3});
    }
}

TEST_CASE("rn_ordering certificates and bump profiles, sweep") {
    for (int a = 3; a <= 12; ++a) {
        for (int b = 3; b <= 12; ++b) {
            GridGraph g(a, b);
            const Ordering s = rn_ordering(g);
            check_permutation(g, s);
            const StepReport r = step_report(g, s);
            CHECK(r.span == rn_formula(a, b));
            CHECK(r.distance_sum == t_plus_formula(a, b));
            if (a % 2 == 0 && b % 2 == 0) {
                REQUIRE(r.bump_events.size() == 2);
                CHECK(r.bump_events[0].index == 2);
                CHECK(r.bump_events[0].magnitude == 1);
                CHECK(r.bump_events[1].index == static_cast<int>(g.vertex_count()) - 2);
                CHECK(r.bump_events[1].magnitude == 1);
            } else {
                CHECK(r.bump_events.empty());
            }
        }
    }
}

TEST_CASE("rn_ordering spec values") {
    CHECK(span(optimal_labeling(GridGraph(6, 5))) == 129);
    CHECK(span(optimal_labeling(GridGraph(6, 6))) == 174);
    CHECK(span(optimal_labeling(GridGraph(5, 7))) == 171);
    CHECK(span(optimal_labeling(GridGraph(3, 3))) == 17);
}

TEST_CASE("optimal_labeling is valid, zero-based, increasing along its ordering") {
    for (auto [a, b] : {std::pair{5, 4}, {7, 5}, {4, 6}, {3, 9}}) {
        GridGraph g(a, b);
        const Labeling f = optimal_labeling(g);
        CHECK(validate(g, f).empty());
        const Ordering s = ordering_of(f);
        CHECK(f.at(s.front()) == 0);
        for (size_t i = 1; i < s.size(); ++i) CHECK(f.at(s[i]) > f.at(s[i - 1]));
    }
}

TEST_CASE("transposed inputs map back to the caller's orientation") {
    GridGraph g(5, 6);  // normalizes to G_{6,5}
    const Ordering s = rn_ordering(g);
    check_permutation(g, s);
    CHECK(step_report(g, s).span == rn_formula(5, 6));
}

TEST_CASE("even*odd interior steps keep d_rect at (D+1)/2 in the quadrant parts") {
    GridGraph g(6, 5);
    const int D = diameter(g);
    const Ordering s = rn_ordering(g);
    // part (1): u_1 plus quadrant pairs; every triple inside rides equality
    const size_t part1 = 1 + 2 * (6 / 2) * ((5 - 1) / 2);
    for (size_t k = 2; k < part1; ++k)
        CHECK(d_rect(g, s[k - 2], s[k], s[k - 1]) == (D + 1) / 2);
    // median thread: d_rect at most a/2 + 1
    for (size_t k = part1 + 1; k < part1 + (6 / 2 - 1) * 2; ++k)
        CHECK(d_rect(g, s[k - 2], s[k], s[k - 1]) <= 6 / 2 + 1);
}

TEST_CASE("narrow odd grids expose the sinking wedge structure") {
    // for a = 3 the emitter is the direct square-and-wedges schedule: the
    // (b-3)/2 wedge peaks (3+1)/2-column stubs are visited top-down, each
    // between two off-median vertices on opposite x-sides
    for (int b = 5; b <= 15; b += 2) {
        GridGraph g(3, b);
        const Ordering s = rn_ordering(g);
        const int cy = (b + 1) / 2;
        std::vector<int> peak_positions;
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i].x == 2 && s[i].y > cy + 1) peak_positions.push_back(static_cast<int>(i));
        CHECK(peak_positions.size() == static_cast<size_t>((b - 3) / 2));
        for (size_t t = 1; t < peak_positions.size(); ++t) {
            CHECK(peak_positions[t] > peak_positions[t - 1]);
            // sinking: peaks are visited top-down
            CHECK(s[peak_positions[t]].y < s[peak_positions[t - 1]].y);
        }
        for (int p : peak_positions) {
            REQUIRE(p > 0);
            REQUIRE(p + 1 < static_cast<int>(s.size()));
            CHECK(s[p - 1].x != 2);
            CHECK(s[p + 1].x != 2);
            CHECK(s[p - 1].x != s[p + 1].x);
        }
    }
}

TEST_CASE("unsupported sizes fail loudly") {
    CHECK_THROWS_AS(rn_ordering(GridGraph(2, 9)), unsupported_size_error);
    CHECK_THROWS_AS(t_plus_ordering(GridGraph(9, 2)), unsupported_size_error);
    CHECK_THROWS_AS(optimal_labeling(GridGraph(1, 5)), unsupported_size_error);
}
