#include "radiogrid/grid.hpp"

#include <algorithm>
#include <cstdlib>

namespace radiogrid {

namespace {

void require_in_bounds(const GridGraph& g, Vertex v, const char* what) {
    if (!g.in_bounds(v))
        throw std::invalid_argument(std::string(what) + ": vertex (" +
                                    std::to_string(v.x) + "," + std::to_string(v.y) +
                                    ") out of bounds for G_{" + std::to_string(g.a()) +
                                    "," + std::to_string(g.b()) + "}");
}

}  // namespace

int distance(const GridGraph& g, Vertex u, Vertex v) {
    require_in_bounds(g, u, "distance");
    require_in_bounds(g, v, "distance");
    return std::abs(u.x - v.x) + std::abs(u.y - v.y);
}

int diameter(const GridGraph& g) { return g.a() + g.b() - 2; }

int d_rect(const GridGraph& g, Vertex corner1, Vertex corner2, Vertex probe) {
    require_in_bounds(g, corner1, "d_rect");
    require_in_bounds(g, corner2, "d_rect");
    require_in_bounds(g, probe, "d_rect");
    const int lox = std::min(corner1.x, corner2.x), hix = std::max(corner1.x, corner2.x);
    const int loy = std::min(corner1.y, corner2.y), hiy = std::max(corner1.y, corner2.y);
    const int gx = std::max({0, lox - probe.x, probe.x - hix});
    const int gy = std::max({0, loy - probe.y, probe.y - hiy});
    return gx + gy;
}

Region classify_region(const GridGraph& g, Vertex v) {
    require_in_bounds(g, v, "classify_region");
    const int a = g.a(), b = g.b();
    // side: -1 left/below, 0 on a median (odd dimension only), +1 right/above
    const auto side = [](int coord, int dim) {
        if (dim % 2 == 0) return coord >= dim / 2 + 1 ? +1 : -1;
        if (coord == (dim + 1) / 2) return 0;
        return coord > (dim + 1) / 2 ? +1 : -1;
    };
    const int sx = side(v.x, a);
    const int sy = side(v.y, b);
    if (sx == 0 && sy == 0) return Region::MedianIntersection;
    if (sx == 0) return Region::YMedian;
    if (sy == 0) return Region::XMedian;
    if (sx > 0) return sy > 0 ? Region::QuadrantI : Region::QuadrantIV;
    return sy > 0 ? Region::QuadrantII : Region::QuadrantIII;
}

NormalizedGrid normalize_orientation(int a, int b) {
    if (a < 3 || b < 3)
        throw unsupported_size_error(
            "grids with a <= 2 or b <= 2 (ladders and paths) are not supported; "
            "a, b >= 3 is required");
    bool transpose = false;
    if (a % 2 != b % 2) {
        transpose = a % 2 != 0;  // put the even dimension first
    } else {
        transpose = a > b;       // same parity: a <= b
    }
    if (transpose) std::swap(a, b);
    return NormalizedGrid{GridGraph(a, b), transpose};
}

ParityCase parity_case(int a, int b) {
    NormalizedGrid ng = normalize_orientation(a, b);
    const int na = ng.grid.a(), nb = ng.grid.b();
    if (na % 2 == 0 && nb % 2 == 0) return ParityCase::EvenEven;
    if (na % 2 == 0) return ParityCase::EvenOdd;
    return ParityCase::OddOdd;
}

std::string to_string(ParityCase pc) {
    switch (pc) {
        case ParityCase::EvenEven: return "even_even";
        case ParityCase::EvenOdd: return "even_odd";
        case ParityCase::OddOdd: return "odd_odd";
    }
    return "?";
}

std::string to_string(Region r) {
    switch (r) {
        case Region::QuadrantI: return "quadrant_1";
        case Region::QuadrantII: return "quadrant_2";
        case Region::QuadrantIII: return "quadrant_3";
        case Region::QuadrantIV: return "quadrant_4";
        case Region::XMedian: return "x_median";
        case Region::YMedian: return "y_median";
        case Region::MedianIntersection: return "median_intersection";
    }
    return "?";
}

}  // namespace radiogrid
