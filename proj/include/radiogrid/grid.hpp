#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radiogrid {

/// Thrown when a grid is too small for the closed forms / constructions
/// (they require a, b >= 3; 2xN ladders and 1xN paths are out of scope).
class unsupported_size_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 1-indexed grid coordinate, x in [1,a] horizontal, y in [1,b] vertical.
struct Vertex {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class ParityCase { EvenEven, EvenOdd, OddOdd };

enum class Region {
    QuadrantI,    // x right of center, y above center
    QuadrantII,   // x left, y above
    QuadrantIII,  // x left, y below
    QuadrantIV,   // x right, y below
    XMedian,      // y == (b+1)/2, x off the y-median (b odd)
    YMedian,      // x == (a+1)/2, y off the x-median (a odd)
    MedianIntersection,
};

/// Cartesian product of two paths: a vertices in x, b vertices in y.
/// The metric layer accepts any a,b >= 1; the closed forms and the
/// constructions additionally require a,b >= 3.
class GridGraph {
public:
    GridGraph(int a, int b) : a_(a), b_(b) {
        if (a < 1 || b < 1)
            throw std::invalid_argument("GridGraph: dimensions must be >= 1");
    }

    int a() const { return a_; }
    int b() const { return b_; }
    long long vertex_count() const { return static_cast<long long>(a_) * b_; }

    bool in_bounds(Vertex v) const {
        return 1 <= v.x && v.x <= a_ && 1 <= v.y && v.y <= b_;
    }

    /// Flat index, row-major by y then x. Vertices must be in bounds.
    int index_of(Vertex v) const { return (v.y - 1) * a_ + (v.x - 1); }
    Vertex vertex_at(int idx) const { return Vertex{idx % a_ + 1, idx / a_ + 1}; }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<size_t>(vertex_count()));
        for (int y = 1; y <= b_; ++y)
            for (int x = 1; x <= a_; ++x)
                out.push_back(Vertex{x, y});
        return out;
    }

private:
    int a_;
    int b_;
};

/// Shortest-path (Manhattan) distance. Throws on out-of-bounds input.
int distance(const GridGraph& g, Vertex u, Vertex v);

/// diam(G_{a,b}) = a + b - 2.
int diameter(const GridGraph& g);

/// Minimum distance from `probe` to the axis-aligned bounding rectangle
/// spanned by corner1 and corner2. Satisfies
///   2*d_rect = d(corner1,probe) + d(probe,corner2) - d(corner1,corner2).
int d_rect(const GridGraph& g, Vertex corner1, Vertex corner2, Vertex probe);

/// Quadrant / median classification. For an even dimension the split is
/// between k/2 and k/2+1; for an odd dimension the middle line is a median.
Region classify_region(const GridGraph& g, Vertex v);

struct NormalizedGrid {
    GridGraph grid;
    bool transposed;  // true if (a,b) was reoriented to (b,a)
};

/// Reorient so the formula/construction case analysis applies verbatim:
/// mixed parity puts the even dimension first; otherwise a <= b.
/// Requires a,b >= 3.
NormalizedGrid normalize_orientation(int a, int b);

/// Parity case of the normalized orientation. Requires a,b >= 3.
ParityCase parity_case(int a, int b);

std::string to_string(ParityCase pc);
std::string to_string(Region r);

}  // namespace radiogrid
