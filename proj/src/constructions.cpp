#include "radiogrid/constructions.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>

#include "radiogrid/formulas.hpp"

namespace radiogrid {

namespace {

// ---------------------------------------------------------------------------
// Case A (a even, b odd): start on the right half of the x-median, pair the
// third quadrant against the first by translation, thread the median, then
// mirror the quadrant phase for quadrants 2/4, ending at (a/2, (b+1)/2).
// Every consecutive triple keeps 2*d_rect <= D+1, so the ordering is
// bump-free and its distance sum is t+.
Ordering case_even_odd(int a, int b) {
    const int cy = (b + 1) / 2;
    const int p = a / 2, q = (b - 1) / 2;
    const auto q3v = [](int x, int y) { return Vertex{x, y}; };
    const auto q1v = [&](int x, int y) { return Vertex{a / 2 + x, cy + y}; };
    const auto mirror = [&](Vertex v) { return Vertex{a + 1 - v.x, v.y}; };

    std::vector<std::pair<int, int>> cells;
    for (int y = 1; y <= q; ++y)
        for (int x = 1; x <= p; ++x) cells.emplace_back(x, y);

    Ordering s;
    s.reserve(static_cast<size_t>(a) * b);
    s.push_back(Vertex{a / 2 + 1, cy});
    for (auto [x, y] : cells) {
        s.push_back(q3v(x, y));
        s.push_back(q1v(x, y));
    }
    for (int j = 1; j < p; ++j) {
        s.push_back(Vertex{j, cy});
        s.push_back(Vertex{a / 2 + j + 1, cy});
    }
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
        s.push_back(mirror(q1v(it->first, it->second)));
        s.push_back(mirror(q3v(it->first, it->second)));
    }
    s.push_back(Vertex{a / 2, cy});
    return s;
}

// ---------------------------------------------------------------------------
// Case B (a, b even): quadrant pairing q1/q3 then q4/q2. The quadrant-cell
// schedules are anti-diagonal sweeps; the two forced unit bumps sit at steps
// 2 and n-2 (the corner-to-center jumps), everything else rides
// 2*d_rect <= D+1+b_prev exactly.
Ordering case_even_even(int a, int b) {
    const int p = a / 2, q = b / 2;
    const auto q1v = [&](int x, int y) { return Vertex{p + x, q + y}; };
    const auto q2v = [&](int x, int y) { return Vertex{x, q + y}; };
    const auto q3v = [](int x, int y) { return Vertex{x, y}; };
    const auto q4v = [&](int x, int y) { return Vertex{p + x, y}; };

    std::vector<std::pair<int, int>> all;
    for (int x = 1; x <= p; ++x)
        for (int y = 1; y <= q; ++y) all.emplace_back(x, y);

    // phase 1: (1,1), (p,q), then the rest by descending x+y (ties: x asc).
    std::vector<std::pair<int, int>> s1{{1, 1}, {p, q}};
    {
        std::vector<std::pair<int, int>> rest;
        for (auto c : all)
            if (c != std::pair{1, 1} && c != std::pair{p, q}) rest.push_back(c);
        std::sort(rest.begin(), rest.end(), [](auto l, auto r) {
            const int sl = l.first + l.second, sr = r.first + r.second;
            if (sl != sr) return sl > sr;
            return l.first < r.first;
        });
        s1.insert(s1.end(), rest.begin(), rest.end());
    }
    // phase 2: (p,q), then by descending x-y (ties: x asc), then the two
    // reserved corner cells whose quadrant-1/2 copies close the ordering.
    std::vector<std::pair<int, int>> s2{{p, q}};
    {
        std::vector<std::pair<int, int>> rest;
        for (auto c : all)
            if (c != std::pair{p, q} && c != std::pair{1, q} && c != std::pair{p, 1})
                rest.push_back(c);
        std::sort(rest.begin(), rest.end(), [](auto l, auto r) {
            const int kl = l.first - l.second, kr = r.first - r.second;
            if (kl != kr) return kl > kr;
            return l.first < r.first;
        });
        s2.insert(s2.end(), rest.begin(), rest.end());
        s2.emplace_back(1, q);
        s2.emplace_back(p, 1);
    }

    Ordering s;
    s.reserve(static_cast<size_t>(a) * b);
    for (auto [x, y] : s1) {
        s.push_back(q1v(x, y));
        s.push_back(q3v(x, y));
    }
    for (auto [x, y] : s2) {
        s.push_back(q4v(x, y));
        s.push_back(q2v(x, y));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Case C (a, b odd, a <= b). Centered coordinates (i,j) = (x-cx, y-cy).
//
// For a == 3 the ordering is emitted directly: an expanding square around
// the center (corner / median-arm rotation), then (b-a)/2 sinking
// wedge/vee pairs swept top-down, entered through the lower-median pits,
// closing at (cx, cy-1). Every probe rides 2*d_rect <= D+1 with equality.
//
// For a >= 5 the same side-alternation and d_rect <= (D+1)/2 constraints are
// solved by a deterministic depth-first search: candidates are tried by
// decreasing distance from the current vertex with a fixed tie-break; a
// small portfolio of tie-breaks covers all sizes (each member is given a
// bounded node budget, and infeasible-count pruning keeps failures cheap).

struct CenteredGrid {
    int al, be, cx, cy;
    Vertex abs(int i, int j) const { return Vertex{i + cx, j + cy}; }
};

Ordering case_odd_odd_narrow(int a, int b) {
    // a == 3; for b == 3 the expanding square alone closes the ordering.
    const CenteredGrid cg{(a - 1) / 2, (b - 1) / 2, (a + 1) / 2, (b + 1) / 2};
    Ordering s;
    s.reserve(static_cast<size_t>(a) * b);
    if (b == 3) {
        const std::array<std::pair<int, int>, 9> seq{
            {{0, 0}, {1, 1}, {-1, 0}, {1, -1}, {0, 1}, {-1, -1}, {1, 0}, {-1, 1}, {0, -1}}};
        for (auto [i, j] : seq) s.push_back(cg.abs(i, j));
        return s;
    }
    const int al = cg.al, be = cg.be;
    const int rings = al;              // one ring for a == 3
    const int wedges = be - rings;     // (b - a) / 2 sinking pairs
    s.push_back(cg.abs(0, 0));
    for (int r = 1; r <= rings; ++r) {
        s.push_back(cg.abs(al - r + 1, be));      // z toward (a,b)
        s.push_back(cg.abs(-r, 0));               // left arm
        s.push_back(cg.abs(al - r + 1, -be));     // z toward (a,1)
        s.push_back(cg.abs(0, r));                // upper arm
        s.push_back(cg.abs(-(al - r + 1), -be));  // z toward (1,1)
        s.push_back(cg.abs(r, 0));                // right arm
        s.push_back(cg.abs(-(al - r + 1), be));   // z toward (1,b)
        s.push_back(cg.abs(0, -r - 1));           // lowered arm, enters wedge 1
    }
    for (int t = 1; t <= wedges; ++t) {
        if (t > 1) s.push_back(cg.abs(0, -rings - t));  // pit entry
        const int peak = be - t + 1;
        std::vector<std::pair<int, int>> vee;  // legs, left to right, no pit
        for (int i = -al; i <= al; ++i)
            if (i != 0) vee.emplace_back(i, -(al + t - std::abs(i)));
        int k = 0;
        for (int i = al; i >= -al; --i) {
            s.push_back(cg.abs(i, peak - std::abs(i)));
            if (i > -al) s.push_back(cg.abs(vee[k].first, vee[k].second)), ++k;
        }
    }
    s.push_back(cg.abs(0, -1));
    return s;
}

struct OddSearch {
    int a, b, al, be, thr, n;
    std::vector<std::pair<int, int>> verts;  // centered
    std::vector<char> used;
    std::vector<int> seq;                    // indices into verts
    int remx[3] = {0, 0, 0}, remy[3] = {0, 0, 0};  // index side+1
    int remq[3][3] = {};                     // [sx+1][sy+1]
    long long nodes = 0, budget = 0;
    int variant = 0;

    explicit OddSearch(int a_, int b_) : a(a_), b(b_) {
        al = (a - 1) / 2;
        be = (b - 1) / 2;
        thr = al + be;
        n = a * b;
        for (int x = 1; x <= a; ++x)
            for (int y = 1; y <= b; ++y) verts.emplace_back(x - al - 1, y - be - 1);
        used.assign(verts.size(), 0);
        for (auto [i, j] : verts) {
            ++remx[sgn(i) + 1];
            ++remy[sgn(j) + 1];
            ++remq[sgn(i) + 1][sgn(j) + 1];
        }
    }

    static int sgn(int v) { return (v > 0) - (v < 0); }

    static bool ok_pair(std::pair<int, int> u, std::pair<int, int> v) {
        const int ux = sgn(u.first), vx = sgn(v.first);
        if (ux != 0 && ux == vx) return false;
        const int uy = sgn(u.second), vy = sgn(v.second);
        return !(uy != 0 && uy == vy);
    }

    static int rect_gap(std::pair<int, int> c1, std::pair<int, int> c2,
                        std::pair<int, int> probe) {
        const int lox = std::min(c1.first, c2.first), hix = std::max(c1.first, c2.first);
        const int loy = std::min(c1.second, c2.second), hiy = std::max(c1.second, c2.second);
        const int gx = std::max({0, lox - probe.first, probe.first - hix});
        const int gy = std::max({0, loy - probe.second, probe.second - hiy});
        return gx + gy;
    }

    void take(int vi) {
        used[vi] = 1;
        seq.push_back(vi);
        auto [i, j] = verts[vi];
        --remx[sgn(i) + 1];
        --remy[sgn(j) + 1];
        --remq[sgn(i) + 1][sgn(j) + 1];
    }
    void untake() {
        const int vi = seq.back();
        seq.pop_back();
        used[vi] = 0;
        auto [i, j] = verts[vi];
        ++remx[sgn(i) + 1];
        ++remy[sgn(j) + 1];
        ++remq[sgn(i) + 1][sgn(j) + 1];
    }

    bool feasible() const {
        // strict left/right (and below/above) repeats need a median between
        if (std::max(0, remx[0] - remx[2] - 1) > remx[1]) return false;
        if (std::max(0, remx[2] - remx[0] - 1) > remx[1]) return false;
        if (std::max(0, remy[0] - remy[2] - 1) > remy[1]) return false;
        if (std::max(0, remy[2] - remy[0] - 1) > remy[1]) return false;
        // strict-quadrant vertices need closed-opposite separators
        for (int qx = -1; qx <= 1; qx += 2) {
            for (int qy = -1; qy <= 1; qy += 2) {
                const int demand = remq[qx + 1][qy + 1];
                if (demand == 0) continue;
                int supply = 0;
                for (int sx = -1; sx <= 1; ++sx)
                    for (int sy = -1; sy <= 1; ++sy) {
                        if (sx == qx || sy == qy) continue;
                        supply += remq[sx + 1][sy + 1];
                    }
                if (demand > supply + 1) return false;
            }
        }
        return true;
    }

    bool tie_less(std::pair<int, int> l, std::pair<int, int> r) const {
        const auto key = [&](std::pair<int, int> v) -> std::array<int, 3> {
            const int i = v.first, j = v.second;
            switch (variant) {
                case 0: return {i, j, 0};
                case 1: return {i, -j, 0};
                case 2: return {-i, j, 0};
                case 3: return {-i, -j, 0};
                case 4: return {j, i, 0};
                case 5: return {-j, i, 0};
                case 6: return {-std::abs(j), i, j};
                default: return {std::abs(j), i, j};
            }
        };
        return key(l) < key(r);
    }

    bool dfs(int final_vi) {
        if (++nodes > budget) return false;
        const int pos = static_cast<int>(seq.size());
        const auto last = verts[seq.back()];
        if (pos == n - 1) {
            const auto fin = verts[final_vi];
            if (ok_pair(last, fin) &&
                rect_gap(verts[seq[pos - 2]], fin, last) <= thr) {
                take(final_vi);
                return true;
            }
            return false;
        }
        const bool have_prev = pos >= 2;
        const auto prev = have_prev ? verts[seq[pos - 2]] : last;
        std::vector<int> cands;
        cands.reserve(verts.size() - pos);
        for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi) {
            if (used[vi] || vi == final_vi) continue;
            const auto v = verts[vi];
            if (!ok_pair(last, v)) continue;
            if (have_prev && rect_gap(prev, v, last) > thr) continue;
            cands.push_back(vi);
        }
        std::sort(cands.begin(), cands.end(), [&](int l, int r) {
            const auto vl = verts[l], vr = verts[r];
            const int dl = std::abs(vl.first - last.first) + std::abs(vl.second - last.second);
            const int dr = std::abs(vr.first - last.first) + std::abs(vr.second - last.second);
            if (dl != dr) return dl > dr;
            return tie_less(vl, vr);
        });
        for (int vi : cands) {
            take(vi);
            if (feasible() && dfs(final_vi)) return true;
            untake();
        }
        return false;
    }

    bool run(int var, long long node_budget) {
        variant = var;
        budget = node_budget;
        nodes = 0;
        seq.clear();
        std::fill(used.begin(), used.end(), 0);
        remx[0] = remx[1] = remx[2] = 0;
        remy[0] = remy[1] = remy[2] = 0;
        for (auto& row : remq) row[0] = row[1] = row[2] = 0;
        for (auto [i, j] : verts) {
            ++remx[sgn(i) + 1];
            ++remy[sgn(j) + 1];
            ++remq[sgn(i) + 1][sgn(j) + 1];
        }
        int start_vi = -1, final_vi = -1;
        for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi) {
            if (verts[vi] == std::pair{0, 0}) start_vi = vi;
            if (verts[vi] == std::pair{0, -1}) final_vi = vi;
        }
        take(start_vi);
        return dfs(final_vi);
    }
};

Ordering case_odd_odd(int a, int b) {
    if (a == 3) return case_odd_odd_narrow(a, b);
    OddSearch search(a, b);
    const long long budget = 60000 + 50LL * search.n;
    // tried in decreasing empirical coverage order
    for (int var : {0, 4, 5, 1, 6, 7, 2, 3}) {
        if (search.run(var, budget)) {
            Ordering s;
            s.reserve(search.seq.size());
            for (int vi : search.seq) {
                const auto [i, j] = search.verts[vi];
                s.push_back(Vertex{i + search.al + 1, j + search.be + 1});
            }
            return s;
        }
    }
    throw std::runtime_error("rn_ordering: odd-grid search portfolio exhausted for G_{" +
                             std::to_string(a) + "," + std::to_string(b) + "}");
}

Ordering transpose_back(const Ordering& s, bool transposed) {
    if (!transposed) return s;
    Ordering out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(Vertex{v.y, v.x});
    return out;
}

Ordering rotate_180(const Ordering& s, int a, int b) {
    Ordering out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(Vertex{a + 1 - v.x, b + 1 - v.y});
    return out;
}

}  // namespace

Ordering max_dx_ordering(const GridGraph& g) {
    const int a = g.a(), b = g.b();
    if (a < 2) throw unsupported_size_error("max_dx_ordering: a >= 2 required");
    Ordering s;
    s.reserve(static_cast<size_t>(a) * b);
    if (a % 2 == 0) {
        // alternate sides starting at column a/2, ending at column a/2+1
        std::vector<Vertex> left, right;
        for (int x = a / 2; x >= 1; --x)
            for (int y = 1; y <= b; ++y) left.push_back(Vertex{x, y});
        for (int x = a; x >= a / 2 + 1; --x)
            for (int y = 1; y <= b; ++y) right.push_back(Vertex{x, y});
        for (size_t k = 0; k < left.size(); ++k) {
            s.push_back(left[k]);
            s.push_back(right[k]);
        }
    } else {
        // start and end on the middle column; never two consecutive on the
        // same strict side
        const int cx = (a + 1) / 2;
        std::vector<Vertex> left, right;
        for (int x = 1; x < cx; ++x)
            for (int y = 1; y <= b; ++y) left.push_back(Vertex{x, y});
        for (int x = cx + 1; x <= a; ++x)
            for (int y = 1; y <= b; ++y) right.push_back(Vertex{x, y});
        s.push_back(Vertex{cx, 1});
        for (size_t k = 0; k < left.size(); ++k) {
            s.push_back(left[k]);
            s.push_back(right[k]);
        }
        for (int y = 2; y <= b; ++y) s.push_back(Vertex{cx, y});
    }
    return s;
}

Ordering rn_ordering(const GridGraph& g) {
    NormalizedGrid ng = normalize_orientation(g.a(), g.b());
    const int a = ng.grid.a(), b = ng.grid.b();
    Ordering s;
    if (a % 2 == 0 && b % 2 == 0)
        s = case_even_even(a, b);
    else if (a % 2 == 0)
        s = case_even_odd(a, b);
    else
        s = case_odd_odd(a, b);
    return transpose_back(s, ng.transposed);
}

Ordering t_plus_ordering(const GridGraph& g) {
    NormalizedGrid ng = normalize_orientation(g.a(), g.b());
    const int a = ng.grid.a(), b = ng.grid.b();
    Ordering s;
    if (a % 2 == 0 && b % 2 == 0) {
        s = case_even_even(a, b);
    } else if (a % 2 == 0) {
        // starts at (a/2, cy) and ends at the reserved (a/2+1, cy): the
        // 180-degree rotation of the rn ordering, distance structure intact
        s = rotate_180(case_even_odd(a, b), a, b);
    } else {
        s = case_odd_odd(a, b);
    }
    return transpose_back(s, ng.transposed);
}

Labeling optimal_labeling(const GridGraph& g) {
    const Ordering s = rn_ordering(g);
    Labeling f = min_span_labeling(g, s);
    if (span(f) != rn_formula(g.a(), g.b()))
        throw std::logic_error("optimal_labeling: constructed span misses the closed form");
    return f;
}

}  // namespace radiogrid
