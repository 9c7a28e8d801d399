#include "radiogrid/labeling.hpp"

#include <algorithm>
#include <limits>

namespace radiogrid {

void require_permutation(const GridGraph& g, const Ordering& s) {
    const auto n = static_cast<size_t>(g.vertex_count());
    if (s.size() != n)
        throw std::invalid_argument("ordering must list every vertex exactly once");
    std::vector<char> seen(n, 0);
    for (Vertex v : s) {
        if (!g.in_bounds(v))
            throw std::invalid_argument("ordering contains an out-of-bounds vertex");
        char& c = seen[g.index_of(v)];
        if (c) throw std::invalid_argument("ordering repeats a vertex");
        c = 1;
    }
}

std::vector<Violation> validate(const GridGraph& g, const Labeling& f) {
    if (f.a() != g.a() || f.b() != g.b())
        throw std::invalid_argument("validate: labeling does not match grid dimensions");
    const int D = diameter(g);
    const auto verts = g.vertices();
    std::vector<Violation> out;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            const long long need = D + 1 - distance(g, verts[i], verts[j]);
            const long long got = std::llabs(f.at(verts[i]) - f.at(verts[j]));
            if (got < need)
                out.push_back(Violation{verts[i], verts[j], need, got});
        }
    }
    return out;
}

long long span(const Labeling& f) {
    if (f.size() == 0)
        throw std::invalid_argument("span: empty labeling");
    const auto [lo, hi] = std::minmax_element(f.raw().begin(), f.raw().end());
    return *hi - *lo;
}

Ordering ordering_of(const Labeling& f) {
    GridGraph g(f.a(), f.b());
    Ordering out = g.vertices();
    std::sort(out.begin(), out.end(), [&](Vertex u, Vertex v) {
        return f.at(u) < f.at(v);
    });
    for (size_t i = 1; i < out.size(); ++i)
        if (f.at(out[i - 1]) == f.at(out[i]))
            throw std::invalid_argument("ordering_of: labels are not injective");
    return out;
}

Labeling min_span_labeling(const GridGraph& g, const Ordering& s) {
    require_permutation(g, s);
    const int D = diameter(g);
    const size_t n = s.size();
    std::vector<long long> lab(n, 0);  // lab[i] = f(u_{i+1})
    for (size_t i = 1; i < n; ++i) {
        long long best = 0;
        for (size_t j = 0; j < i; ++j) {
            const long long need = lab[j] + D + 1 - distance(g, s[i], s[j]);
            best = std::max(best, need);
        }
        lab[i] = best;
    }
    std::vector<long long> by_index(n, 0);
    for (size_t i = 0; i < n; ++i) by_index[g.index_of(s[i])] = lab[i];
    return Labeling(g, std::move(by_index));
}

StepReport step_report(const GridGraph& g, const Ordering& s) {
    const Labeling f = min_span_labeling(g, s);
    const int D = diameter(g);
    const size_t n = s.size();
    StepReport r;
    r.d.reserve(n - 1);
    r.f_gaps.reserve(n - 1);
    r.bumps.reserve(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        const int di = distance(g, s[i + 1], s[i]);
        const long long fi = f.at(s[i + 1]) - f.at(s[i]);
        r.d.push_back(di);
        r.f_gaps.push_back(fi);
        r.bumps.push_back(fi - (D + 1 - di));
        r.distance_sum += di;
    }
    r.span = f.at(s[n - 1]) - f.at(s[0]);
    for (size_t i = 0; i + 1 < n; ++i) {
        if (r.bumps[i] <= 0) continue;
        // vertex u_{i+2} (0-based s[i+1]) took a bump; find the binding
        // predecessor: largest c > 1 with u_{(i+2)-c} a tightness neighbor.
        int offset = 0;
        for (size_t j = 0; j + 1 <= i; ++j) {  // s[j], j from 0 to i-1
            const long long need = D + 1 - distance(g, s[i + 1], s[j]);
            if (f.at(s[i + 1]) - f.at(s[j]) == need) {
                offset = static_cast<int>(i + 1 - j);
                break;  // smallest j = largest offset
            }
        }
        r.bump_events.push_back(BumpEvent{static_cast<int>(i + 1), r.bumps[i], offset});
    }
    return r;
}

std::vector<Vertex> tightness_neighbors(const GridGraph& g, const Labeling& f, Vertex u) {
    if (!g.in_bounds(u))
        throw std::invalid_argument("tightness_neighbors: vertex out of bounds");
    const int D = diameter(g);
    std::vector<Vertex> out;
    for (Vertex v : g.vertices()) {
        if (v == u) continue;
        const long long need = D + 1 - distance(g, u, v);
        if (std::llabs(f.at(u) - f.at(v)) == need) out.push_back(v);
    }
    return out;
}

bool bump_condition_holds(const GridGraph& g, Vertex u_km2, Vertex u_km1, Vertex u_k,
                          long long b_km1) {
    if (b_km1 < 0)
        throw std::invalid_argument("bump_condition_holds: negative bump");
    const long long twice = 2LL * d_rect(g, u_km2, u_k, u_km1);
    return twice > diameter(g) + 1 + b_km1;
}

}  // namespace radiogrid
