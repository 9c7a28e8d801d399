#include "radiogrid/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <functional>
#include <vector>

namespace radiogrid {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::vector<int>> distance_matrix(const GridGraph& g) {
    const auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = distance(g, verts[i], verts[j]);
    return d;
}

/// dp[S][v] = max distance sum over orderings of subset S ending at v
/// (0xFFFF marks unreachable; values fit in uint16 for n <= 22).
std::vector<std::uint16_t> max_path_table(const std::vector<std::vector<int>>& d, int n,
                                          std::uint64_t* nodes) {
    constexpr std::uint16_t kUnset = 0xFFFF;
    const size_t masks = size_t{1} << n;
    std::vector<std::uint16_t> dp(masks * n, kUnset);
    for (int v = 0; v < n; ++v) dp[(size_t{1} << v) * n + v] = 0;
    for (size_t S = 1; S < masks; ++S) {
        const std::uint16_t* row = &dp[S * n];
        const std::uint32_t rem = static_cast<std::uint32_t>(~S & (masks - 1));
        for (int v = 0; v < n; ++v) {
            const std::uint16_t cur = row[v];
            if (cur == kUnset) continue;
            if (nodes) ++*nodes;
            std::uint32_t w = rem;
            const int* dv = d[v].data();
            while (w) {
                const int u = std::countr_zero(w);
                w &= w - 1;
                const std::uint16_t val = static_cast<std::uint16_t>(cur + dv[u]);
                std::uint16_t& slot = dp[(S | (size_t{1} << u)) * n + u];
                if (slot == kUnset || val > slot) slot = val;
            }
        }
    }
    return dp;
}

}  // namespace

OracleResult oracle_t_plus(const GridGraph& g, int max_n) {
    const long long n64 = g.vertex_count();
    if (n64 > max_n || n64 > kOracleTPlusMaxN)
        throw resource_limit_error("oracle_t_plus: n = " + std::to_string(n64) +
                                   " exceeds the subset-DP guard (" +
                                   std::to_string(std::min<long long>(max_n, kOracleTPlusMaxN)) +
                                   ")");
    const auto t0 = Clock::now();
    const int n = static_cast<int>(n64);
    const auto verts = g.vertices();
    OracleResult res;
    if (n == 1) {
        res.value = 0;
        res.witness = {verts[0]};
        res.elapsed_seconds = seconds_since(t0);
        return res;
    }
    const auto d = distance_matrix(g);
    const auto dp = max_path_table(d, n, &res.nodes_explored);
    const size_t full = (size_t{1} << n) - 1;
    int end = 0;
    std::uint16_t best = 0;
    for (int v = 0; v < n; ++v) {
        const std::uint16_t val = dp[full * n + v];
        if (val != 0xFFFF && val >= best) {
            best = val;
            end = v;
        }
    }
    res.value = best;
    // reconstruct a witness by walking predecessors
    std::vector<int> rev{end};
    size_t S = full;
    int v = end;
    while (S != (size_t{1} << v)) {
        const size_t Sprev = S & ~(size_t{1} << v);
        for (int u = 0; u < n; ++u) {
            if (!(Sprev & (size_t{1} << u))) continue;
            const std::uint16_t pv = dp[Sprev * n + u];
            if (pv != 0xFFFF && pv + d[u][v] == dp[S * n + v]) {
                rev.push_back(u);
                S = Sprev;
                v = u;
                break;
            }
        }
    }
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) res.witness.push_back(verts[*it]);
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

namespace {

/// Orbit representatives: keep only first vertices that are lexicographically
/// minimal within their orbit under the grid's symmetry group.
std::vector<int> first_vertex_candidates(const GridGraph& g) {
    const int a = g.a(), b = g.b();
    const auto verts = g.vertices();
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        const Vertex v = verts[i];
        std::vector<Vertex> orbit{
            {v.x, v.y}, {a + 1 - v.x, v.y}, {v.x, b + 1 - v.y}, {a + 1 - v.x, b + 1 - v.y}};
        if (a == b) {
            orbit.push_back({v.y, v.x});
            orbit.push_back({b + 1 - v.y, v.x});
            orbit.push_back({v.y, a + 1 - v.x});
            orbit.push_back({b + 1 - v.y, a + 1 - v.x});
        }
        const Vertex rep = *std::min_element(orbit.begin(), orbit.end());
        if (rep == v) out.push_back(i);
    }
    return out;
}

struct RnSearch {
    int n, D;
    const std::vector<std::vector<int>>& d;
    const std::vector<std::uint16_t>& dp;  // max future distance table
    long long best;
    std::vector<int> best_order;
    std::vector<int> order;
    std::vector<long long> labels;
    std::uint64_t nodes = 0;

    RnSearch(int n_, int D_, const std::vector<std::vector<int>>& d_,
             const std::vector<std::uint16_t>& dp_, long long incumbent)
        : n(n_), D(D_), d(d_), dp(dp_), best(incumbent) {
        order.reserve(n);
        labels.reserve(n);
    }

    void rec(size_t S) {
        ++nodes;
        const int k = static_cast<int>(order.size());
        if (k == n) {
            if (labels.back() < best) {
                best = labels.back();
                best_order = order;
            }
            return;
        }
        const int last_count = n - k;  // vertices still to place
        for (int u = 0; u < n; ++u) {
            if (S & (size_t{1} << u)) continue;
            long long lab = 0;
            for (int j = 0; j < k; ++j)
                lab = std::max(lab, labels[j] + D + 1 - d[order[j]][u]);
            const size_t S2 = S | (size_t{1} << u);
            long long bound = lab;
            if (last_count > 1) {
                // future = remaining steps * (D+1) minus the best distance sum
                // of a path from u through all unplaced vertices
                const size_t key = ((~S & ((size_t{1} << n) - 1)) | (size_t{1} << u));
                bound = lab + static_cast<long long>(last_count - 1) * (D + 1) -
                        dp[key * n + u];
            }
            if (bound >= best) continue;
            order.push_back(u);
            labels.push_back(lab);
            rec(S2);
            order.pop_back();
            labels.pop_back();
        }
    }
};

}  // namespace

OracleResult oracle_rn(const GridGraph& g, int max_n) {
    const long long n64 = g.vertex_count();
    if (n64 > max_n)
        throw resource_limit_error("oracle_rn: n = " + std::to_string(n64) +
                                   " exceeds the guard (" + std::to_string(max_n) +
                                   "); pass a larger limit to override");
    if (n64 > kOracleTPlusMaxN)
        throw resource_limit_error("oracle_rn: n = " + std::to_string(n64) +
                                   " exceeds the bound-table limit (" +
                                   std::to_string(kOracleTPlusMaxN) + ")");
    const auto t0 = Clock::now();
    const int n = static_cast<int>(n64);
    const auto verts = g.vertices();
    OracleResult res;
    if (n == 1) {
        res.value = 0;
        res.witness = {verts[0]};
        res.elapsed_seconds = seconds_since(t0);
        return res;
    }
    const int D = diameter(g);
    const auto d = distance_matrix(g);
    const auto dp = max_path_table(d, n, nullptr);

    // incumbent: the always-valid trivial labeling f(v_i) = D*(i-1)
    const long long trivial = static_cast<long long>(D) * (n - 1);
    RnSearch search(n, D, d, dp, trivial + 1);
    std::vector<int> trivial_order(n);
    for (int i = 0; i < n; ++i) trivial_order[i] = i;
    search.best = trivial;
    search.best_order = trivial_order;

    for (int first : first_vertex_candidates(g)) {
        search.order.assign(1, first);
        search.labels.assign(1, 0);
        search.rec(size_t{1} << first);
    }
    res.value = search.best;
    res.nodes_explored = search.nodes;
    for (int idx : search.best_order) res.witness.push_back(verts[idx]);
    res.elapsed_seconds = seconds_since(t0);
    return res;
}

long long oracle_max_d_minus_b(const GridGraph& g, int max_n) {
    const OracleResult r = oracle_rn(g, max_n);
    return (g.vertex_count() - 1) * (diameter(g) + 1) - r.value;
}

bool exhaustive_min_span_check(const GridGraph& g, const Ordering& s, int max_n) {
    if (g.vertex_count() > max_n)
        throw resource_limit_error("exhaustive_min_span_check: n exceeds the guard (" +
                                   std::to_string(max_n) + ")");
    require_permutation(g, s);
    const int n = static_cast<int>(s.size());
    const int D = diameter(g);
    const long long greedy_span = span(min_span_labeling(g, s));
    if (n == 1) return true;

    std::vector<std::vector<int>> d(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = distance(g, s[i], s[j]);

    // search all increasing assignments with span < greedy_span
    std::vector<long long> lab(n, 0);
    std::function<bool(int)> any_better = [&](int i) -> bool {
        if (i == n) return true;
        const long long room = greedy_span - 1 - (n - 1 - i);  // strictly increasing tail
        for (long long f = lab[i - 1] + 1; f <= room; ++f) {
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                if (f - lab[j] < D + 1 - d[i][j]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            lab[i] = f;
            if (any_better(i + 1)) return true;
        }
        return false;
    };
    return !any_better(1);
}

}  // namespace radiogrid
