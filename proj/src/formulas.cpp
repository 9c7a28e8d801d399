#include "radiogrid/formulas.hpp"

namespace radiogrid {

namespace {

void require_supported(int a, int b) {
    if (a < 3 || b < 3)
        throw unsupported_size_error(
            "closed forms hold only for a, b >= 3 (ladders G_{2,b} are out of scope)");
}

}  // namespace

long long t_plus_formula(int a, int b) {
    require_supported(a, b);
    NormalizedGrid ng = normalize_orientation(a, b);
    const long long A = ng.grid.a(), B = ng.grid.b();
    const long long s = A * A * B + B * B * A;
    if (A % 2 == 0 && B % 2 == 0) return s / 2 - 3;
    if (A % 2 == 0) return (s - A) / 2 - 1;
    return (s - A - B) / 2 - 1;
}

long long rn_formula(int a, int b) {
    require_supported(a, b);
    NormalizedGrid ng = normalize_orientation(a, b);
    const long long A = ng.grid.a(), B = ng.grid.b();
    const long long s = A * A * B + B * B * A;
    if (A % 2 == 0 && B % 2 == 0) return s / 2 - A * B - A - B + 6;
    if (A % 2 == 0) return (s - A) / 2 - A * B - B + 2;
    return (s - A - B) / 2 - A * B + 2;
}

long long max_dx_formula(int a, int b) {
    if (a < 2 || b < 2)
        throw std::invalid_argument("max_dx_formula: requires a, b >= 2");
    const long long A = a, B = b;
    if (A % 2 == 0) return A * A * B / 2 - 1;
    return (A * A - 1) * B / 2;
}

long long rn_lower_bound(const GridGraph& g) {
    const long long n = g.vertex_count();
    return (n - 1) * (diameter(g) + 1) - t_plus_formula(g.a(), g.b());
}

long long rn_upper_bound_trivial(const GridGraph& g) {
    return static_cast<long long>(diameter(g)) * (g.vertex_count() - 1);
}

bool calles_bounds_check(int n) {
    if (n < 3) throw std::invalid_argument("calles_bounds_check: n >= 3 required");
    const long long N = n;
    const long long rn = rn_formula(n, n);
    long long lo, hi;
    if (n % 2 == 0) {
        lo = N * N * N - N * N - 2 * N + 4;
        hi = N * N * N - N * N + 1;
    } else {
        lo = N * N * N - N * N - N + 2;
        hi = N * N * N - N * N - (N - 1) / 2 + 1;
    }
    return lo <= rn && rn <= hi;
}

}  // namespace radiogrid
