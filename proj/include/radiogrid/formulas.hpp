#pragma once

#include "radiogrid/grid.hpp"

namespace radiogrid {

/// Upper traceable number t+(G_{a,b}) for a,b >= 3 (orientation-free):
///   (a^2 b + b^2 a)/2 - 3          a, b even
///   (a^2 b + b^2 a - a)/2 - 1      a even, b odd
///   (a^2 b + b^2 a - a - b)/2 - 1  a, b odd
long long t_plus_formula(int a, int b);

/// Radio number rn(G_{a,b}) for a,b >= 3 (orientation-free):
///   (a^2 b + b^2 a)/2 - ab - a - b + 6    a, b even
///   (a^2 b + b^2 a - a)/2 - ab - b + 2    a even, b odd
///   (a^2 b + b^2 a - a - b)/2 - ab + 2    a, b odd
long long rn_formula(int a, int b);

/// Maximum sum of x-components of consecutive distances over all orderings:
/// a^2 b / 2 - 1 for a even, (a^2 - 1) b / 2 for a odd. Requires a,b >= 2.
long long max_dx_formula(int a, int b);

/// (n-1)(D+1) - t_plus_formula(a,b).
long long rn_lower_bound(const GridGraph& g);

/// D * (n-1), the span of the labeling f(v_i) = D*(i-1).
long long rn_upper_bound_trivial(const GridGraph& g);

/// True iff rn_formula(n,n) lies in the square-grid interval
/// [n^3-n^2-2n+4, n^3-n^2+1] for n even, or
/// [n^3-n^2-n+2, n^3-n^2-(n-1)/2+1] for n odd. Requires n >= 3.
bool calles_bounds_check(int n);

}  // namespace radiogrid
