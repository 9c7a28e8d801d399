#pragma once

#include "radiogrid/grid.hpp"
#include "radiogrid/labeling.hpp"

namespace radiogrid {

/// Ordering whose x-component distance sum attains max_dx_formula(a,b).
/// Requires a >= 2. Output is in the caller's orientation (no normalization).
Ordering max_dx_ordering(const GridGraph& g);

/// Ordering with sum of consecutive distances equal to t_plus_formula(a,b).
/// Requires a,b >= 3. Output is in the caller's orientation.
Ordering t_plus_ordering(const GridGraph& g);

/// Ordering whose minimal labeling has span rn_formula(a,b): zero bumps for
/// the even*odd and odd*odd cases, exactly two unit bumps (steps 2 and n-2)
/// for even*even. Requires a,b >= 3. Output is in the caller's orientation.
Ordering rn_ordering(const GridGraph& g);

/// min_span_labeling of rn_ordering, certified against rn_formula before
/// returning (throws std::logic_error on a certificate mismatch rather than
/// returning a sub-optimal labeling). Labels start at 0.
Labeling optimal_labeling(const GridGraph& g);

}  // namespace radiogrid
