#pragma once

#include <cstdint>
#include <optional>

#include "radiogrid/grid.hpp"
#include "radiogrid/labeling.hpp"

namespace radiogrid {

/// Thrown when an exact computation would exceed its resource guard.
/// Oracles never approximate; they refuse instead.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    long long value = 0;
    Ordering witness;          // ordering certifying the value
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

inline constexpr int kOracleTPlusMaxN = 22;
inline constexpr int kOracleRnDefaultMaxN = 12;

/// Exact upper traceable number by dynamic programming over
/// (visited subset, last vertex) states. Guarded at n <= 22.
OracleResult oracle_t_plus(const GridGraph& g, int max_n = kOracleTPlusMaxN);

/// Exact radio number by branch and bound over orderings with the greedy
/// tight labeling; the residual bound reuses the subset-DP distance table.
/// witness is the optimal ordering (its minimal labeling attains the value).
/// Guarded at n <= 12 by default; pass a larger max_n to override.
OracleResult oracle_rn(const GridGraph& g, int max_n = kOracleRnDefaultMaxN);

/// (n-1)(D+1) - oracle_rn(g).value: the exact max of sum(d_i - b_i).
long long oracle_max_d_minus_b(const GridGraph& g, int max_n = kOracleRnDefaultMaxN);

/// True iff no labeling with increasing-label order s has span below
/// span(min_span_labeling(g, s)), established by exhaustive assignment
/// search. Guarded at n <= 9.
bool exhaustive_min_span_check(const GridGraph& g, const Ordering& s, int max_n = 9);

}  // namespace radiogrid
