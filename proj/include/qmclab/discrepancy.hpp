#pragma once

#include <cstddef>

#include "qmclab/point_set.hpp"

namespace qmclab {

struct DiscrepancyValue {
    enum class Kind { Star, Extreme };
    double value = 0.0;
    Kind kind = Kind::Star;
    std::size_t n = 0;
};

/// Exact star discrepancy D* of a sorted point set, via the sorted-point
/// closed form D* = 1/(2N) + max_n |x_n - (2n-1)/(2N)|. This form attains
/// the 1/(2N) lower bound bitwise on midpoint sets.
DiscrepancyValue star_discrepancy(const PointSet& ps);

/// The equivalent max form D* = max_n max(|x_n - (n-1)/N|, |x_n - n/N|).
/// Same real value as star_discrepancy; kept as an algebraic cross-check.
DiscrepancyValue star_discrepancy_maxform(const PointSet& ps);

/// Extreme discrepancy D over arbitrary intervals [a,b), via the sorted
/// closed form D = 1/N + max_n(n/N - x_n) - min_n(n/N - x_n). The form is
/// not from the sorted-point lemma; it is gated on agreement with
/// brute_force_extreme.
DiscrepancyValue extreme_discrepancy(const PointSet& ps);

/// Brute-force star discrepancy: evaluates |A([0,b))/N - b| on the finite
/// critical set (every x_n, its one-sided neighbours, every n/N, and 1).
/// The objective is piecewise linear in b with breakpoints only at the
/// points, so the supremum is attained there. Throws std::invalid_argument
/// above the oracle limit.
DiscrepancyValue brute_force_star(const PointSet& ps, std::size_t limit = 4096);

/// Brute-force extreme discrepancy over all critical pairs (a, b).
DiscrepancyValue brute_force_extreme(const PointSet& ps, std::size_t limit = 4096);

}  // namespace qmclab
