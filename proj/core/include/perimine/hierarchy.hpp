#pragma once

#include "perimine/rational.hpp"

#include <cstdint>
#include <span>

namespace perimine {

/// A pattern periodic at a fine hierarchy level, viewed from a coarser one:
/// `group_size` (p) fine-level value combinations exist per coarse value,
/// `periodicity` (f) is the fine-level periodicity, `periods` (m_j) the
/// coarse periods in the lifespan.
struct HierarchySpec {
    std::int64_t group_size = 1;
    Rational periodicity{1};
    std::int64_t periods = 1;
};

/// Guaranteed bounds on the p induced coarse-level periodicities.
struct DerivedBounds {
    Rational min_periodicity;  // 1 - p(1 - f)
    Rational avg_periodicity;  // f
    std::int64_t count = 0;    // p
};

/// Computes the induced bounds in exact rational arithmetic. Requires
/// f > (p-1)/p; below that the minimum bound would be nonpositive and the
/// spec is rejected.
DerivedBounds derived_pattern_bounds(const HierarchySpec& spec);

struct BoundsCheck {
    bool holds = false;
    Rational periodicity;  // f implied by the assignment
    Rational min_ratio;    // min_k n_k / m_j
    Rational mean_ratio;   // sum_k (n_k / m_j) / p
    Rational bound;        // 1 - p(1 - f)
    std::size_t argmin = 0;
};

/// Checks one concrete assignment of per-group occurrence counts n_1..n_p
/// (each in [0, periods]) against the derived bounds.
BoundsCheck verify_bounds_by_enumeration(std::int64_t group_size, std::int64_t periods,
                                         std::span<const std::int64_t> occurrences);

}  // namespace perimine
