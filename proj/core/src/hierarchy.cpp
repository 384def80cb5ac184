#include "perimine/hierarchy.hpp"

#include "perimine/interval.hpp"

#include <numeric>

namespace perimine {

DerivedBounds derived_pattern_bounds(const HierarchySpec& spec) {
    const std::int64_t p = spec.group_size;
    if (p < 1) throw InvalidInput("group size must be positive");
    if (spec.periods < 1) throw InvalidInput("period count must be positive");
    const Rational& f = spec.periodicity;
    if (f <= Rational(0) || f > Rational(1))
        throw InvalidInput("periodicity must lie in (0, 1]");
    if (f <= Rational(p - 1, p))
        throw InvalidInput("periodicity must exceed (p-1)/p for the bounds to hold");

    DerivedBounds bounds;
    bounds.min_periodicity = Rational(1) - Rational(p) * (Rational(1) - f);
    bounds.avg_periodicity = f;
    bounds.count = p;
    return bounds;
}

BoundsCheck verify_bounds_by_enumeration(std::int64_t group_size, std::int64_t periods,
                                         std::span<const std::int64_t> occurrences) {
    if (group_size < 1) throw InvalidInput("group size must be positive");
    if (periods < 1) throw InvalidInput("period count must be positive");
    if (occurrences.size() != static_cast<std::size_t>(group_size))
        throw InvalidInput("expected one occurrence count per group");
    for (std::size_t k = 0; k < occurrences.size(); ++k)
        if (occurrences[k] < 0 || occurrences[k] > periods)
            throw InvalidInput("occurrence count outside [0, periods]", k);

    std::int64_t total = 0;
    std::size_t argmin = 0;
    for (std::size_t k = 0; k < occurrences.size(); ++k) {
        total += occurrences[k];
        if (occurrences[k] < occurrences[argmin]) argmin = k;
    }

    BoundsCheck check;
    check.periodicity = Rational(total, group_size * periods);
    check.min_ratio = Rational(occurrences[argmin], periods);
    check.mean_ratio = check.periodicity;
    check.bound = Rational(1) - Rational(group_size) * (Rational(1) - check.periodicity);
    check.argmin = argmin;
    check.holds = check.min_ratio >= check.bound && check.mean_ratio == check.periodicity;
    return check;
}

}  // namespace perimine
