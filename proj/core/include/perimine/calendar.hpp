#pragma once

#include "perimine/interval.hpp"
#include "perimine/occurrence.hpp"
#include "perimine/rational.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace perimine {

/// Granularity of a dataset's timestamps.
enum class Resolution { Day, Hour, Minute, Second };

/// Calendar cycle against which periodicities are mined. Yearly strips the
/// year component, Monthly strips year+month, Daily strips the date, Hourly
/// additionally strips the hour.
enum class PeriodLevel { Yearly, Monthly, Daily, Hourly };

enum class Classification { Full, Partial };

/// A Gregorian calendar date-time. Fields below the dataset resolution stay
/// zero. Field order makes the defaulted comparison chronological.
struct CalendarStamp {
    int year = 1970;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    int second = 0;

    bool valid() const;

    auto operator<=>(const CalendarStamp&) const = default;
};

/// Closed interval of calendar stamps at the dataset resolution.
struct CalendarInterval {
    CalendarStamp start;
    CalendarStamp end;

    friend bool operator==(const CalendarInterval&, const CalendarInterval&) = default;
};

/// 1-based position within one cycle of the mining level.
struct StrippedStamp {
    std::int64_t offset = 1;

    auto operator<=>(const StrippedStamp&) const = default;
};

/// One mined periodicity: a hill of the occurrence function on the stripped
/// axis, with its peak certainty peakval / periods.
struct PeriodicityReport {
    LocalMaximum<DiscreteTime> hill;
    Rational peak_certainty;
    Classification classification = Classification::Partial;
    std::int64_t periods = 0;  // cycles in the lifespan
    PeriodLevel level = PeriodLevel::Yearly;
    /// Peak span touches slots absent from some cycles (Feb 29; days 29-31
    /// of a month). Certainty at such slots is capped below 1 by the
    /// calendar itself; the raw value is reported unrenormalized.
    bool irregular_slot = false;
    /// This hill and one at the opposite cycle edge form a wrap-around pair.
    /// They are reported separately, never merged.
    bool boundary_adjacent = false;
};

std::int64_t units_per_day(Resolution res);

/// Units since the epoch at the given resolution.
std::int64_t to_linear(const CalendarStamp& stamp, Resolution res);
CalendarStamp from_linear(std::int64_t linear, Resolution res);

/// Slots in one cycle of `level` at resolution `res`. Throws InvalidInput
/// when the resolution is too coarse for the level (e.g. Daily mining of a
/// day-resolution dataset).
std::int64_t cycle_length(PeriodLevel level, Resolution res);

/// Index of the cycle containing `stamp` (years, months, days or hours since
/// the epoch depending on the level).
std::int64_t cycle_ordinal(const CalendarStamp& stamp, PeriodLevel level, Resolution res);

/// Day index 1..366 of (month, day) in the canonical leap-year layout, and
/// its inverse.
int canonical_day_of_year(int month, int day);
std::pair<int, int> month_day_from_canonical(int slot);

/// Position of `stamp` within its cycle after stripping the components above
/// `level`. Order-preserving within a cycle.
StrippedStamp strip(const CalendarStamp& stamp, PeriodLevel level, Resolution res);

/// Disjoint, sorted, union-preserving form of `intervals`. Intervals that
/// touch at the dataset resolution are coalesced.
std::vector<CalendarInterval> merge_overlapping(std::span<const CalendarInterval> intervals,
                                                Resolution res);

/// Splits an interval at cycle boundaries of `level` so every piece lies in
/// a single cycle; concatenating the pieces reproduces the input exactly.
std::vector<CalendarInterval> split_by_cycle(const CalendarInterval& interval,
                                             PeriodLevel level, Resolution res);

/// Number of level-cycles intersecting the lifespan [s, g], where s and g
/// are the smallest and largest timestamps present. Partially covered
/// boundary cycles count. Throws InvalidInput on an empty list.
std::int64_t lifespan_cycles(std::span<const CalendarInterval> intervals,
                             PeriodLevel level, Resolution res);

/// merge + split + strip: the single-cycle interval list on the stripped
/// axis that feeds the occurrence-function pipeline.
std::vector<Interval<DiscreteTime>> build_stripped_intervals(
    std::span<const CalendarInterval> intervals, PeriodLevel level, Resolution res);

/// Full mining pipeline: merge, split, strip, build change and knot records,
/// detect hills, score each hill's peak certainty against the lifespan.
/// Hills below `min_certainty` are dropped.
std::vector<PeriodicityReport> mine_periodicities(std::span<const CalendarInterval> intervals,
                                                  PeriodLevel level, Resolution res,
                                                  const Rational& min_certainty = Rational(0));

}  // namespace perimine
