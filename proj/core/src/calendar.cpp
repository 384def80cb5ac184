#include "perimine/calendar.hpp"

#include <algorithm>
#include <array>
#include <chrono>

namespace perimine {

namespace {

namespace chr = std::chrono;

// Cumulative days before each month in the canonical 366-day (leap) layout.
constexpr std::array<int, 12> kLeapMonthPrefix = {0,   31,  60,  91,  121, 152,
                                                  182, 213, 244, 274, 305, 335};

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    const std::int64_t q = a / b;
    return q * b > a ? q - 1 : q;
}

std::int64_t day_number(const CalendarStamp& s) {
    return chr::sys_days{chr::year{s.year} / chr::month{static_cast<unsigned>(s.month)} /
                         chr::day{static_cast<unsigned>(s.day)}}
        .time_since_epoch()
        .count();
}

std::int64_t sub_day_units(const CalendarStamp& s, Resolution res) {
    switch (res) {
        case Resolution::Day: return 0;
        case Resolution::Hour: return s.hour;
        case Resolution::Minute: return s.hour * 60 + s.minute;
        case Resolution::Second: return s.hour * 3600 + s.minute * 60 + s.second;
    }
    return 0;
}

std::int64_t units_per_hour(Resolution res) {
    switch (res) {
        case Resolution::Minute: return 60;
        case Resolution::Second: return 3600;
        default: throw InvalidInput("resolution too coarse for hourly cycles");
    }
}

// First linear unit of the cycle following the one containing `stamp`.
std::int64_t next_cycle_first_linear(const CalendarStamp& stamp, PeriodLevel level,
                                     Resolution res) {
    const std::int64_t updd = units_per_day(res);
    switch (level) {
        case PeriodLevel::Yearly:
            return to_linear({stamp.year + 1, 1, 1, 0, 0, 0}, res);
        case PeriodLevel::Monthly: {
            const int y = stamp.month == 12 ? stamp.year + 1 : stamp.year;
            const int m = stamp.month == 12 ? 1 : stamp.month + 1;
            return to_linear({y, m, 1, 0, 0, 0}, res);
        }
        case PeriodLevel::Daily:
            return (day_number(stamp) + 1) * updd;
        case PeriodLevel::Hourly: {
            const std::int64_t uph = units_per_hour(res);
            return (floor_div(to_linear(stamp, res), uph) + 1) * uph;
        }
    }
    throw InvalidInput("unknown period level");
}

struct LinearInterval {
    std::int64_t lo;
    std::int64_t hi;
};

std::vector<LinearInterval> to_linear_intervals(std::span<const CalendarInterval> intervals,
                                                Resolution res) {
    std::vector<LinearInterval> out;
    out.reserve(intervals.size());
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& iv = intervals[i];
        if (!iv.start.valid() || !iv.end.valid() || iv.end < iv.start)
            throw InvalidInput("invalid calendar interval", i);
        out.push_back({to_linear(iv.start, res), to_linear(iv.end, res)});
    }
    return out;
}

// Offsets of stripped slots that are absent from some cycles.
bool peak_touches_irregular_slots(const LocalMaximum<DiscreteTime>& hill, PeriodLevel level,
                                  Resolution res) {
    const std::int64_t updd = units_per_day(res);
    std::int64_t lo = 0, hi = -1;
    switch (level) {
        case PeriodLevel::Yearly: {
            const int feb29 = kLeapMonthPrefix[1] + 29;  // canonical day 60
            lo = (feb29 - 1) * updd + 1;
            hi = feb29 * updd;
            break;
        }
        case PeriodLevel::Monthly:
            lo = 28 * updd + 1;  // days 29..31
            hi = 31 * updd;
            break;
        default:
            return false;
    }
    return hill.peakstart <= hi && lo <= hill.peakend;
}

}  // namespace

bool CalendarStamp::valid() const {
    if (month < 1 || month > 12 || day < 1 || day > 31) return false;
    if (hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 || second > 59)
        return false;
    return (chr::year{year} / chr::month{static_cast<unsigned>(month)} /
            chr::day{static_cast<unsigned>(day)})
        .ok();
}

std::int64_t units_per_day(Resolution res) {
    switch (res) {
        case Resolution::Day: return 1;
        case Resolution::Hour: return 24;
        case Resolution::Minute: return 1440;
        case Resolution::Second: return 86400;
    }
    return 1;
}

std::int64_t to_linear(const CalendarStamp& stamp, Resolution res) {
    if (!stamp.valid()) throw InvalidInput("invalid calendar stamp");
    return day_number(stamp) * units_per_day(res) + sub_day_units(stamp, res);
}

CalendarStamp from_linear(std::int64_t linear, Resolution res) {
    const std::int64_t updd = units_per_day(res);
    const std::int64_t days = floor_div(linear, updd);
    std::int64_t rem = linear - days * updd;

    const chr::year_month_day ymd{chr::sys_days{chr::days{days}}};
    CalendarStamp s;
    s.year = static_cast<int>(ymd.year());
    s.month = static_cast<int>(static_cast<unsigned>(ymd.month()));
    s.day = static_cast<int>(static_cast<unsigned>(ymd.day()));
    switch (res) {
        case Resolution::Day: break;
        case Resolution::Hour:
            s.hour = static_cast<int>(rem);
            break;
        case Resolution::Minute:
            s.hour = static_cast<int>(rem / 60);
            s.minute = static_cast<int>(rem % 60);
            break;
        case Resolution::Second:
            s.hour = static_cast<int>(rem / 3600);
            rem %= 3600;
            s.minute = static_cast<int>(rem / 60);
            s.second = static_cast<int>(rem % 60);
            break;
    }
    return s;
}

std::int64_t cycle_length(PeriodLevel level, Resolution res) {
    const std::int64_t updd = units_per_day(res);
    switch (level) {
        case PeriodLevel::Yearly: return 366 * updd;
        case PeriodLevel::Monthly: return 31 * updd;
        case PeriodLevel::Daily:
            if (res == Resolution::Day)
                throw InvalidInput("daily cycles need sub-day resolution");
            return updd;
        case PeriodLevel::Hourly: return units_per_hour(res);
    }
    throw InvalidInput("unknown period level");
}

std::int64_t cycle_ordinal(const CalendarStamp& stamp, PeriodLevel level, Resolution res) {
    switch (level) {
        case PeriodLevel::Yearly: return stamp.year;
        case PeriodLevel::Monthly: return static_cast<std::int64_t>(stamp.year) * 12 + stamp.month - 1;
        case PeriodLevel::Daily: return day_number(stamp);
        case PeriodLevel::Hourly: return floor_div(to_linear(stamp, res), units_per_hour(res));
    }
    throw InvalidInput("unknown period level");
}

int canonical_day_of_year(int month, int day) {
    return kLeapMonthPrefix[month - 1] + day;
}

std::pair<int, int> month_day_from_canonical(int slot) {
    const auto it = std::upper_bound(kLeapMonthPrefix.begin(), kLeapMonthPrefix.end(), slot - 1);
    const int month = static_cast<int>(it - kLeapMonthPrefix.begin());
    return {month, slot - kLeapMonthPrefix[month - 1]};
}

StrippedStamp strip(const CalendarStamp& stamp, PeriodLevel level, Resolution res) {
    if (!stamp.valid()) throw InvalidInput("invalid calendar stamp");
    const std::int64_t updd = units_per_day(res);
    switch (level) {
        case PeriodLevel::Yearly: {
            const std::int64_t slot_day = canonical_day_of_year(stamp.month, stamp.day);
            return {(slot_day - 1) * updd + sub_day_units(stamp, res) + 1};
        }
        case PeriodLevel::Monthly:
            return {(stamp.day - 1) * updd + sub_day_units(stamp, res) + 1};
        case PeriodLevel::Daily:
            if (res == Resolution::Day)
                throw InvalidInput("daily cycles need sub-day resolution");
            return {sub_day_units(stamp, res) + 1};
        case PeriodLevel::Hourly:
            switch (res) {
                case Resolution::Minute: return {stamp.minute + 1};
                case Resolution::Second: return {stamp.minute * 60 + stamp.second + 1};
                default: throw InvalidInput("hourly cycles need sub-hour resolution");
            }
    }
    throw InvalidInput("unknown period level");
}

std::vector<CalendarInterval> merge_overlapping(std::span<const CalendarInterval> intervals,
                                                Resolution res) {
    auto linear = to_linear_intervals(intervals, res);
    std::sort(linear.begin(), linear.end(), [](const LinearInterval& a, const LinearInterval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });

    std::vector<CalendarInterval> out;
    for (const auto& iv : linear) {
        if (!out.empty()) {
            const std::int64_t prev_hi = to_linear(out.back().end, res);
            if (iv.lo <= prev_hi + 1) {  // overlapping or touching
                if (iv.hi > prev_hi) out.back().end = from_linear(iv.hi, res);
                continue;
            }
        }
        out.push_back({from_linear(iv.lo, res), from_linear(iv.hi, res)});
    }
    return out;
}

std::vector<CalendarInterval> split_by_cycle(const CalendarInterval& interval, PeriodLevel level,
                                             Resolution res) {
    if (!interval.start.valid() || !interval.end.valid() || interval.end < interval.start)
        throw InvalidInput("invalid calendar interval");

    std::vector<CalendarInterval> pieces;
    CalendarStamp cur = interval.start;
    while (cycle_ordinal(cur, level, res) != cycle_ordinal(interval.end, level, res)) {
        const std::int64_t next_first = next_cycle_first_linear(cur, level, res);
        pieces.push_back({cur, from_linear(next_first - 1, res)});
        cur = from_linear(next_first, res);
    }
    pieces.push_back({cur, interval.end});
    return pieces;
}

std::int64_t lifespan_cycles(std::span<const CalendarInterval> intervals, PeriodLevel level,
                             Resolution res) {
    if (intervals.empty()) throw InvalidInput("lifespan of an empty interval list");
    CalendarStamp smallest = intervals[0].start;
    CalendarStamp largest = intervals[0].end;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& iv = intervals[i];
        if (!iv.start.valid() || !iv.end.valid() || iv.end < iv.start)
            throw InvalidInput("invalid calendar interval", i);
        smallest = std::min(smallest, iv.start);
        largest = std::max(largest, iv.end);
    }
    return cycle_ordinal(largest, level, res) - cycle_ordinal(smallest, level, res) + 1;
}

std::vector<Interval<DiscreteTime>> build_stripped_intervals(
    std::span<const CalendarInterval> intervals, PeriodLevel level, Resolution res) {
    const auto merged = merge_overlapping(intervals, res);
    const std::int64_t updd = units_per_day(res);
    const int feb29 = kLeapMonthPrefix[1] + 29;
    const std::int64_t block_lo = (feb29 - 1) * updd + 1;
    const std::int64_t block_hi = feb29 * updd;

    std::vector<Interval<DiscreteTime>> stripped;
    for (const auto& iv : merged) {
        for (const auto& piece : split_by_cycle(iv, level, res)) {
            const std::int64_t lo = strip(piece.start, level, res).offset;
            const std::int64_t hi = strip(piece.end, level, res).offset;
            // A common-year piece crossing the end of February must not sweep
            // the Feb 29 slots: that year never covers them.
            if (level == PeriodLevel::Yearly &&
                !chr::year{piece.start.year}.is_leap() && lo < block_lo && hi > block_hi) {
                stripped.push_back(make_interval<DiscreteTime>(lo, block_lo - 1));
                stripped.push_back(make_interval<DiscreteTime>(block_hi + 1, hi));
                continue;
            }
            stripped.push_back(make_interval<DiscreteTime>(lo, hi));
        }
    }
    return stripped;
}

std::vector<PeriodicityReport> mine_periodicities(std::span<const CalendarInterval> intervals,
                                                  PeriodLevel level, Resolution res,
                                                  const Rational& min_certainty) {
    if (min_certainty < Rational(0) || min_certainty > Rational(1))
        throw InvalidInput("min_certainty outside [0, 1]");
    if (intervals.empty()) return {};

    const auto merged = merge_overlapping(intervals, res);
    const auto stripped = build_stripped_intervals(merged, level, res);
    const auto endpoints = sort_endpoints<DiscreteTime>(stripped);
    const auto changes = build_change_records<DiscreteTime>(endpoints);
    const auto knots = build_knot_records<DiscreteTime>(changes);
    const auto hills = find_local_maxima<DiscreteTime>(knots);

    const std::int64_t periods = lifespan_cycles(merged, level, res);
    const std::int64_t cycle_len = cycle_length(level, res);

    const bool wraps = hills.size() >= 2 && hills.front().start <= 0 &&
                       hills.back().end >= cycle_len + 1;

    std::vector<PeriodicityReport> reports;
    for (std::size_t i = 0; i < hills.size(); ++i) {
        const auto& hill = hills[i];
        const Rational certainty{hill.peakval, periods};
        if (certainty < min_certainty) continue;

        PeriodicityReport report;
        report.hill = hill;
        report.peak_certainty = certainty;
        report.classification =
            certainty == Rational(1) ? Classification::Full : Classification::Partial;
        report.periods = periods;
        report.level = level;
        report.irregular_slot = peak_touches_irregular_slots(hill, level, res);
        report.boundary_adjacent = wraps && (i == 0 || i + 1 == hills.size());
        reports.push_back(report);
    }
    return reports;
}

}  // namespace perimine
