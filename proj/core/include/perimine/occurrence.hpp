#pragma once

#include "perimine/interval.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace perimine {

/// Endpoint types, ordered by the deterministic sort tiebreak applied at
/// equal timestamps.
enum class EndpointType : std::uint8_t {
    LeftClosed = 0,
    LeftOpen = 1,
    RightOpen = 2,
    RightClosed = 3,
};

template <TimeScalar T>
struct EndpointRecord {
    T t{};
    EndpointType type = EndpointType::LeftClosed;

    friend bool operator==(const EndpointRecord&, const EndpointRecord&) = default;
};

/// One change of the occurrence function: u is the value at t, r is the
/// right-hand limit at t on a continuous axis or the value at t + 1 on a
/// discrete axis.
template <TimeScalar T>
struct ChangeRecord {
    T t{};
    std::int64_t u = 0;
    std::int64_t r = 0;

    friend bool operator==(const ChangeRecord&, const ChangeRecord&) = default;
};

/// One step of the piecewise-constant occurrence function. Knot arrays may
/// lose the exact value at a step timestamp; point queries must go through
/// the change records.
template <TimeScalar T>
struct KnotRecord {
    T t{};
    std::int64_t v = 0;

    friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

/// One hill of the occurrence function: rises from (start, startval), holds
/// peakval over [peakstart, peakend], falls to (end, endval).
template <TimeScalar T>
struct LocalMaximum {
    T start{};
    T peakstart{};
    T peakend{};
    T end{};
    std::int64_t startval = 0;
    std::int64_t peakval = 0;
    std::int64_t endval = 0;

    friend bool operator==(const LocalMaximum&, const LocalMaximum&) = default;
};

/// Emits the 2n endpoint records of `intervals` sorted ascending by
/// timestamp, tiebreak LeftClosed < LeftOpen < RightOpen < RightClosed.
/// Discrete timestamps are sorted with a byte-wise radix sort so the whole
/// pipeline stays linear; continuous ones fall back to a comparison sort.
/// Throws InvalidInput naming the first invalid interval.
template <TimeScalar T>
std::vector<EndpointRecord<T>> sort_endpoints(std::span<const Interval<T>> intervals);

/// Scans sorted endpoint records and emits one ChangeRecord per timestamp
/// where the occurrence function changes. On a discrete axis, r of a record
/// immediately followed by another at t + 1 is fixed up to that record's u.
/// Throws InvalidInput on unsorted input or a malformed endpoint multiset.
template <TimeScalar T>
std::vector<ChangeRecord<T>> build_change_records(std::span<const EndpointRecord<T>> endpoints);

/// Number of input intervals containing s, by binary search over the change
/// records. O(log m).
template <TimeScalar T>
std::int64_t occurrence_at(std::span<const ChangeRecord<T>> changes, T s);

/// Flattens change records into single-step knots. A knot is suppressed when
/// its value repeats the previously emitted one (the function value before
/// the first knot counts as zero).
template <TimeScalar T>
std::vector<KnotRecord<T>> build_knot_records(std::span<const ChangeRecord<T>> changes);

/// Scans knots left to right and reports every hill of the occurrence
/// function. Hills partition the scanned range at valley knots.
template <TimeScalar T>
std::vector<LocalMaximum<T>> find_local_maxima(std::span<const KnotRecord<T>> knots);

}  // namespace perimine
