#include "perimine/occurrence.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace perimine {

namespace {

bool is_left(EndpointType type) {
    return type == EndpointType::LeftClosed || type == EndpointType::LeftOpen;
}

std::uint64_t biased_key(DiscreteTime t) {
    return static_cast<std::uint64_t>(t) ^ (std::uint64_t{1} << 63);
}

// Stable LSD radix sort of (t, type): a 4-bucket pass on the type followed by
// one 256-bucket pass per byte of the sign-biased timestamp, least
// significant first. Byte positions where all keys agree are skipped.
void radix_sort_endpoints(std::vector<EndpointRecord<DiscreteTime>>& recs) {
    const std::size_t n = recs.size();
    if (n < 2) return;

    std::vector<EndpointRecord<DiscreteTime>> scratch(n);
    auto* src = &recs;
    auto* dst = &scratch;

    {
        std::array<std::size_t, 4> offset{};
        for (const auto& r : *src) ++offset[static_cast<std::size_t>(r.type)];
        std::size_t sum = 0;
        for (auto& o : offset) {
            const std::size_t c = o;
            o = sum;
            sum += c;
        }
        for (const auto& r : *src) (*dst)[offset[static_cast<std::size_t>(r.type)]++] = r;
        std::swap(src, dst);
    }

    std::array<std::array<std::size_t, 256>, 8> hist{};
    for (const auto& r : *src) {
        const std::uint64_t key = biased_key(r.t);
        for (std::size_t b = 0; b < 8; ++b) ++hist[b][(key >> (8 * b)) & 0xff];
    }

    for (std::size_t b = 0; b < 8; ++b) {
        auto& counts = hist[b];
        if (std::any_of(counts.begin(), counts.end(),
                        [n](std::size_t c) { return c == n; })) {
            continue;  // all keys share this byte
        }
        std::array<std::size_t, 256> offset{};
        std::size_t sum = 0;
        for (std::size_t v = 0; v < 256; ++v) {
            offset[v] = sum;
            sum += counts[v];
        }
        for (const auto& r : *src) {
            const std::size_t v = (biased_key(r.t) >> (8 * b)) & 0xff;
            (*dst)[offset[v]++] = r;
        }
        std::swap(src, dst);
    }

    if (src != &recs) recs = std::move(*src);
}

}  // namespace

template <TimeScalar T>
std::vector<EndpointRecord<T>> sort_endpoints(std::span<const Interval<T>> intervals) {
    std::vector<EndpointRecord<T>> out;
    out.reserve(2 * intervals.size());
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& iv = intervals[i];
        if (!iv.valid()) throw InvalidInput("invalid interval", i);
        out.push_back({iv.lo, iv.lo_kind == EndpointKind::Closed ? EndpointType::LeftClosed
                                                                 : EndpointType::LeftOpen});
        out.push_back({iv.hi, iv.hi_kind == EndpointKind::Closed ? EndpointType::RightClosed
                                                                 : EndpointType::RightOpen});
    }
    if constexpr (axis_of<T> == TimeAxis::Discrete) {
        radix_sort_endpoints(out);
    } else {
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.t != b.t) return a.t < b.t;
            return static_cast<std::uint8_t>(a.type) < static_cast<std::uint8_t>(b.type);
        });
    }
    return out;
}

template <TimeScalar T>
std::vector<ChangeRecord<T>> build_change_records(std::span<const EndpointRecord<T>> endpoints) {
    const std::size_t len = endpoints.size();
    std::int64_t lefts = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0 && endpoints[i].t < endpoints[i - 1].t)
            throw InvalidInput("endpoint records not sorted by timestamp", i);
        if (is_left(endpoints[i].type)) ++lefts;
    }
    if (2 * static_cast<std::size_t>(lefts) != len)
        throw InvalidInput("left and right endpoint counts differ");

    std::vector<ChangeRecord<T>> d;
    std::int64_t running = 0;  // right-hand limit after the previous change
    std::size_t i = 0;
    while (i < len) {
        const T ct = endpoints[i].t;
        std::int64_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
        for (; i < len && endpoints[i].t == ct; ++i) {
            switch (endpoints[i].type) {
                case EndpointType::LeftOpen: ++n1; break;
                case EndpointType::LeftClosed: ++n2; break;
                case EndpointType::RightOpen: ++n3; break;
                case EndpointType::RightClosed: ++n4; break;
            }
        }
        if (n2 - n3 != 0 || n1 + n2 - n3 - n4 != 0) {
            const std::int64_t at = n2 - n3 + running;
            const std::int64_t after = n1 + n2 - n3 - n4 + running;
            if (at < 0 || after < 0)
                throw InvalidInput("occurrence count went negative; malformed endpoint multiset");
            d.push_back({ct, at, after});
            running = after;
        }
    }

    if constexpr (axis_of<T> == TimeAxis::Discrete) {
        for (std::size_t k = 0; k + 1 < d.size(); ++k)
            if (d[k + 1].t == d[k].t + 1) d[k].r = d[k + 1].u;
    }
    return d;
}

template <TimeScalar T>
std::int64_t occurrence_at(std::span<const ChangeRecord<T>> changes, T s) {
    if (changes.empty() || s < changes.front().t || s > changes.back().t) return 0;
    const auto it = std::upper_bound(
        changes.begin(), changes.end(), s,
        [](T value, const ChangeRecord<T>& c) { return value < c.t; });
    const auto& rec = *(it - 1);
    return rec.t == s ? rec.u : rec.r;
}

template <TimeScalar T>
std::vector<KnotRecord<T>> build_knot_records(std::span<const ChangeRecord<T>> changes) {
    std::vector<KnotRecord<T>> knots;
    knots.reserve(2 * changes.size());
    std::int64_t prev = 0;  // occurrence function value before the first endpoint
    const auto push = [&](T t, std::int64_t v) {
        if (v != prev) {
            knots.push_back({t, v});
            prev = v;
        }
    };
    for (const auto& c : changes) {
        push(c.t, c.u);
        if constexpr (axis_of<T> == TimeAxis::Discrete) {
            push(c.t + 1, c.r);
        } else {
            push(c.t, c.r);
        }
    }
    return knots;
}

template <TimeScalar T>
std::vector<LocalMaximum<T>> find_local_maxima(std::span<const KnotRecord<T>> knots) {
    std::vector<LocalMaximum<T>> hills;
    if (knots.empty()) return hills;

    constexpr bool discrete = axis_of<T> == TimeAxis::Discrete;
    enum class State { Increasing, Decreasing };
    State state = State::Increasing;

    LocalMaximum<T> current{};
    current.start = discrete ? knots[0].t - 1 : knots[0].t;
    current.startval = 0;

    const std::size_t p = knots.size();
    for (std::size_t i = 0; i < p; ++i) {
        if (state == State::Increasing && i + 1 < p && knots[i + 1].v < knots[i].v) {
            current.peakstart = knots[i].t;
            current.peakend = discrete ? knots[i + 1].t - 1 : knots[i + 1].t;
            current.peakval = knots[i].v;
            state = State::Decreasing;
        }
        if (state == State::Decreasing && (i + 1 == p || knots[i + 1].v > knots[i].v)) {
            current.end = knots[i].t;
            current.endval = knots[i].v;
            hills.push_back(current);
            if (i + 1 < p) {
                current = {};
                current.start = discrete ? knots[i + 1].t - 1 : knots[i + 1].t;
                current.startval = knots[i].v;
                state = State::Increasing;
            }
        }
    }

    if (state == State::Increasing) {
        // The scan ended while still rising (a finite interval set always
        // drops back to zero, so this is reachable only with raw knot input).
        current.peakstart = knots[p - 1].t;
        current.peakend = knots[p - 1].t;
        current.peakval = knots[p - 1].v;
        current.end = knots[p - 1].t;
        current.endval = knots[p - 1].v;
        hills.push_back(current);
    }
    return hills;
}

template std::vector<EndpointRecord<DiscreteTime>> sort_endpoints(std::span<const Interval<DiscreteTime>>);
template std::vector<EndpointRecord<ContinuousTime>> sort_endpoints(std::span<const Interval<ContinuousTime>>);
template std::vector<ChangeRecord<DiscreteTime>> build_change_records(std::span<const EndpointRecord<DiscreteTime>>);
template std::vector<ChangeRecord<ContinuousTime>> build_change_records(std::span<const EndpointRecord<ContinuousTime>>);
template std::int64_t occurrence_at(std::span<const ChangeRecord<DiscreteTime>>, DiscreteTime);
template std::int64_t occurrence_at(std::span<const ChangeRecord<ContinuousTime>>, ContinuousTime);
template std::vector<KnotRecord<DiscreteTime>> build_knot_records(std::span<const ChangeRecord<DiscreteTime>>);
template std::vector<KnotRecord<ContinuousTime>> build_knot_records(std::span<const ChangeRecord<ContinuousTime>>);
template std::vector<LocalMaximum<DiscreteTime>> find_local_maxima(std::span<const KnotRecord<DiscreteTime>>);
template std::vector<LocalMaximum<ContinuousTime>> find_local_maxima(std::span<const KnotRecord<ContinuousTime>>);

}  // namespace perimine
