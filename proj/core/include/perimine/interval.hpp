#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace perimine {

using DiscreteTime = std::int64_t;
using ContinuousTime = double;

template <typename T>
concept TimeScalar = std::same_as<T, DiscreteTime> || std::same_as<T, ContinuousTime>;

enum class TimeAxis { Discrete, Continuous };

template <TimeScalar T>
inline constexpr TimeAxis axis_of =
    std::is_integral_v<T> ? TimeAxis::Discrete : TimeAxis::Continuous;

/// Thrown when an input violates a precondition. `index` locates the
/// offending element when one is known.
class InvalidInput : public std::invalid_argument {
public:
    static constexpr std::size_t no_index = static_cast<std::size_t>(-1);

    explicit InvalidInput(const std::string& what, std::size_t index = no_index)
        : std::invalid_argument(index == no_index ? what : what + " (element " + std::to_string(index) + ")"),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

enum class EndpointKind : std::uint8_t { Open, Closed };

/// A time span with independently open/closed endpoints. Canonical discrete
/// form has both endpoints closed; use make_interval to normalize.
template <TimeScalar T>
struct Interval {
    T lo{};
    T hi{};
    EndpointKind lo_kind = EndpointKind::Closed;
    EndpointKind hi_kind = EndpointKind::Closed;

    bool contains(T x) const {
        const bool above = lo_kind == EndpointKind::Closed ? lo <= x : lo < x;
        const bool below = hi_kind == EndpointKind::Closed ? x <= hi : x < hi;
        return above && below;
    }

    bool valid() const {
        if constexpr (axis_of<T> == TimeAxis::Continuous) {
            if (!std::isfinite(lo) || !std::isfinite(hi)) return false;
        } else {
            if (lo_kind != EndpointKind::Closed || hi_kind != EndpointKind::Closed) return false;
        }
        if (lo < hi) return true;
        return lo == hi && lo_kind == EndpointKind::Closed && hi_kind == EndpointKind::Closed;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Validating factory. Discrete open endpoints are normalized one unit
/// inward: (a,b] -> [a+1,b], [a,b) -> [a,b-1], (a,b) -> [a+1,b-1].
template <TimeScalar T>
Interval<T> make_interval(T lo, T hi,
                          EndpointKind lo_kind = EndpointKind::Closed,
                          EndpointKind hi_kind = EndpointKind::Closed) {
    if constexpr (axis_of<T> == TimeAxis::Discrete) {
        if (lo_kind == EndpointKind::Open) {
            lo += 1;
            lo_kind = EndpointKind::Closed;
        }
        if (hi_kind == EndpointKind::Open) {
            hi -= 1;
            hi_kind = EndpointKind::Closed;
        }
    }
    const Interval<T> iv{lo, hi, lo_kind, hi_kind};
    if (!iv.valid()) throw InvalidInput("invalid interval");
    return iv;
}

}  // namespace perimine
