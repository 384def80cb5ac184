#pragma once

// Seeded random instance generators shared by the unit and acceptance suites.

#include "perimine/interval.hpp"

#include <random>
#include <vector>

namespace testgen {

using perimine::ContinuousTime;
using perimine::DiscreteTime;
using perimine::EndpointKind;
using perimine::Interval;

inline std::vector<Interval<DiscreteTime>> random_discrete_intervals(std::mt19937_64& rng,
                                                                     std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
    std::uniform_int_distribution<std::int64_t> lo_dist(-500, 500);
    std::uniform_int_distribution<std::int64_t> len_dist(0, 100);
    std::vector<Interval<DiscreteTime>> out;
    const std::size_t n = n_dist(rng);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lo = lo_dist(rng);
        out.push_back(perimine::make_interval<DiscreteTime>(lo, lo + len_dist(rng)));
    }
    return out;
}

// Mixed endpoint kinds; endpoint values are drawn from a shared pool part of
// the time so coincident timestamps (the n1..n4 > 1 cases) actually occur.
inline std::vector<Interval<ContinuousTime>> random_continuous_intervals(std::mt19937_64& rng,
                                                                         std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
    std::uniform_real_distribution<double> value_dist(-500.0, 500.0);
    std::uniform_real_distribution<double> len_dist(0.0, 100.0);
    std::bernoulli_distribution reuse(0.3), open_kind(0.5), point(0.05);

    std::vector<double> pool;
    const auto draw = [&]() {
        if (!pool.empty() && reuse(rng)) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            return pool[pick(rng)];
        }
        const double v = value_dist(rng);
        pool.push_back(v);
        return v;
    };

    std::vector<Interval<ContinuousTime>> out;
    const std::size_t n = n_dist(rng);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = draw();
        if (point(rng)) {
            out.push_back(perimine::make_interval<ContinuousTime>(lo, lo));
            continue;
        }
        double hi = lo + len_dist(rng);
        if (hi == lo) hi = lo + 1.0;
        pool.push_back(hi);
        out.push_back(perimine::make_interval<ContinuousTime>(
            lo, hi, open_kind(rng) ? EndpointKind::Open : EndpointKind::Closed,
            open_kind(rng) ? EndpointKind::Open : EndpointKind::Closed));
    }
    return out;
}

}  // namespace testgen
