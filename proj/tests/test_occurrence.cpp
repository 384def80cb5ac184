#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perimine/occurrence.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace perimine;

namespace {

template <TimeScalar T>
std::vector<ChangeRecord<T>> changes_of(const std::vector<Interval<T>>& intervals) {
    return build_change_records<T>(sort_endpoints<T>(intervals));
}

std::vector<Interval<DiscreteTime>> example_discrete() {
    return {make_interval<DiscreteTime>(1, 3), make_interval<DiscreteTime>(2, 5)};
}

// {[0,2), (1,3]}
std::vector<Interval<ContinuousTime>> example_continuous() {
    return {make_interval<ContinuousTime>(0.0, 2.0, EndpointKind::Closed, EndpointKind::Open),
            make_interval<ContinuousTime>(1.0, 3.0, EndpointKind::Open, EndpointKind::Closed)};
}

}  // namespace

TEST_CASE("interval validation") {
    CHECK_THROWS_AS(make_interval<ContinuousTime>(0.0, std::nan("")), InvalidInput);
    CHECK_THROWS_AS(
        make_interval<ContinuousTime>(0.0, std::numeric_limits<double>::infinity()), InvalidInput);
    CHECK_THROWS_AS(make_interval<ContinuousTime>(2.0, 1.0), InvalidInput);
    // a == b with an open side is empty
    CHECK_THROWS_AS(make_interval<ContinuousTime>(1.0, 1.0, EndpointKind::Open,
                                                  EndpointKind::Closed),
                    InvalidInput);
    CHECK(make_interval<ContinuousTime>(1.0, 1.0).contains(1.0));

    // discrete opens normalize inward
    const auto shifted = make_interval<DiscreteTime>(1, 4, EndpointKind::Open, EndpointKind::Open);
    CHECK(shifted == make_interval<DiscreteTime>(2, 3));
    // (1, 2) holds no integer
    CHECK_THROWS_AS(make_interval<DiscreteTime>(1, 2, EndpointKind::Open, EndpointKind::Open),
                    InvalidInput);
}

TEST_CASE("sort_endpoints examples") {
    CHECK(sort_endpoints<DiscreteTime>(std::vector<Interval<DiscreteTime>>{}).empty());

    const auto discrete = sort_endpoints<DiscreteTime>(example_discrete());
    CHECK(discrete == std::vector<EndpointRecord<DiscreteTime>>{
                          {1, EndpointType::LeftClosed},
                          {2, EndpointType::LeftClosed},
                          {3, EndpointType::RightClosed},
                          {5, EndpointType::RightClosed},
                      });

    const auto continuous = sort_endpoints<ContinuousTime>(example_continuous());
    CHECK(continuous == std::vector<EndpointRecord<ContinuousTime>>{
                            {0.0, EndpointType::LeftClosed},
                            {1.0, EndpointType::LeftOpen},
                            {2.0, EndpointType::RightOpen},
                            {3.0, EndpointType::RightClosed},
                        });
}

TEST_CASE("sort_endpoints rejects the offending interval by index") {
    std::vector<Interval<ContinuousTime>> bad = example_continuous();
    bad.push_back(Interval<ContinuousTime>{5.0, 4.0});  // bypasses the factory
    try {
        sort_endpoints<ContinuousTime>(bad);
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("radix sort agrees with a comparison sort") {
    std::mt19937_64 rng(7001);
    std::uniform_int_distribution<std::int64_t> wide(-4'000'000'000'000LL, 4'000'000'000'000LL);
    std::uniform_int_distribution<std::int64_t> len(0, 1'000'000);
    for (int round = 0; round < 50; ++round) {
        std::vector<Interval<DiscreteTime>> intervals;
        for (int i = 0; i < 300; ++i) {
            const std::int64_t lo = wide(rng);
            intervals.push_back(make_interval<DiscreteTime>(lo, lo + len(rng)));
        }
        auto sorted = sort_endpoints<DiscreteTime>(intervals);

        std::vector<EndpointRecord<DiscreteTime>> expected;
        for (const auto& iv : intervals) {
            expected.push_back({iv.lo, EndpointType::LeftClosed});
            expected.push_back({iv.hi, EndpointType::RightClosed});
        }
        std::stable_sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            if (a.t != b.t) return a.t < b.t;
            return static_cast<int>(a.type) < static_cast<int>(b.type);
        });
        REQUIRE(sorted == expected);
    }
}

TEST_CASE("build_change_records examples") {
    const auto discrete = changes_of(example_discrete());
    CHECK(discrete == std::vector<ChangeRecord<DiscreteTime>>{
                          {1, 1, 2}, {2, 2, 2}, {3, 2, 1}, {5, 1, 0}});

    const auto continuous = changes_of(example_continuous());
    CHECK(continuous == std::vector<ChangeRecord<ContinuousTime>>{
                            {0.0, 1, 1}, {1.0, 1, 2}, {2.0, 1, 1}, {3.0, 1, 0}});

    const auto single = changes_of(std::vector{make_interval<ContinuousTime>(2.5, 7.5)});
    CHECK(single == std::vector<ChangeRecord<ContinuousTime>>{{2.5, 1, 1}, {7.5, 1, 0}});

    CHECK(changes_of(std::vector<Interval<DiscreteTime>>{}).empty());
}

TEST_CASE("build_change_records rejects malformed input") {
    std::vector<EndpointRecord<DiscreteTime>> unsorted{{5, EndpointType::LeftClosed},
                                                       {1, EndpointType::RightClosed}};
    CHECK_THROWS_AS(build_change_records<DiscreteTime>(unsorted), InvalidInput);

    std::vector<EndpointRecord<DiscreteTime>> unpaired{{1, EndpointType::LeftClosed},
                                                       {2, EndpointType::LeftClosed}};
    CHECK_THROWS_AS(build_change_records<DiscreteTime>(unpaired), InvalidInput);

    // right endpoint before its left partner drives the running count negative
    std::vector<EndpointRecord<ContinuousTime>> negative{{0.0, EndpointType::RightClosed},
                                                         {1.0, EndpointType::LeftClosed}};
    CHECK_THROWS_AS(build_change_records<ContinuousTime>(negative), InvalidInput);
}

TEST_CASE("degenerate point interval contributes u = L + 1, r = L") {
    const auto changes = changes_of(std::vector{make_interval<ContinuousTime>(4.0, 4.0)});
    CHECK(changes == std::vector<ChangeRecord<ContinuousTime>>{{4.0, 1, 0}});
}

TEST_CASE("occurrence_at examples") {
    const auto discrete = changes_of(example_discrete());
    CHECK(occurrence_at<DiscreteTime>(discrete, 4) == 1);
    CHECK(occurrence_at<DiscreteTime>(discrete, 6) == 0);
    CHECK(occurrence_at<DiscreteTime>(discrete, 0) == 0);

    const auto continuous = changes_of(example_continuous());
    CHECK(occurrence_at<ContinuousTime>(continuous, 1.5) == 2);
    CHECK(occurrence_at<ContinuousTime>(continuous, 1.0) == 1);  // (1,3] is open at 1
    CHECK(occurrence_at<ContinuousTime>(
              std::span<const ChangeRecord<ContinuousTime>>{}, 0.0) == 0);
}

TEST_CASE("build_knot_records examples") {
    const auto discrete = build_knot_records<DiscreteTime>(changes_of(example_discrete()));
    CHECK(discrete == std::vector<KnotRecord<DiscreteTime>>{{1, 1}, {2, 2}, {4, 1}, {6, 0}});

    const auto continuous = build_knot_records<ContinuousTime>(changes_of(example_continuous()));
    CHECK(continuous ==
          std::vector<KnotRecord<ContinuousTime>>{{0.0, 1}, {1.0, 2}, {2.0, 1}, {3.0, 0}});

    CHECK(build_knot_records<DiscreteTime>(std::span<const ChangeRecord<DiscreteTime>>{}).empty());
}

TEST_CASE("find_local_maxima examples") {
    const auto discrete = find_local_maxima<DiscreteTime>(
        std::vector<KnotRecord<DiscreteTime>>{{1, 1}, {2, 2}, {4, 1}, {6, 0}});
    REQUIRE(discrete.size() == 1);
    CHECK(discrete[0] == LocalMaximum<DiscreteTime>{0, 2, 3, 6, 0, 2, 0});

    const auto single = find_local_maxima<ContinuousTime>(
        std::vector<KnotRecord<ContinuousTime>>{{0.0, 1}, {3.0, 0}});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == LocalMaximum<ContinuousTime>{0.0, 0.0, 3.0, 3.0, 0, 1, 0});

    const auto two = find_local_maxima<ContinuousTime>(std::vector<KnotRecord<ContinuousTime>>{
        {0.0, 1}, {2.0, 3}, {4.0, 1}, {5.0, 2}, {7.0, 0}});
    REQUIRE(two.size() == 2);
    CHECK(two[0] == LocalMaximum<ContinuousTime>{0.0, 2.0, 4.0, 4.0, 0, 3, 1});
    CHECK(two[1] == LocalMaximum<ContinuousTime>{5.0, 5.0, 7.0, 7.0, 1, 2, 0});

    CHECK(find_local_maxima<DiscreteTime>(std::span<const KnotRecord<DiscreteTime>>{}).empty());
}

TEST_CASE("find_local_maxima closes a never-falling scan at the last knot") {
    // not producible from finite intervals (the last knot always drops to 0),
    // but raw knot input may end mid-rise
    const auto hills = find_local_maxima<ContinuousTime>(
        std::vector<KnotRecord<ContinuousTime>>{{1.0, 2}, {4.0, 5}});
    REQUIRE(hills.size() == 1);
    CHECK(hills[0] == LocalMaximum<ContinuousTime>{1.0, 4.0, 4.0, 4.0, 0, 5, 5});
}

TEST_CASE("occurrence oracle equivalence on random instances") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> probe_dist(-550, 650);
    for (int round = 0; round < 60; ++round) {
        const auto intervals = testgen::random_discrete_intervals(rng, 200);
        const auto changes = changes_of(intervals);
        CHECK(changes.size() <= 2 * intervals.size());
        for (int q = 0; q < 200; ++q) {
            const std::int64_t s = probe_dist(rng);
            REQUIRE(occurrence_at<DiscreteTime>(changes, s) ==
                    oracle::count_at<DiscreteTime>(intervals, s));
        }
    }

    std::uniform_real_distribution<double> real_probe(-550.0, 650.0);
    for (int round = 0; round < 60; ++round) {
        const auto intervals = testgen::random_continuous_intervals(rng, 200);
        const auto changes = changes_of(intervals);
        for (int q = 0; q < 100; ++q) {
            const double s = real_probe(rng);
            REQUIRE(occurrence_at<ContinuousTime>(changes, s) ==
                    oracle::count_at<ContinuousTime>(intervals, s));
        }
        // probe every endpoint exactly
        for (const auto& iv : intervals) {
            REQUIRE(occurrence_at<ContinuousTime>(changes, iv.lo) ==
                    oracle::count_at<ContinuousTime>(intervals, iv.lo));
            REQUIRE(occurrence_at<ContinuousTime>(changes, iv.hi) ==
                    oracle::count_at<ContinuousTime>(intervals, iv.hi));
        }
    }
}

TEST_CASE("piecewise constancy between consecutive change records") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 40; ++round) {
        const auto intervals = testgen::random_continuous_intervals(rng, 100);
        const auto changes = changes_of(intervals);
        for (std::size_t i = 0; i + 1 < changes.size(); ++i) {
            const double a = changes[i].t, b = changes[i + 1].t;
            for (const double frac : {0.25, 0.5, 0.75}) {
                const double x = a + (b - a) * frac;
                if (x <= a || x >= b) continue;
                REQUIRE(oracle::count_real<ContinuousTime>(intervals, x) == changes[i].r);
            }
        }
        if (!changes.empty()) CHECK(changes.back().r == 0);
    }

    for (int round = 0; round < 40; ++round) {
        const auto intervals = testgen::random_discrete_intervals(rng, 100);
        const auto changes = changes_of(intervals);
        for (std::size_t i = 0; i + 1 < changes.size(); ++i) {
            const std::int64_t gap = changes[i + 1].t - changes[i].t;
            for (std::int64_t step = 1; step < std::min<std::int64_t>(gap, 4); ++step)
                REQUIRE(oracle::count_at<DiscreteTime>(intervals, changes[i].t + step) ==
                        changes[i].r);
        }
        if (!changes.empty()) CHECK(changes.back().r == 0);
    }
}

TEST_CASE("jump identities at every endpoint") {
    std::mt19937_64 rng(44);
    for (int round = 0; round < 40; ++round) {
        const auto intervals = testgen::random_continuous_intervals(rng, 80);
        const auto endpoints = sort_endpoints<ContinuousTime>(intervals);

        std::vector<double> stamps;
        for (const auto& e : endpoints) stamps.push_back(e.t);
        stamps.erase(std::unique(stamps.begin(), stamps.end()), stamps.end());

        for (std::size_t k = 0; k < stamps.size(); ++k) {
            const double t = stamps[k];
            std::int64_t n1 = 0, n2 = 0, n3 = 0, n4 = 0;
            for (const auto& e : endpoints) {
                if (e.t != t) continue;
                switch (e.type) {
                    case EndpointType::LeftOpen: ++n1; break;
                    case EndpointType::LeftClosed: ++n2; break;
                    case EndpointType::RightOpen: ++n3; break;
                    case EndpointType::RightClosed: ++n4; break;
                }
            }
            const double before = k == 0 ? t - 1.0 : (stamps[k - 1] + t) / 2.0;
            const double after = k + 1 == stamps.size() ? t + 1.0 : (t + stamps[k + 1]) / 2.0;
            if (before >= t || after <= t) continue;
            const std::int64_t L = oracle::count_real<ContinuousTime>(intervals, before);
            const std::int64_t R = oracle::count_real<ContinuousTime>(intervals, after);
            const std::int64_t at = oracle::count_real<ContinuousTime>(intervals, t);
            REQUIRE(at - L == n2 - n3);
            REQUIRE(R - L == n1 + n2 - n3 - n4);
        }
    }
}

TEST_CASE("maxima soundness on random discrete instances") {
    std::mt19937_64 rng(45);
    for (int round = 0; round < 40; ++round) {
        const auto intervals = testgen::random_discrete_intervals(rng, 60);
        const auto changes = changes_of(intervals);
        const auto knots = build_knot_records<DiscreteTime>(changes);
        CHECK(knots.size() <= 2 * changes.size());
        const auto hills = find_local_maxima<DiscreteTime>(knots);
        REQUIRE(!hills.empty());

        for (const auto& hill : hills) {
            CHECK(hill.start <= hill.peakstart);
            CHECK(hill.peakstart <= hill.peakend);
            CHECK(hill.peakend <= hill.end);
            CHECK(hill.startval < hill.peakval);
            CHECK(hill.endval < hill.peakval);

            std::int64_t max_seen = 0;
            for (std::int64_t t = hill.start; t <= hill.end; ++t) {
                const std::int64_t v = oracle::count_at<DiscreteTime>(intervals, t);
                max_seen = std::max(max_seen, v);
                const bool on_plateau = t >= hill.peakstart && t <= hill.peakend;
                REQUIRE((v == hill.peakval) == on_plateau);
            }
            REQUIRE(max_seen == hill.peakval);
        }
    }
}

TEST_CASE("maxima soundness on random continuous instances") {
    std::mt19937_64 rng(46);
    for (int round = 0; round < 40; ++round) {
        const auto intervals = testgen::random_continuous_intervals(rng, 60);
        const auto changes = changes_of(intervals);
        const auto hills = find_local_maxima<ContinuousTime>(
            build_knot_records<ContinuousTime>(changes));
        REQUIRE(!hills.empty());

        for (const auto& hill : hills) {
            // sample change timestamps inside the hill plus segment midpoints
            std::vector<double> samples;
            for (std::size_t i = 0; i < changes.size(); ++i) {
                const double t = changes[i].t;
                if (t < hill.start || t > hill.end) continue;
                samples.push_back(t);
                if (i + 1 < changes.size() && changes[i + 1].t <= hill.end)
                    samples.push_back((t + changes[i + 1].t) / 2.0);
            }
            std::int64_t max_seen = 0;
            for (const double x : samples) {
                const std::int64_t v = oracle::count_real<ContinuousTime>(intervals, x);
                max_seen = std::max(max_seen, v);
                if (v == hill.peakval) {
                    REQUIRE(x >= hill.peakstart);
                    REQUIRE(x <= hill.peakend);
                }
            }
            REQUIRE(max_seen == hill.peakval);
            if (hill.peakstart < hill.peakend) {
                REQUIRE(oracle::count_real<ContinuousTime>(
                            intervals, (hill.peakstart + hill.peakend) / 2.0) == hill.peakval);
            } else {
                REQUIRE(oracle::count_real<ContinuousTime>(intervals, hill.peakstart) ==
                        hill.peakval);
            }
        }
    }
}

TEST_CASE("suppressed value knots keep point queries on change records") {
    // At t=1 the knot array jumps straight to 2 although occ(1) == 1; the
    // change records keep the exact value.
    const auto intervals = example_continuous();
    const auto changes = changes_of(intervals);
    const auto knots = build_knot_records<ContinuousTime>(changes);
    CHECK(knots[1] == KnotRecord<ContinuousTime>{1.0, 2});
    CHECK(occurrence_at<ContinuousTime>(changes, 1.0) == 1);
}
