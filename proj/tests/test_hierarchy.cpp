#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perimine/hierarchy.hpp"
#include "perimine/interval.hpp"

#include <random>
#include <vector>

using namespace perimine;

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(8, 10) == Rational(4, 5));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1) - Rational(12) * Rational(1, 24) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 7).to_string() == "1");
    CHECK(Rational(23, 24).to_string() == "23/24");

    CHECK(Rational::parse("23/24") == Rational(23, 24));
    CHECK(Rational::parse("0.8") == Rational(4, 5));
    CHECK(Rational::parse("1") == Rational(1));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("derived_pattern_bounds") {
    SUBCASE("fully periodic pattern stays fully periodic at every level") {
        for (const std::int64_t p : {1, 2, 12, 365}) {
            const auto bounds = derived_pattern_bounds({p, Rational(1), 10});
            CHECK(bounds.min_periodicity == Rational(1));
            CHECK(bounds.avg_periodicity == Rational(1));
            CHECK(bounds.count == p);
        }
    }
    SUBCASE("monthly 23/24 example") {
        const auto bounds = derived_pattern_bounds({12, Rational(23, 24), 10});
        CHECK(bounds.min_periodicity == Rational(1, 2));
        CHECK(bounds.avg_periodicity == Rational(23, 24));
        CHECK(bounds.count == 12);
    }
    SUBCASE("f just above the hypothesis threshold") {
        const auto bounds = derived_pattern_bounds({2, Rational(3, 4), 8});
        CHECK(bounds.min_periodicity == Rational(1, 2));
        CHECK(bounds.avg_periodicity == Rational(3, 4));
    }
    SUBCASE("hypothesis violations are rejected") {
        CHECK_THROWS_AS(derived_pattern_bounds({2, Rational(1, 2), 10}), InvalidInput);
        CHECK_THROWS_AS(derived_pattern_bounds({12, Rational(11, 12), 10}), InvalidInput);
        CHECK_THROWS_AS(derived_pattern_bounds({12, Rational(0), 10}), InvalidInput);
        CHECK_THROWS_AS(derived_pattern_bounds({12, Rational(25, 24), 10}), InvalidInput);
        CHECK_THROWS_AS(derived_pattern_bounds({0, Rational(1), 10}), InvalidInput);
    }
}

TEST_CASE("verify_bounds_by_enumeration on the worked assignments") {
    // eleven months at 10 of 10 years, one month at 5: f = 115/120 = 23/24
    std::vector<std::int64_t> counts(12, 10);
    counts[3] = 5;
    const auto check = verify_bounds_by_enumeration(12, 10, counts);
    CHECK(check.holds);
    CHECK(check.periodicity == Rational(23, 24));
    CHECK(check.min_ratio == Rational(1, 2));
    CHECK(check.bound == Rational(1, 2));  // the bound is met with equality
    CHECK(check.mean_ratio == Rational(23, 24));
    CHECK(check.argmin == 3);

    const std::vector<std::int64_t> full{5, 5};
    const auto full_check = verify_bounds_by_enumeration(2, 5, full);
    CHECK(full_check.holds);
    CHECK(full_check.periodicity == Rational(1));
    CHECK(full_check.min_ratio == Rational(1));
    CHECK(full_check.bound == Rational(1));
}

TEST_CASE("verify_bounds_by_enumeration validates preconditions") {
    const std::vector<std::int64_t> counts{3, 11};
    CHECK_THROWS_AS(verify_bounds_by_enumeration(2, 10, counts), InvalidInput);  // 11 > periods
    CHECK_THROWS_AS(verify_bounds_by_enumeration(3, 10, counts), InvalidInput);  // size mismatch
    const std::vector<std::int64_t> negative{-1, 2};
    CHECK_THROWS_AS(verify_bounds_by_enumeration(2, 10, negative), InvalidInput);
}

TEST_CASE("bounds hold for random assignments") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 10000; ++round) {
        const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 6);
        const std::int64_t mj = 1 + static_cast<std::int64_t>(rng() % 8);
        std::vector<std::int64_t> counts(p);
        for (auto& c : counts) c = static_cast<std::int64_t>(rng() % (mj + 1));
        const auto check = verify_bounds_by_enumeration(p, mj, counts);
        REQUIRE(check.holds);
        REQUIRE(check.mean_ratio == check.periodicity);
    }
}

TEST_CASE("exhaustive check and tight witnesses for small hierarchies") {
    for (std::int64_t p = 1; p <= 4; ++p) {
        for (std::int64_t mj = 1; mj <= 6; ++mj) {
            std::vector<std::int64_t> counts(p, 0);
            while (true) {
                const auto check = verify_bounds_by_enumeration(p, mj, counts);
                REQUIRE(check.holds);

                std::size_t k = 0;
                while (k < counts.size() && counts[k] == mj) counts[k++] = 0;
                if (k == counts.size()) break;
                ++counts[k];
            }

            // every feasible total admits an assignment meeting the bound exactly
            for (std::int64_t total = (p - 1) * mj + 1; total <= p * mj; ++total) {
                std::vector<std::int64_t> witness(p, mj);
                witness[0] = total - (p - 1) * mj;
                const auto check = verify_bounds_by_enumeration(p, mj, witness);
                REQUIRE(check.holds);
                REQUIRE(check.min_ratio == check.bound);
                REQUIRE(check.periodicity > Rational(p - 1, p));
            }
        }
    }
}
