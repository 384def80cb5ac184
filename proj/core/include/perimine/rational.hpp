#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace perimine {

/// Exact rational over int64. Always normalized: den > 0, gcd(|num|, den) == 1.
/// Arithmetic throws std::overflow_error if a result does not fit after
/// reduction.
class Rational {
public:
    constexpr Rational() noexcept = default;

    Rational(std::int64_t num, std::int64_t den = 1) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = checked_negate(num);
            den = checked_negate(den);
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / (g == 0 ? 1 : g);
        den_ = den / (g == 0 ? 1 : g);
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                         wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                         wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(checked_negate(num_), den_); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "n", "n/d" and plain decimals such as "0.85".
    static Rational parse(std::string_view text);

private:
    using wide = __int128;

    static std::int64_t checked_negate(std::int64_t v) {
        if (v == INT64_MIN) throw std::overflow_error("Rational: overflow");
        return -v;
    }

    static Rational from_wide(wide num, wide den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        wide a = num < 0 ? -num : num;
        wide b = den;
        while (b != 0) {
            const wide t = a % b;
            a = b;
            b = t;
        }
        if (a != 0) {
            num /= a;
            den /= a;
        }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw std::overflow_error("Rational: overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto digits = [&](std::string_view s) {
        if (s.empty()) throw bad();
        std::int64_t v = 0;
        for (const char c : s) {
            if (c < '0' || c > '9') throw bad();
            if (v > (INT64_MAX - (c - '0')) / 10) throw std::overflow_error("Rational: overflow");
            v = v * 10 + (c - '0');
        }
        return v;
    };

    const std::string_view body = text.substr(pos);
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const std::int64_t num = digits(body.substr(0, slash));
        const std::int64_t den = digits(body.substr(slash + 1));
        return Rational(negative ? -num : num, den);
    }
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = body.substr(0, dot);
        const std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw bad();
        std::int64_t num = whole.empty() ? 0 : digits(whole);
        std::int64_t den = 1;
        for (const char c : frac) {
            if (c < '0' || c > '9') throw bad();
            if (den > INT64_MAX / 10) throw std::overflow_error("Rational: overflow");
            den *= 10;
            num = num * 10 + (c - '0');
        }
        return Rational(negative ? -num : num, den);
    }
    const std::int64_t num = digits(body);
    return Rational(negative ? -num : num, 1);
}

}  // namespace perimine
