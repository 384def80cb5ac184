#include "perimine/dtw.hpp"

#include "perimine/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace perimine {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double delta_of(double a, double b, DeltaKind kind) {
    const double d = std::abs(a - b);
    return kind == DeltaKind::AbsoluteDifference ? d : d * d;
}

std::vector<double> z_normalized(std::span<const double> values) {
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (const double v : values) mean += v;
    mean /= n;
    double var = 0.0;
    for (const double v : values) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / n);
    std::vector<double> out(values.size(), 0.0);
    if (sd > 0.0)
        for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) / sd;
    return out;
}

}  // namespace

bool Series::valid() const {
    if (timestamps.size() != values.size()) return false;
    for (std::size_t i = 0; i < timestamps.size(); ++i) {
        if (!std::isfinite(timestamps[i]) || !std::isfinite(values[i])) return false;
        if (i > 0 && timestamps[i] <= timestamps[i - 1]) return false;
    }
    return true;
}

bool Template::valid() const {
    if (values.size() < 2) return false;
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

DtwResult dtw_distance(std::span<const double> a, std::span<const double> b, int window,
                       DeltaKind delta) {
    if (a.empty() || b.empty()) throw InvalidInput("dtw_distance: empty sequence");
    if (window < 1) throw InvalidInput("dtw_distance: window must be >= 1");
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    const std::int64_t m = static_cast<std::int64_t>(b.size());
    if (std::abs(n - m) > window)
        throw InvalidInput("dtw_distance: length difference exceeds the warping window");

    // Two rolling rows over the banded grid; row index i aligns a[i-1].
    std::vector<double> prev_cost(m + 1, kInf), cost(m + 1, kInf);
    std::vector<std::int64_t> prev_len(m + 1, 0), len(m + 1, 0);
    prev_cost[0] = 0.0;

    for (std::int64_t i = 1; i <= n; ++i) {
        std::fill(cost.begin(), cost.end(), kInf);
        const std::int64_t j_lo = std::max<std::int64_t>(1, i - window);
        const std::int64_t j_hi = std::min<std::int64_t>(m, i + window);
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            // Tie preference: diagonal, then vertical (advance in a), then
            // horizontal. Affects only the reported path length.
            double best = prev_cost[j - 1];
            std::int64_t best_len = prev_len[j - 1];
            if (prev_cost[j] < best) {
                best = prev_cost[j];
                best_len = prev_len[j];
            }
            if (cost[j - 1] < best) {
                best = cost[j - 1];
                best_len = len[j - 1];
            }
            if (best == kInf) continue;
            cost[j] = delta_of(a[i - 1], b[j - 1], delta) + best;
            len[j] = best_len + 1;
        }
        std::swap(prev_cost, cost);
        std::swap(prev_len, len);
    }
    return {prev_cost[m], prev_len[m]};
}

MatchResult find_matches(const Series& series, const Template& shape, const WarpConfig& cfg) {
    if (!series.valid()) throw InvalidInput("find_matches: invalid series");
    if (!shape.valid()) throw InvalidInput("find_matches: invalid template");
    if (cfg.window < 1) throw InvalidInput("find_matches: window must be >= 1");
    if (cfg.threshold < 0.0 || !std::isfinite(cfg.threshold))
        throw InvalidInput("find_matches: threshold must be a nonnegative real");
    if (!(cfg.stretch >= 1.0) || !std::isfinite(cfg.stretch))
        throw InvalidInput("find_matches: stretch factor must be a finite real >= 1");

    const std::int64_t n = static_cast<std::int64_t>(series.values.size());
    const std::int64_t m = static_cast<std::int64_t>(shape.values.size());
    const std::int64_t len_lo =
        std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(static_cast<double>(m) / cfg.stretch)));
    const std::int64_t len_hi =
        static_cast<std::int64_t>(std::floor(static_cast<double>(m) * cfg.stretch));

    MatchResult result;
    if (len_lo > n) {
        result.template_too_long = true;
        return result;
    }

    std::vector<double> ref = shape.values;
    if (cfg.z_normalize) ref = z_normalized(ref);

    struct Hit {
        std::size_t start;
        std::size_t end;
        double score;
    };
    std::vector<Hit> hits;

    for (std::int64_t len = len_lo; len <= std::min(len_hi, n); ++len) {
        if (std::abs(len - m) > cfg.window) continue;  // no admissible path at this length
        for (std::int64_t s = 0; s + len <= n; ++s) {
            std::span<const double> window(series.values.data() + s, static_cast<std::size_t>(len));
            DtwResult d;
            if (cfg.z_normalize) {
                const auto normalized = z_normalized(window);
                d = dtw_distance(normalized, ref, cfg.window, cfg.delta);
            } else {
                d = dtw_distance(window, ref, cfg.window, cfg.delta);
            }
            const double normalized_cost = d.cost / static_cast<double>(d.path_length);
            if (normalized_cost <= cfg.threshold)
                hits.push_back({static_cast<std::size_t>(s),
                                static_cast<std::size_t>(s + len - 1), normalized_cost});
        }
    }

    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        return a.start != b.start ? a.start < b.start : a.end < b.end;
    });

    for (const auto& hit : hits) {
        if (!result.matches.empty() && hit.start <= result.matches.back().end_index) {
            auto& open = result.matches.back();
            open.end_index = std::max(open.end_index, hit.end);
            open.score = std::min(open.score, hit.score);
            continue;
        }
        result.matches.push_back({hit.start, hit.end, hit.score, 0.0, 0.0});
    }
    for (auto& match : result.matches) {
        match.start_time = series.timestamps[match.start_index];
        match.end_time = series.timestamps[match.end_index];
    }
    return result;
}

}  // namespace perimine
