#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace perimine {

/// A time series: strictly ascending timestamps, finite values.
struct Series {
    std::vector<double> timestamps;
    std::vector<double> values;

    bool valid() const;
};

/// Shape template to search for; at least two finite values.
struct Template {
    std::vector<double> values;

    bool valid() const;
};

enum class DeltaKind { AbsoluteDifference, SquaredDifference };

struct WarpConfig {
    int window = 1;          // warping-window half width, >= 1
    double threshold = 0.0;  // max admissible normalized distance
    double stretch = 1.5;    // candidate lengths range over [m/stretch, m*stretch]
    bool z_normalize = false;
    DeltaKind delta = DeltaKind::AbsoluteDifference;
};

struct DtwResult {
    double cost = 0.0;              // minimal path sum of deltas
    std::int64_t path_length = 0;   // grid points on the optimal path, diagonal-preferring ties
};

/// Windowed DTW between two sequences. Throws InvalidInput when either
/// sequence is empty or the length difference exceeds the window (no
/// admissible path exists).
DtwResult dtw_distance(std::span<const double> a, std::span<const double> b, int window,
                       DeltaKind delta = DeltaKind::AbsoluteDifference);

/// A maximal run of overlapping hits: inclusive series index span, the best
/// normalized distance inside it, and the covered timestamp span.
struct Match {
    std::size_t start_index = 0;
    std::size_t end_index = 0;
    double score = 0.0;
    double start_time = 0.0;
    double end_time = 0.0;
};

struct MatchResult {
    std::vector<Match> matches;
    /// Set when the series is shorter than the template even at maximum
    /// compression; matches is empty in that case.
    bool template_too_long = false;
};

/// Scans every subsequence whose length is within the stretch bound of the
/// template, keeps those with normalized distance (cost / path length) at or
/// below the threshold, and merges overlapping hits.
MatchResult find_matches(const Series& series, const Template& shape, const WarpConfig& cfg);

}  // namespace perimine
