#pragma once

#include "perimine/calendar.hpp"
#include "perimine/occurrence.hpp"

#include <span>
#include <string>
#include <vector>

namespace perimine {

enum class OutputFormat { Json, Csv };

std::string to_string(PeriodLevel level);
std::string to_string(Resolution res);
std::string to_string(Classification c);

/// Everything a report needs beyond the hills themselves.
struct ReportContext {
    PeriodLevel level = PeriodLevel::Yearly;
    Resolution resolution = Resolution::Day;
    std::int64_t periods = 0;  // 0 when the input had no intervals
    Rational min_certainty{0};
    std::vector<std::string> warnings;
};

/// Renders a stripped-axis offset back into calendar vocabulary
/// ("12 Jul", "day 10", "05:30" depending on the level).
std::string render_offset(PeriodLevel level, Resolution res, std::int64_t offset);
std::string render_span(PeriodLevel level, Resolution res, std::int64_t from, std::int64_t to);

/// Deterministic report: byte-identical output for identical input.
std::string render_report(std::span<const PeriodicityReport> reports, const ReportContext& ctx,
                          OutputFormat format);

/// Debug dump of the stripped-axis occurrence structures as JSON.
std::string render_occurrence_dump(std::span<const ChangeRecord<DiscreteTime>> changes,
                                   std::span<const KnotRecord<DiscreteTime>> knots,
                                   std::span<const LocalMaximum<DiscreteTime>> maxima);

}  // namespace perimine
