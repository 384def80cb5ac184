#pragma once

#include "perimine/calendar.hpp"
#include "perimine/dtw.hpp"
#include "perimine/report.hpp"

#include <iosfwd>
#include <string>

namespace perimine {

enum class RunMode { Intervals, SeriesWithTemplate };

struct RunConfig {
    RunMode mode = RunMode::Intervals;
    PeriodLevel level = PeriodLevel::Yearly;
    Rational min_certainty{0};
    WarpConfig dtw;
    std::string input_path;
    std::string template_path;
    std::string output_path;  // empty: report goes to `out`
    OutputFormat format = OutputFormat::Json;
    std::string matches_out_path;      // optional: extracted intervals as CSV
    std::string occurrence_dump_path;  // optional: change/knot/maxima JSON
};

/// One end-to-end mining run. Returns the process exit status: 0 on success
/// (a report with zero hills included), 1 on configuration errors, 2 on
/// input parse errors. Diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace perimine
