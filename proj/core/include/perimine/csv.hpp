#pragma once

#include "perimine/calendar.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace perimine {

/// Input file rejection, carrying the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct IntervalDataset {
    Resolution resolution = Resolution::Day;
    std::vector<CalendarInterval> intervals;
};

struct SeriesDataset {
    Resolution resolution = Resolution::Day;
    std::vector<CalendarStamp> stamps;
    std::vector<double> values;
};

/// ISO-8601 stamp: "2001-06-10" plus optional "T14", "T14:30" or
/// "T14:30:05" (a space works in place of the 'T'). The accepted resolution
/// is reported through `res_out`. Throws std::invalid_argument.
CalendarStamp parse_stamp(std::string_view text, Resolution& res_out);
std::string render_stamp(const CalendarStamp& stamp, Resolution res);

/// Interval CSV: header "start,end", one ISO-8601 pair per row, closed at
/// the dataset resolution. All rows must share one resolution.
IntervalDataset parse_interval_csv(std::istream& in);
std::string render_interval_csv(const IntervalDataset& dataset);

/// Series CSV: header "date,value"; strictly ascending timestamps.
SeriesDataset parse_series_csv(std::istream& in);

/// Single-column numeric template; an optional non-numeric first line is
/// treated as a header.
std::vector<double> parse_template_file(std::istream& in);

}  // namespace perimine
