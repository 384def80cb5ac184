#include "perimine/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>

namespace perimine {

namespace {

std::string_view trim_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

int parse_digits(std::string_view text, std::size_t pos, std::size_t count) {
    if (pos + count > text.size()) throw std::invalid_argument("truncated timestamp");
    int value = 0;
    const auto result =
        std::from_chars(text.data() + pos, text.data() + pos + count, value);
    if (result.ec != std::errc{} || result.ptr != text.data() + pos + count)
        throw std::invalid_argument("expected digits in timestamp");
    return value;
}

void expect_char(std::string_view text, std::size_t pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument(std::string("expected '") + c + "' in timestamp");
}

double parse_value(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty value");
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size())
        throw std::invalid_argument("cannot parse value '" + std::string(text) + "'");
    if (!std::isfinite(value)) throw std::invalid_argument("value must be finite");
    return value;
}

// Splits a two-column CSV row at its single comma.
std::pair<std::string_view, std::string_view> split_two(std::string_view line) {
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
        throw std::invalid_argument("expected exactly two comma-separated columns");
    return {line.substr(0, comma), line.substr(comma + 1)};
}

}  // namespace

CalendarStamp parse_stamp(std::string_view text, Resolution& res_out) {
    CalendarStamp s;
    s.year = parse_digits(text, 0, 4);
    expect_char(text, 4, '-');
    s.month = parse_digits(text, 5, 2);
    expect_char(text, 7, '-');
    s.day = parse_digits(text, 8, 2);

    if (text.size() == 10) {
        res_out = Resolution::Day;
    } else {
        if (text[10] != 'T' && text[10] != ' ')
            throw std::invalid_argument("expected 'T' before time of day");
        s.hour = parse_digits(text, 11, 2);
        if (text.size() == 13) {
            res_out = Resolution::Hour;
        } else {
            expect_char(text, 13, ':');
            s.minute = parse_digits(text, 14, 2);
            if (text.size() == 16) {
                res_out = Resolution::Minute;
            } else {
                expect_char(text, 16, ':');
                s.second = parse_digits(text, 17, 2);
                if (text.size() != 19) throw std::invalid_argument("trailing characters after timestamp");
                res_out = Resolution::Second;
            }
        }
    }
    if (!s.valid()) throw std::invalid_argument("invalid calendar date '" + std::string(text) + "'");
    return s;
}

std::string render_stamp(const CalendarStamp& stamp, Resolution res) {
    char buf[24];
    switch (res) {
        case Resolution::Day:
            std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", stamp.year, stamp.month, stamp.day);
            break;
        case Resolution::Hour:
            std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d", stamp.year, stamp.month,
                          stamp.day, stamp.hour);
            break;
        case Resolution::Minute:
            std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d", stamp.year, stamp.month,
                          stamp.day, stamp.hour, stamp.minute);
            break;
        case Resolution::Second:
            std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", stamp.year,
                          stamp.month, stamp.day, stamp.hour, stamp.minute, stamp.second);
            break;
    }
    return buf;
}

IntervalDataset parse_interval_csv(std::istream& in) {
    IntervalDataset dataset;
    std::string raw;
    std::size_t line_no = 0;
    bool saw_resolution = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim_cr(raw);
        if (line_no == 1) {
            if (line != "start,end") throw ParseError(1, "expected header 'start,end'");
            continue;
        }
        if (line.empty()) continue;
        try {
            const auto [start_text, end_text] = split_two(line);
            Resolution start_res{}, end_res{};
            CalendarInterval interval{parse_stamp(start_text, start_res),
                                      parse_stamp(end_text, end_res)};
            if (start_res != end_res)
                throw std::invalid_argument("start and end use different resolutions");
            if (saw_resolution && start_res != dataset.resolution)
                throw std::invalid_argument("mixed timestamp resolutions in one file");
            if (interval.end < interval.start)
                throw std::invalid_argument("interval end precedes its start");
            dataset.resolution = start_res;
            saw_resolution = true;
            dataset.intervals.push_back(interval);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (line_no == 0) throw ParseError(1, "empty file; expected header 'start,end'");
    return dataset;
}

std::string render_interval_csv(const IntervalDataset& dataset) {
    std::string out = "start,end\n";
    for (const auto& interval : dataset.intervals) {
        out += render_stamp(interval.start, dataset.resolution);
        out += ',';
        out += render_stamp(interval.end, dataset.resolution);
        out += '\n';
    }
    return out;
}

SeriesDataset parse_series_csv(std::istream& in) {
    SeriesDataset dataset;
    std::string raw;
    std::size_t line_no = 0;
    bool saw_resolution = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim_cr(raw);
        if (line_no == 1) {
            if (line != "date,value") throw ParseError(1, "expected header 'date,value'");
            continue;
        }
        if (line.empty()) continue;
        try {
            const auto [date_text, value_text] = split_two(line);
            Resolution res{};
            const CalendarStamp stamp = parse_stamp(date_text, res);
            if (saw_resolution && res != dataset.resolution)
                throw std::invalid_argument("mixed timestamp resolutions in one file");
            if (!dataset.stamps.empty() && !(dataset.stamps.back() < stamp))
                throw std::invalid_argument("timestamps must be strictly ascending");
            dataset.resolution = res;
            saw_resolution = true;
            dataset.stamps.push_back(stamp);
            dataset.values.push_back(parse_value(value_text));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (line_no == 0) throw ParseError(1, "empty file; expected header 'date,value'");
    return dataset;
}

std::vector<double> parse_template_file(std::istream& in) {
    std::vector<double> values;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim_cr(raw);
        if (line.empty()) continue;
        try {
            values.push_back(parse_value(line));
        } catch (const std::invalid_argument& e) {
            if (values.empty() && line_no == 1) continue;  // header row
            throw ParseError(line_no, e.what());
        }
    }
    if (values.size() < 2)
        throw ParseError(line_no == 0 ? 1 : line_no, "template needs at least two values");
    return values;
}

}  // namespace perimine
