#include "perimine/report.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>

namespace perimine {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<const char*, 12> kMonthAbbr = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

std::string format(const char* fmt, auto... args) {
    char buf[48];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

std::string sub_day_suffix(Resolution res, std::int64_t sub) {
    switch (res) {
        case Resolution::Day: return "";
        case Resolution::Hour: return format(" %02dh", static_cast<int>(sub));
        case Resolution::Minute:
            return format(" %02d:%02d", static_cast<int>(sub / 60), static_cast<int>(sub % 60));
        case Resolution::Second:
            return format(" %02d:%02d:%02d", static_cast<int>(sub / 3600),
                          static_cast<int>(sub / 60 % 60), static_cast<int>(sub % 60));
    }
    return "";
}

std::string percent_text(const Rational& certainty) {
    return format("%.1f", 100.0 * certainty.to_double());
}

ordered_json hill_json(const PeriodicityReport& report, const ReportContext& ctx) {
    ordered_json j;
    j["span"] = render_span(ctx.level, ctx.resolution, report.hill.peakstart, report.hill.peakend);
    j["peak_certainty"] = report.peak_certainty.to_string();
    j["peak_certainty_percent"] = percent_text(report.peak_certainty);
    j["classification"] = to_string(report.classification);
    j["peak_occurrences"] = report.hill.peakval;
    j["start_offset"] = report.hill.start;
    j["peak_start_offset"] = report.hill.peakstart;
    j["peak_end_offset"] = report.hill.peakend;
    j["end_offset"] = report.hill.end;
    j["start_value"] = report.hill.startval;
    j["end_value"] = report.hill.endval;
    j["irregular_slot"] = report.irregular_slot;
    j["boundary_adjacent"] = report.boundary_adjacent;
    return j;
}

std::string render_csv(std::span<const PeriodicityReport> reports, const ReportContext& ctx) {
    std::string out =
        "level,span,peak_certainty,peak_certainty_percent,classification,peak_occurrences,"
        "periods,start_offset,peak_start_offset,peak_end_offset,end_offset,irregular_slot,"
        "boundary_adjacent\n";
    for (const auto& report : reports) {
        out += to_string(ctx.level);
        out += ',';
        out += render_span(ctx.level, ctx.resolution, report.hill.peakstart, report.hill.peakend);
        out += ',';
        out += report.peak_certainty.to_string();
        out += ',';
        out += percent_text(report.peak_certainty);
        out += ',';
        out += to_string(report.classification);
        out += ',';
        out += std::to_string(report.hill.peakval);
        out += ',';
        out += std::to_string(report.periods);
        out += ',';
        out += std::to_string(report.hill.start);
        out += ',';
        out += std::to_string(report.hill.peakstart);
        out += ',';
        out += std::to_string(report.hill.peakend);
        out += ',';
        out += std::to_string(report.hill.end);
        out += ',';
        out += report.irregular_slot ? "true" : "false";
        out += ',';
        out += report.boundary_adjacent ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace

std::string to_string(PeriodLevel level) {
    switch (level) {
        case PeriodLevel::Yearly: return "yearly";
        case PeriodLevel::Monthly: return "monthly";
        case PeriodLevel::Daily: return "daily";
        case PeriodLevel::Hourly: return "hourly";
    }
    return "?";
}

std::string to_string(Resolution res) {
    switch (res) {
        case Resolution::Day: return "day";
        case Resolution::Hour: return "hour";
        case Resolution::Minute: return "minute";
        case Resolution::Second: return "second";
    }
    return "?";
}

std::string to_string(Classification c) {
    return c == Classification::Full ? "full" : "partial";
}

std::string render_offset(PeriodLevel level, Resolution res, std::int64_t offset) {
    const std::int64_t updd = units_per_day(res);
    switch (level) {
        case PeriodLevel::Yearly: {
            const int slot_day = static_cast<int>((offset - 1) / updd + 1);
            const auto [month, day] = month_day_from_canonical(slot_day);
            return format("%d %s", day, kMonthAbbr[month - 1]) +
                   sub_day_suffix(res, (offset - 1) % updd);
        }
        case PeriodLevel::Monthly: {
            const int day = static_cast<int>((offset - 1) / updd + 1);
            return format("day %d", day) + sub_day_suffix(res, (offset - 1) % updd);
        }
        case PeriodLevel::Daily: {
            const std::int64_t sub = offset - 1;
            switch (res) {
                case Resolution::Hour: return format("%02dh", static_cast<int>(sub));
                case Resolution::Minute:
                    return format("%02d:%02d", static_cast<int>(sub / 60),
                                  static_cast<int>(sub % 60));
                default:
                    return format("%02d:%02d:%02d", static_cast<int>(sub / 3600),
                                  static_cast<int>(sub / 60 % 60), static_cast<int>(sub % 60));
            }
        }
        case PeriodLevel::Hourly: {
            const std::int64_t sub = offset - 1;
            if (res == Resolution::Minute) return format("min %02d", static_cast<int>(sub));
            return format("min %02d:%02d", static_cast<int>(sub / 60), static_cast<int>(sub % 60));
        }
    }
    return "?";
}

std::string render_span(PeriodLevel level, Resolution res, std::int64_t from, std::int64_t to) {
    const std::string a = render_offset(level, res, from);
    if (from == to) return a;
    return a + " - " + render_offset(level, res, to);
}

std::string render_report(std::span<const PeriodicityReport> reports, const ReportContext& ctx,
                          OutputFormat fmt) {
    if (fmt == OutputFormat::Csv) return render_csv(reports, ctx);

    ordered_json j;
    j["level"] = to_string(ctx.level);
    j["resolution"] = to_string(ctx.resolution);
    j["cycle_length"] = cycle_length(ctx.level, ctx.resolution);
    j["periods"] = ctx.periods;
    j["min_certainty"] = ctx.min_certainty.to_string();
    j["warnings"] = ctx.warnings;
    j["hills"] = ordered_json::array();
    for (const auto& report : reports) j["hills"].push_back(hill_json(report, ctx));
    return j.dump(2) + "\n";
}

std::string render_occurrence_dump(std::span<const ChangeRecord<DiscreteTime>> changes,
                                   std::span<const KnotRecord<DiscreteTime>> knots,
                                   std::span<const LocalMaximum<DiscreteTime>> maxima) {
    ordered_json j;
    j["axis"] = "discrete";
    j["changes"] = ordered_json::array();
    for (const auto& c : changes) j["changes"].push_back({{"t", c.t}, {"u", c.u}, {"r", c.r}});
    j["knots"] = ordered_json::array();
    for (const auto& k : knots) j["knots"].push_back({{"t", k.t}, {"v", k.v}});
    j["maxima"] = ordered_json::array();
    for (const auto& h : maxima) {
        ordered_json hill;
        hill["start"] = h.start;
        hill["startval"] = h.startval;
        hill["peakstart"] = h.peakstart;
        hill["peakend"] = h.peakend;
        hill["peakval"] = h.peakval;
        hill["end"] = h.end;
        hill["endval"] = h.endval;
        j["maxima"].push_back(hill);
    }
    return j.dump(2) + "\n";
}

}  // namespace perimine
