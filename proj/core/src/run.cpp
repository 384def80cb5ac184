#include "perimine/run.hpp"

#include "perimine/csv.hpp"

#include <fstream>
#include <ostream>

namespace perimine {

namespace {

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write output file '" + path + "'");
    file << content;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string current_file = cfg.input_path;
    try {
        if (cfg.input_path.empty()) {
            err << "error: no input file configured\n";
            return 1;
        }
        if (cfg.mode == RunMode::SeriesWithTemplate && cfg.template_path.empty()) {
            err << "error: series mode needs a template file\n";
            return 1;
        }

        IntervalDataset intervals;
        std::vector<std::string> warnings;

        if (cfg.mode == RunMode::Intervals) {
            std::ifstream in(cfg.input_path);
            if (!in) throw ParseError(0, "cannot open file");
            intervals = parse_interval_csv(in);
        } else {
            std::ifstream series_in(cfg.input_path);
            if (!series_in) throw ParseError(0, "cannot open file");
            const SeriesDataset dataset = parse_series_csv(series_in);

            current_file = cfg.template_path;
            std::ifstream template_in(cfg.template_path);
            if (!template_in) throw ParseError(0, "cannot open file");
            const Template shape{parse_template_file(template_in)};
            current_file = cfg.input_path;

            Series series;
            series.timestamps.reserve(dataset.stamps.size());
            for (const auto& stamp : dataset.stamps)
                series.timestamps.push_back(
                    static_cast<double>(to_linear(stamp, dataset.resolution)));
            series.values = dataset.values;

            const MatchResult found = find_matches(series, shape, cfg.dtw);
            if (found.template_too_long)
                warnings.push_back("template longer than the series under maximum stretch");

            intervals.resolution = dataset.resolution;
            for (const auto& match : found.matches)
                intervals.intervals.push_back(
                    {dataset.stamps[match.start_index], dataset.stamps[match.end_index]});

            if (!cfg.matches_out_path.empty())
                write_file(cfg.matches_out_path, render_interval_csv(intervals), out);
        }

        const auto reports = mine_periodicities(intervals.intervals, cfg.level,
                                                intervals.resolution, cfg.min_certainty);

        if (!cfg.occurrence_dump_path.empty()) {
            const auto stripped =
                build_stripped_intervals(intervals.intervals, cfg.level, intervals.resolution);
            const auto changes = build_change_records<DiscreteTime>(
                sort_endpoints<DiscreteTime>(stripped));
            const auto knots = build_knot_records<DiscreteTime>(changes);
            const auto maxima = find_local_maxima<DiscreteTime>(knots);
            write_file(cfg.occurrence_dump_path, render_occurrence_dump(changes, knots, maxima),
                       out);
        }

        ReportContext ctx;
        ctx.level = cfg.level;
        ctx.resolution = intervals.resolution;
        ctx.periods = intervals.intervals.empty()
                          ? 0
                          : lifespan_cycles(intervals.intervals, cfg.level, intervals.resolution);
        ctx.min_certainty = cfg.min_certainty;
        ctx.warnings = std::move(warnings);

        write_file(cfg.output_path, render_report(reports, ctx, cfg.format), out);
        return 0;
    } catch (const ParseError& e) {
        err << current_file << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace perimine
