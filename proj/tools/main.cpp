#include "perimine/hierarchy.hpp"
#include "perimine/run.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int run_hierarchy(std::int64_t group_size, const std::string& periodicity_text,
                  std::int64_t periods, const std::vector<std::int64_t>& occurrences,
                  const std::string& output_path) {
    using perimine::Rational;
    try {
        const Rational f = Rational::parse(periodicity_text);
        const auto bounds =
            perimine::derived_pattern_bounds({group_size, f, periods});

        std::string text;
        text += "{\n";
        text += "  \"group_size\": " + std::to_string(bounds.count) + ",\n";
        text += "  \"periodicity\": \"" + f.to_string() + "\",\n";
        text += "  \"min_periodicity\": \"" + bounds.min_periodicity.to_string() + "\",\n";
        text += "  \"avg_periodicity\": \"" + bounds.avg_periodicity.to_string() + "\"";
        if (!occurrences.empty()) {
            const auto check =
                perimine::verify_bounds_by_enumeration(group_size, periods, occurrences);
            text += ",\n  \"assignment\": {\n";
            text += "    \"holds\": " + std::string(check.holds ? "true" : "false") + ",\n";
            text += "    \"periodicity\": \"" + check.periodicity.to_string() + "\",\n";
            text += "    \"min_ratio\": \"" + check.min_ratio.to_string() + "\",\n";
            text += "    \"bound\": \"" + check.bound.to_string() + "\",\n";
            text += "    \"argmin\": " + std::to_string(check.argmin) + "\n";
            text += "  }";
        }
        text += "\n}\n";

        if (output_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << output_path << "'\n";
                return 1;
            }
            out << text;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perimine - calendar periodicity miner for interval-based temporal patterns"};
    app.option_defaults()->always_capture_default();

    std::string mode = "intervals";
    std::string level = "yearly";
    std::string min_certainty = "0";
    std::string input_path, template_path, output_path, matches_out, occurrence_dump;
    std::string format = "json";
    int dtw_window = 1;
    double dtw_threshold = 0.0;
    double stretch = 1.5;
    bool dtw_znorm = false;
    bool dtw_squared = false;

    app.add_option("--mode", mode, "intervals | series")
        ->check(CLI::IsMember({"intervals", "series"}));
    app.add_option("--level", level, "yearly | monthly | daily | hourly")
        ->check(CLI::IsMember({"yearly", "monthly", "daily", "hourly"}));
    app.add_option("--min-certainty", min_certainty,
                   "drop hills below this certainty (rational or decimal)");
    app.add_option("--input", input_path, "interval CSV (intervals mode) or series CSV (series mode)");
    app.add_option("--template", template_path, "shape template, one value per line");
    auto* window_opt = app.add_option("--dtw-window", dtw_window, "warping window size");
    auto* threshold_opt =
        app.add_option("--dtw-threshold", dtw_threshold, "max normalized distance for a match");
    app.add_option("--stretch", stretch, "candidate length stretch factor");
    app.add_flag("--dtw-znorm", dtw_znorm, "z-normalize candidate windows and template");
    app.add_flag("--dtw-squared", dtw_squared, "use squared difference as the point distance");
    app.add_option("--output", output_path, "report file (stdout when omitted)");
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--matches-out", matches_out, "write extracted intervals as CSV (series mode)");
    app.add_option("--dump-occurrence", occurrence_dump,
                   "write stripped-axis change/knot/maxima arrays as JSON");

    auto* hier = app.add_subcommand("hierarchy",
                                    "bounds on the periodicities induced at a coarser level");
    std::int64_t hier_p = 1, hier_mj = 1;
    std::string hier_f = "1";
    std::vector<std::int64_t> hier_occurrences;
    std::string hier_output;
    hier->add_option("--p", hier_p, "fine-level combinations per coarse value")->required();
    hier->add_option("--f", hier_f, "fine-level periodicity (rational or decimal)")->required();
    hier->add_option("--mj", hier_mj, "coarse periods in the lifespan")->required();
    hier->add_option("--occurrences", hier_occurrences,
                     "per-group occurrence counts to check against the bounds")
        ->delimiter(',');
    hier->add_option("--output", hier_output, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (hier->parsed())
        return run_hierarchy(hier_p, hier_f, hier_mj, hier_occurrences, hier_output);

    perimine::RunConfig cfg;
    cfg.mode = mode == "series" ? perimine::RunMode::SeriesWithTemplate
                                : perimine::RunMode::Intervals;
    if (level == "yearly") cfg.level = perimine::PeriodLevel::Yearly;
    if (level == "monthly") cfg.level = perimine::PeriodLevel::Monthly;
    if (level == "daily") cfg.level = perimine::PeriodLevel::Daily;
    if (level == "hourly") cfg.level = perimine::PeriodLevel::Hourly;
    cfg.format = format == "csv" ? perimine::OutputFormat::Csv : perimine::OutputFormat::Json;

    try {
        cfg.min_certainty = perimine::Rational::parse(min_certainty);
    } catch (const std::exception& e) {
        std::cerr << "error: --min-certainty: " << e.what() << "\n";
        return 1;
    }

    if (cfg.mode == perimine::RunMode::SeriesWithTemplate) {
        if (window_opt->count() == 0 || threshold_opt->count() == 0) {
            std::cerr << "error: series mode needs explicit --dtw-window and --dtw-threshold\n";
            return 1;
        }
    }

    cfg.dtw.window = dtw_window;
    cfg.dtw.threshold = dtw_threshold;
    cfg.dtw.stretch = stretch;
    cfg.dtw.z_normalize = dtw_znorm;
    cfg.dtw.delta = dtw_squared ? perimine::DeltaKind::SquaredDifference
                                : perimine::DeltaKind::AbsoluteDifference;
    cfg.input_path = input_path;
    cfg.template_path = template_path;
    cfg.output_path = output_path;
    cfg.matches_out_path = matches_out;
    cfg.occurrence_dump_path = occurrence_dump;

    return perimine::run(cfg, std::cout, std::cerr);
}
