// udc - command-line front end: parse notations, convert edition files,
// compute statistics, diff editions, trace notation lineage, draw charts.
//
// Exit codes: 0 success, 1 validation/data error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "udc/udc.hpp"

namespace {

struct Style {
    bool on = false;
    const char* bold() const { return on ? "\033[1m" : ""; }
    const char* dim() const { return on ? "\033[2m" : ""; }
    const char* red() const { return on ? "\033[31m" : ""; }
    const char* reset() const { return on ? "\033[0m" : ""; }
};

Style detect_style() {
    Style s;
    s.on = ::isatty(::fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
    return s;
}

udc::ClassificationMode mode_from(const std::string& name) {
    if (name == "standard") return udc::ClassificationMode::Standard;
    if (name == "01main") return udc::ClassificationMode::Treat01AsMain;
    throw udc::Error("unknown mode \"" + name + "\" (expected standard or 01main)");
}

udc::EditionFormat format_from(const std::string& name) {
    if (name == "tsv") return udc::EditionFormat::CanonicalTsv;
    if (name == "flat") return udc::EditionFormat::FlatText;
    throw udc::Error("unknown format \"" + name + "\" (expected tsv or flat)");
}

udc::EditionSnapshot load_or_die(const std::string& path, udc::EditionFormat format,
                                 bool strict, bool quiet) {
    auto [snapshot, report] = udc::load_edition(path, format, "", strict);
    if (!quiet) {
        for (const auto& [line, reason] : report.rejected)
            std::cerr << path << ":" << line << ": rejected: " << reason << "\n";
        for (const auto& [line, message] : report.warnings)
            std::cerr << path << ":" << line << ": warning: " << message << "\n";
    }
    return snapshot;
}

void print_parse_breakdown(const std::string& input, udc::ClassificationMode mode,
                           const Style& style) {
    udc::UdcExpression expr = udc::parse(input);
    if (auto reason = udc::invalid_reason(expr))
        throw udc::Error("invalid notation: " + *reason);
    std::string canonical = udc::render(expr);
    udc::MainClassLabel cls = udc::main_class(expr, mode);
    udc::AuxiliaryProfile profile = udc::auxiliary_profile(expr);

    std::cout << style.bold() << "canonical:  " << style.reset() << canonical << "\n";
    std::cout << style.bold() << "main class: " << style.reset() << cls.code << " ("
              << cls.display_name << ")\n";
    std::cout << style.bold() << "aux type:   " << style.reset()
              << (profile.aux_type ? std::string(udc::aux_kind_name(*profile.aux_type)) : "-")
              << "\n";
    std::cout << style.bold() << "aux part:   " << style.reset()
              << (profile.aux_part ? *profile.aux_part : "-") << "\n";
    std::cout << style.bold() << "structure:" << style.reset() << "\n";
    for (std::size_t i = 0; i < expr.terms.size(); ++i) {
        if (i > 0)
            std::cout << "  connector " << udc::connector_symbol(expr.connectors[i - 1]) << "\n";
        const udc::Term& term = expr.terms[i];
        std::cout << "  term " << (i + 1) << ": " << udc::render(term) << "\n";
        if (!term.bracket.empty())
            std::cout << "    bracket: [" << udc::render(term.bracket.front()) << "]\n";
        if (term.main) std::cout << "    main number: " << udc::render(*term.main) << "\n";
        for (const udc::AuxSegment& seg : term.auxiliaries)
            std::cout << "    " << udc::aux_kind_name(seg.kind) << ": " << seg.raw << "\n";
    }
}

void print_stats_text(const udc::EditionStats& stats, const Style& style) {
    std::cout << style.bold() << "edition " << stats.label << style.reset() << ": " << stats.total
              << " records";
    if (stats.metadata_records > 0) std::cout << " + " << stats.metadata_records << " metadata";
    std::cout << "\n";
    std::cout << "  class  count      share%   special    special%\n";
    for (const auto& [code, count] : stats.by_main_class) {
        std::uint64_t special = 0;
        if (auto it = stats.special_by_class.find(code); it != stats.special_by_class.end())
            special = it->second;
        std::string share = udc::format_pct(udc::class_share(stats, code));
        std::string special_pct =
            count > 0 ? udc::format_pct(udc::special_aux_pct(stats, code)) : "-";
        std::cout << "  " << code << std::string(code.size() < 7 ? 7 - code.size() : 1, ' ');
        std::string c = std::to_string(count);
        std::cout << c << std::string(c.size() < 11 ? 11 - c.size() : 1, ' ');
        std::cout << share << std::string(share.size() < 9 ? 9 - share.size() : 1, ' ');
        std::string sp = std::to_string(special);
        std::cout << sp << std::string(sp.size() < 11 ? 11 - sp.size() : 1, ' ');
        std::cout << special_pct << "\n";
    }
    std::cout << "  common auxiliaries: " << udc::common_aux_total(stats) << "\n";
    for (const auto& [kind, count] : stats.common_by_kind)
        std::cout << "    " << udc::aux_kind_name(kind) << ": " << count << "\n";
}

std::vector<udc::EditionStats> read_stats_files(const std::vector<std::string>& paths) {
    std::vector<udc::EditionStats> all;
    for (const std::string& path : paths) {
        std::ifstream in(path);
        if (!in) throw udc::IoError("cannot open " + path);
        udc::json j = udc::json::parse(in, nullptr, true, true);
        if (j.contains("editions"))
            for (const auto& entry : j.at("editions")) all.push_back(udc::stats_from_json(entry));
        else
            all.push_back(udc::stats_from_json(j));
    }
    return all;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw udc::IoError("cannot open " + path + " for writing");
    return out;
}

// Chart data selectors over saved statistics.
std::map<std::string, std::uint64_t> counts_for(const udc::EditionStats& stats,
                                                const std::string& data) {
    if (data == "main") return stats.by_main_class;
    if (data == "special") return stats.special_by_class;
    if (data == "common") {
        std::map<std::string, std::uint64_t> counts;
        for (const auto& [kind, count] : stats.common_by_kind)
            counts[std::string(udc::aux_kind_name(kind))] = count;
        return counts;
    }
    throw udc::Error("data selector \"" + data + "\" is not count-shaped");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decimal classification notation toolkit: parse, ingest, compare, chart"};
    app.require_subcommand(1);
    Style style = detect_style();

    std::string mode_name = "standard";
    std::string format_name = "tsv";
    bool strict = false;
    app.add_option("--mode", mode_name, "classification mode: standard or 01main")
        ->check(CLI::IsMember({"standard", "01main"}));
    app.add_option("--format", format_name, "edition file format: tsv or flat")
        ->check(CLI::IsMember({"tsv", "flat"}));
    app.add_flag("--strict", strict, "abort on the first rejected input line");

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "parse one notation and print its structure");
    std::string parse_input;
    cmd_parse->add_option("notation", parse_input, "notation to parse")->required();

    // convert
    auto* cmd_convert = app.add_subcommand("convert", "load an edition and export the analysis table");
    std::string convert_in, convert_out;
    cmd_convert->add_option("input", convert_in, "edition file")->required();
    cmd_convert->add_option("-o,--output", convert_out, "output TSV path")->required();

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "per-edition statistics");
    std::vector<std::string> stats_inputs;
    bool stats_json = false, stats_tsv = false;
    cmd_stats->add_option("editions", stats_inputs, "edition files")->required();
    cmd_stats->add_flag("--json", stats_json, "emit JSON");
    cmd_stats->add_flag("--tsv", stats_tsv, "emit TSV");

    // diff
    auto* cmd_diff = app.add_subcommand("diff", "compare two editions");
    std::string diff_a, diff_b;
    bool diff_json = false;
    cmd_diff->add_option("a", diff_a, "older edition file")->required();
    cmd_diff->add_option("b", diff_b, "newer edition file")->required();
    cmd_diff->add_flag("--json", diff_json, "emit JSON");

    // history
    auto* cmd_history = app.add_subcommand("history", "trace one notation across editions");
    std::string history_notation;
    std::vector<std::string> history_inputs;
    bool history_json = false;
    cmd_history->add_option("notation", history_notation, "notation to trace")->required();
    cmd_history->add_option("editions", history_inputs, "edition files, oldest first")->required();
    cmd_history->add_flag("--json", history_json, "emit JSON");

    // chart
    auto* cmd_chart = app.add_subcommand("chart", "render statistics as SVG");
    std::string chart_kind, chart_data = "main", chart_out;
    std::vector<std::string> chart_inputs;
    int chart_size = 480;
    cmd_chart->add_option("kind", chart_kind, "chart kind: ring or series")
        ->required()
        ->check(CLI::IsMember({"ring", "series"}));
    cmd_chart->add_option("stats", chart_inputs, "stats JSON files (from `stats --json`)")
        ->required();
    cmd_chart->add_option("-o,--output", chart_out, "output SVG path")->required();
    cmd_chart->add_option("--data", chart_data, "main, special, special-pct, or common")
        ->check(CLI::IsMember({"main", "special", "special-pct", "common"}));
    cmd_chart->add_option("--size", chart_size, "ring chart size in pixels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        udc::ClassificationMode mode = mode_from(mode_name);
        udc::EditionFormat format = format_from(format_name);

        if (app.got_subcommand(cmd_parse)) {
            print_parse_breakdown(parse_input, mode, style);
        } else if (app.got_subcommand(cmd_convert)) {
            udc::EditionSnapshot snapshot = load_or_die(convert_in, format, strict, false);
            auto out = open_output(convert_out);
            udc::export_tabular(snapshot, mode, out);
            std::cerr << "wrote " << snapshot.size() << " rows to " << convert_out << "\n";
        } else if (app.got_subcommand(cmd_stats)) {
            if (stats_json && stats_tsv) {
                std::cerr << "error: --json and --tsv are mutually exclusive\n";
                return 2;
            }
            std::vector<udc::EditionSnapshot> snapshots;
            for (const std::string& path : stats_inputs)
                snapshots.push_back(load_or_die(path, format, strict, false));
            udc::TimeSeries series = udc::time_series(snapshots, mode);
            if (stats_json) {
                if (series.editions.size() == 1)
                    std::cout << udc::stats_to_json(series.editions.front()).dump(2) << "\n";
                else
                    std::cout << udc::series_to_json(series).dump(2) << "\n";
            } else if (stats_tsv) {
                if (series.editions.size() == 1)
                    udc::stats_to_tsv(series.editions.front(), std::cout);
                else
                    udc::series_to_tsv(series, std::cout);
            } else {
                for (std::size_t i = 0; i < series.editions.size(); ++i) {
                    if (i > 0) std::cout << "\n";
                    print_stats_text(series.editions[i], style);
                }
            }
        } else if (app.got_subcommand(cmd_diff)) {
            udc::EditionSnapshot a = load_or_die(diff_a, format, strict, false);
            udc::EditionSnapshot b = load_or_die(diff_b, format, strict, false);
            udc::EditionDelta delta = udc::diff(a, b);
            if (diff_json) {
                std::cout << udc::delta_to_json(delta).dump(2) << "\n";
            } else if (delta.empty()) {
                std::cout << "no changes\n";
            } else {
                udc::delta_to_text(delta, std::cout);
            }
        } else if (app.got_subcommand(cmd_history)) {
            std::vector<udc::EditionSnapshot> snapshots;
            for (const std::string& path : history_inputs)
                snapshots.push_back(load_or_die(path, format, strict, false));
            udc::Lineage lineage = udc::history(history_notation, snapshots);
            if (history_json)
                std::cout << udc::lineage_to_json(lineage).dump(2) << "\n";
            else
                udc::lineage_to_text(lineage, std::cout);
            if (lineage.never_present)
                std::cerr << "warning: " << lineage.notation
                          << " is not present in any edition\n";
        } else if (app.got_subcommand(cmd_chart)) {
            std::vector<udc::EditionStats> all = read_stats_files(chart_inputs);
            if (all.empty()) throw udc::Error("no statistics provided");
            auto out = open_output(chart_out);
            if (chart_kind == "ring") {
                if (chart_data == "special-pct") {
                    std::cerr << "error: ring charts plot counts; use --data main, special, or common\n";
                    return 2;
                }
                udc::RingChartSpec spec;
                spec.palette = udc::default_palette();
                spec.size = chart_size;
                for (const udc::EditionStats& stats : all)
                    spec.rings.push_back({stats.label, counts_for(stats, chart_data)});
                udc::emit_ring_svg(spec, out);
            } else {
                udc::SeriesChartSpec spec;
                spec.palette = udc::default_palette();
                for (const udc::EditionStats& stats : all) spec.x_labels.push_back(stats.label);
                if (chart_data == "special-pct") {
                    spec.value_kind = udc::SeriesChartSpec::ValueKind::Percentage;
                    for (const udc::EditionStats& stats : all)
                        for (const auto& [code, count] : stats.by_main_class)
                            if (count > 0) spec.series[code];  // register key
                    for (auto& [code, values] : spec.series)
                        for (const udc::EditionStats& stats : all) {
                            auto it = stats.by_main_class.find(code);
                            values.push_back(it != stats.by_main_class.end() && it->second > 0
                                                 ? udc::special_aux_pct(stats, code)
                                                 : 0.0);
                        }
                } else {
                    spec.value_kind = udc::SeriesChartSpec::ValueKind::Count;
                    for (const udc::EditionStats& stats : all)
                        for (const auto& [key, count] : counts_for(stats, chart_data))
                            spec.series[key];  // register key
                    for (auto& [key, values] : spec.series)
                        for (const udc::EditionStats& stats : all) {
                            auto counts = counts_for(stats, chart_data);
                            auto it = counts.find(key);
                            values.push_back(
                                it != counts.end() ? static_cast<double>(it->second) : 0.0);
                        }
                }
                udc::emit_series_svg(spec, out);
            }
            std::cerr << "wrote " << chart_out << "\n";
        }
    } catch (const udc::Error& e) {
        std::cerr << style.red() << "error: " << style.reset() << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << style.red() << "error: " << style.reset() << e.what() << "\n";
        return 1;
    }
    return 0;
}
