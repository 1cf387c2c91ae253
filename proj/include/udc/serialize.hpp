// udc/serialize.hpp - JSON and TSV emitters for statistics, edition deltas,
// and lineages, plus the inverse for statistics (needed to re-chart saved
// runs). JSON uses insertion-ordered objects so output is byte-stable.

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "udc/notation.hpp"
#include "udc/ontogeny.hpp"
#include "udc/stats.hpp"

namespace udc {

using json = nlohmann::ordered_json;

// ---- statistics ------------------------------------------------------------

inline json stats_to_json(const EditionStats& stats) {
    json j;
    j["label"] = stats.label;
    j["total"] = stats.total;
    j["metadata_records"] = stats.metadata_records;
    j["aux_bucket"] = stats.aux_bucket;
    j["aux_bucket_special"] = stats.aux_bucket_special;
    json classes = json::object();
    for (const auto& [code, count] : stats.by_main_class) classes[code] = count;
    j["by_main_class"] = std::move(classes);
    json specials = json::object();
    for (const auto& [code, count] : stats.special_by_class) specials[code] = count;
    j["special_by_class"] = std::move(specials);
    json commons = json::object();
    for (const auto& [kind, count] : stats.common_by_kind)
        commons[std::string(aux_kind_name(kind))] = count;
    j["common_by_kind"] = std::move(commons);
    return j;
}

inline EditionStats stats_from_json(const json& j) {
    EditionStats stats;
    stats.label = j.at("label").get<std::string>();
    stats.total = j.at("total").get<std::uint64_t>();
    stats.metadata_records = j.value("metadata_records", std::uint64_t{0});
    stats.aux_bucket = j.value("aux_bucket", std::uint64_t{0});
    stats.aux_bucket_special = j.value("aux_bucket_special", std::uint64_t{0});
    if (j.contains("by_main_class"))
        for (const auto& [code, count] : j.at("by_main_class").items())
            stats.by_main_class[code] = count.get<std::uint64_t>();
    if (j.contains("special_by_class"))
        for (const auto& [code, count] : j.at("special_by_class").items())
            stats.special_by_class[code] = count.get<std::uint64_t>();
    if (j.contains("common_by_kind"))
        for (const auto& [name, count] : j.at("common_by_kind").items()) {
            auto kind = aux_kind_from_name(name);
            if (!kind) throw Error("unknown auxiliary kind \"" + name + "\" in statistics JSON");
            stats.common_by_kind[*kind] = count.get<std::uint64_t>();
        }
    return stats;
}

inline json series_to_json(const TimeSeries& series) {
    json arr = json::array();
    for (const EditionStats& stats : series.editions) arr.push_back(stats_to_json(stats));
    json j;
    j["editions"] = std::move(arr);
    return j;
}

inline TimeSeries series_from_json(const json& j) {
    TimeSeries series;
    for (const auto& entry : j.at("editions")) series.editions.push_back(stats_from_json(entry));
    return series;
}

// Row shape: section <TAB> key <TAB> count. An optional leading label column
// is prepended when several editions share one table.
inline void stats_to_tsv(const EditionStats& stats, std::ostream& out,
                         bool label_column = false, bool header = true) {
    std::string prefix = label_column ? stats.label + "\t" : "";
    if (header) out << (label_column ? "label\tsection\tkey\tcount\n" : "section\tkey\tcount\n");
    out << prefix << "total\t\t" << stats.total << "\n";
    out << prefix << "metadata\t\t" << stats.metadata_records << "\n";
    for (const auto& [code, count] : stats.by_main_class)
        out << prefix << "class\t" << code << "\t" << count << "\n";
    for (const auto& [code, count] : stats.special_by_class)
        out << prefix << "special\t" << code << "\t" << count << "\n";
    for (const auto& [kind, count] : stats.common_by_kind)
        out << prefix << "common\t" << aux_kind_name(kind) << "\t" << count << "\n";
}

inline void series_to_tsv(const TimeSeries& series, std::ostream& out) {
    bool first = true;
    for (const EditionStats& stats : series.editions) {
        stats_to_tsv(stats, out, /*label_column=*/true, /*header=*/first);
        first = false;
    }
}

// ---- edition deltas --------------------------------------------------------

inline json delta_to_json(const EditionDelta& delta) {
    json j;
    j["from"] = delta.from_label;
    j["to"] = delta.to_label;
    j["stable"] = delta.stable_count;
    j["entered"] = delta.entered;
    j["exited"] = delta.exited;
    json changed = json::array();
    for (const DescriptionChange& c : delta.description_changed) {
        json e;
        e["notation"] = c.notation;
        e["old_description"] = c.old_description;
        e["new_description"] = c.new_description;
        changed.push_back(std::move(e));
    }
    j["description_changed"] = std::move(changed);
    json shifted = json::array();
    for (const ShiftedEntry& s : delta.shifted) {
        json e;
        e["old_notation"] = s.old_notation;
        e["new_notation"] = s.new_notation;
        e["description"] = s.description;
        e["old_class"] = s.old_class;
        e["new_class"] = s.new_class;
        shifted.push_back(std::move(e));
    }
    j["shifted"] = std::move(shifted);
    json ambiguous = json::array();
    for (const AmbiguousShift& a : delta.ambiguous) {
        json e;
        e["description"] = a.description;
        e["old_notations"] = a.old_notations;
        e["new_notations"] = a.new_notations;
        ambiguous.push_back(std::move(e));
    }
    j["ambiguous"] = std::move(ambiguous);
    return j;
}

inline void delta_to_text(const EditionDelta& delta, std::ostream& out) {
    out << "delta " << delta.from_label << " -> " << delta.to_label << "\n"
        << "  stable:              " << delta.stable_count << "\n"
        << "  entered:             " << delta.entered.size() << "\n"
        << "  exited:              " << delta.exited.size() << "\n"
        << "  description changed: " << delta.description_changed.size() << "\n"
        << "  shifted:             " << delta.shifted.size() << "\n"
        << "  ambiguous:           " << delta.ambiguous.size() << "\n";
    for (const std::string& n : delta.entered) out << "  + " << n << "\n";
    for (const std::string& n : delta.exited) out << "  - " << n << "\n";
    for (const DescriptionChange& c : delta.description_changed)
        out << "  ~ " << c.notation << ": \"" << c.old_description << "\" -> \""
            << c.new_description << "\"\n";
    for (const ShiftedEntry& s : delta.shifted)
        out << "  > " << s.old_notation << " -> " << s.new_notation << " (" << s.description
            << ")\n";
    for (const AmbiguousShift& a : delta.ambiguous) {
        out << "  ? \"" << a.description << "\":";
        for (const std::string& n : a.old_notations) out << " " << n;
        out << " ->";
        for (const std::string& n : a.new_notations) out << " " << n;
        out << "\n";
    }
}

// ---- lineage ---------------------------------------------------------------

inline json lineage_to_json(const Lineage& lineage) {
    json j;
    j["notation"] = lineage.notation;
    j["never_present"] = lineage.never_present;
    json states = json::array();
    for (const LineageState& state : lineage.states) {
        json e;
        e["edition"] = state.edition_label;
        e["present"] = state.present();
        if (state.description) e["description"] = *state.description;
        states.push_back(std::move(e));
    }
    j["states"] = std::move(states);
    json events = json::array();
    for (const LineageEvent& event : lineage.events) {
        json e;
        e["kind"] = std::string(lineage_event_name(event.kind));
        e["edition"] = event.edition_label;
        events.push_back(std::move(e));
    }
    j["events"] = std::move(events);
    return j;
}

inline void lineage_to_text(const Lineage& lineage, std::ostream& out) {
    out << "lineage of " << lineage.notation << "\n";
    if (lineage.never_present) out << "  (not present in any edition)\n";
    for (const LineageState& state : lineage.states) {
        out << "  " << state.edition_label << ": ";
        if (state.present())
            out << "\"" << *state.description << "\"";
        else
            out << "absent";
        out << "\n";
    }
    for (const LineageEvent& event : lineage.events)
        out << "  * " << lineage_event_name(event.kind) << " in " << event.edition_label << "\n";
}

}  // namespace udc
