// udc/ontogeny.hpp - edition diffing and per-notation lineage.
//
// A record's identity across editions is its canonical notation. A "shift"
// is a description that moves from one notation to another between two
// editions; shifts are detected by exact equality of normalized descriptions
// and only when the pairing is unambiguous on both sides. Ambiguous
// candidates are reported, never guessed, and records with empty
// descriptions never pair.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "udc/ingest.hpp"
#include "udc/notation.hpp"
#include "udc/stats.hpp"
#include "udc/text.hpp"

namespace udc {

struct DescriptionChange {
    std::string notation;
    std::string old_description;
    std::string new_description;

    bool operator==(const DescriptionChange&) const = default;
};

struct ShiftedEntry {
    std::string old_notation;
    std::string new_notation;
    std::string description;  // normalized shared description
    std::string old_class;    // main class of old_notation, standard mode
    std::string new_class;

    bool operator==(const ShiftedEntry&) const = default;
};

struct AmbiguousShift {
    std::string description;  // normalized
    std::vector<std::string> old_notations;
    std::vector<std::string> new_notations;

    bool operator==(const AmbiguousShift&) const = default;
};

struct EditionDelta {
    std::string from_label;
    std::string to_label;
    std::vector<std::string> entered;  // sorted canonical notations
    std::vector<std::string> exited;
    std::vector<DescriptionChange> description_changed;  // sorted by notation
    std::vector<ShiftedEntry> shifted;                   // annotates entered/exited pairs
    std::vector<AmbiguousShift> ambiguous;
    std::size_t stable_count = 0;

    bool empty() const {
        return entered.empty() && exited.empty() && description_changed.empty();
    }

    bool operator==(const EditionDelta&) const = default;
};

struct ShiftReport {
    std::vector<ShiftedEntry> shifted;
    std::vector<AmbiguousShift> ambiguous;
};

// Pairs exited and entered records whose normalized descriptions are exactly
// equal; a description matching several candidates on either side yields no
// pair and one ambiguity entry. The result is an injective partial matching.
inline ShiftReport detect_shifts(const std::vector<const EditionRecord*>& exited,
                                 const std::vector<const EditionRecord*>& entered) {
    struct Bucket {
        std::vector<const EditionRecord*> old_side, new_side;
    };
    std::map<std::string, Bucket> by_description;
    for (const EditionRecord* rec : exited) {
        if (rec->is_metadata()) continue;
        std::string key = normalize_description(rec->description);
        if (!key.empty()) by_description[key].old_side.push_back(rec);
    }
    for (const EditionRecord* rec : entered) {
        if (rec->is_metadata()) continue;
        std::string key = normalize_description(rec->description);
        if (!key.empty()) by_description[key].new_side.push_back(rec);
    }

    ShiftReport report;
    for (const auto& [description, bucket] : by_description) {
        if (bucket.old_side.empty() || bucket.new_side.empty()) continue;
        if (bucket.old_side.size() == 1 && bucket.new_side.size() == 1) {
            const EditionRecord* o = bucket.old_side.front();
            const EditionRecord* n = bucket.new_side.front();
            report.shifted.push_back(ShiftedEntry{
                o->notation, n->notation, description,
                main_class(*o->expression).code, main_class(*n->expression).code});
        } else {
            AmbiguousShift amb;
            amb.description = description;
            for (const EditionRecord* r : bucket.old_side) amb.old_notations.push_back(r->notation);
            for (const EditionRecord* r : bucket.new_side) amb.new_notations.push_back(r->notation);
            std::sort(amb.old_notations.begin(), amb.old_notations.end());
            std::sort(amb.new_notations.begin(), amb.new_notations.end());
            report.ambiguous.push_back(std::move(amb));
        }
    }
    std::sort(report.shifted.begin(), report.shifted.end(),
              [](const ShiftedEntry& a, const ShiftedEntry& b) {
                  return a.old_notation < b.old_notation;
              });
    return report;
}

// Compares two editions key by key. Every notation of either edition falls
// into exactly one of: stable, entered, exited, description-changed; shifted
// pairs annotate entered/exited entries without removing them.
inline EditionDelta diff(const EditionSnapshot& a, const EditionSnapshot& b) {
    EditionDelta delta;
    delta.from_label = a.label();
    delta.to_label = b.label();

    std::vector<const EditionRecord*> exited_records, entered_records;
    const auto& ra = a.records();
    const auto& rb = b.records();
    std::size_t i = 0, j = 0;
    while (i < ra.size() || j < rb.size()) {
        if (j == rb.size() || (i < ra.size() && ra[i].notation < rb[j].notation)) {
            delta.exited.push_back(ra[i].notation);
            exited_records.push_back(&ra[i]);
            ++i;
        } else if (i == ra.size() || rb[j].notation < ra[i].notation) {
            delta.entered.push_back(rb[j].notation);
            entered_records.push_back(&rb[j]);
            ++j;
        } else {
            if (normalize_description(ra[i].description) !=
                normalize_description(rb[j].description))
                delta.description_changed.push_back(
                    DescriptionChange{ra[i].notation, ra[i].description, rb[j].description});
            else
                ++delta.stable_count;
            ++i;
            ++j;
        }
    }

    ShiftReport shifts = detect_shifts(exited_records, entered_records);
    delta.shifted = std::move(shifts.shifted);
    delta.ambiguous = std::move(shifts.ambiguous);
    return delta;
}

enum class LineageEventKind { Appeared, Disappeared, Redescribed };

inline std::string_view lineage_event_name(LineageEventKind kind) {
    switch (kind) {
        case LineageEventKind::Appeared: return "Appeared";
        case LineageEventKind::Disappeared: return "Disappeared";
        case LineageEventKind::Redescribed: return "Redescribed";
    }
    return "?";
}

struct LineageState {
    std::string edition_label;
    std::optional<std::string> description;  // absent when not in the edition

    bool present() const { return description.has_value(); }
    bool operator==(const LineageState&) const = default;
};

struct LineageEvent {
    LineageEventKind kind;
    std::string edition_label;  // edition at which the transition shows

    bool operator==(const LineageEvent&) const = default;
};

struct Lineage {
    std::string notation;  // canonical
    std::vector<LineageState> states;  // one per edition, series order
    std::vector<LineageEvent> events;
    bool never_present = false;

    bool operator==(const Lineage&) const = default;
};

// Trajectory of one notation across an ordered edition series. A notation
// absent everywhere still yields an all-absent lineage, flagged; only an
// unparseable notation is an error.
inline Lineage history(std::string_view notation,
                       const std::vector<EditionSnapshot>& series) {
    if (series.empty()) throw EmptyEdition();
    Lineage lineage;
    lineage.notation = metadata_kind(notation) ? std::string(notation)
                                               : render(parse(notation));
    for (const EditionSnapshot& snap : series) {
        const EditionRecord* rec = snap.find(lineage.notation);
        lineage.states.push_back(LineageState{
            snap.label(), rec ? std::optional<std::string>(rec->description) : std::nullopt});
    }
    for (std::size_t i = 1; i < lineage.states.size(); ++i) {
        const LineageState& prev = lineage.states[i - 1];
        const LineageState& cur = lineage.states[i];
        if (!prev.present() && cur.present())
            lineage.events.push_back({LineageEventKind::Appeared, cur.edition_label});
        else if (prev.present() && !cur.present())
            lineage.events.push_back({LineageEventKind::Disappeared, cur.edition_label});
        else if (prev.present() && cur.present() &&
                 normalize_description(*prev.description) != normalize_description(*cur.description))
            lineage.events.push_back({LineageEventKind::Redescribed, cur.edition_label});
    }
    lineage.never_present = std::none_of(lineage.states.begin(), lineage.states.end(),
                                         [](const LineageState& s) { return s.present(); });
    return lineage;
}

}  // namespace udc
