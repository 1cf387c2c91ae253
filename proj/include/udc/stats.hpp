// udc/stats.hpp - per-edition and cross-edition aggregates: main-class
// distributions, special-auxiliary counts per class, common-auxiliary counts
// per kind.
//
// Counting rules:
//   - every classified record lands in exactly one by_main_class bucket
//     (metadata records are not classified and not part of `total`);
//   - a record counts toward special_by_class[c] when its first auxiliary
//     segment is a special kind and its main class is c;
//   - common_by_kind covers the auxiliary tables themselves: records with no
//     main-table part whose first segment is a common kind, plus the
//     metadata records. Pure-auxiliary records with a special first segment
//     are tracked in aux_bucket_special, so
//         sum(common_by_kind) == aux_bucket - aux_bucket_special + metadata.

#pragma once

#include <cstdint>
#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "udc/ingest.hpp"
#include "udc/notation.hpp"

namespace udc {

class EmptyEdition : public Error {
public:
    EmptyEdition() : Error("edition has no classified records") {}
};

class EmptyClass : public Error {
public:
    explicit EmptyClass(const std::string& code)
        : Error("class \"" + code + "\" has no records") {}
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(const std::string& label)
        : Error("duplicate edition label \"" + label + "\"") {}
};

struct EditionStats {
    std::string label;
    std::uint64_t total = 0;  // classified records; metadata excluded
    std::map<std::string, std::uint64_t> by_main_class;
    std::map<std::string, std::uint64_t> special_by_class;
    std::map<AuxKind, std::uint64_t> common_by_kind;
    std::uint64_t aux_bucket = 0;          // records classified "AUX"
    std::uint64_t aux_bucket_special = 0;  // "AUX" records led by a special segment
    std::uint64_t metadata_records = 0;

    bool operator==(const EditionStats&) const = default;
};

inline EditionStats compute_stats(const EditionSnapshot& snapshot,
                                  ClassificationMode mode = ClassificationMode::Standard) {
    EditionStats stats;
    stats.label = snapshot.label();
    for (const EditionRecord& rec : snapshot.records()) {
        if (rec.is_metadata()) {
            ++stats.metadata_records;
            ++stats.common_by_kind[*metadata_kind(rec.notation)];
            continue;
        }
        ++stats.total;
        std::string code = main_class(*rec.expression, mode).code;
        ++stats.by_main_class[code];
        AuxiliaryProfile profile = auxiliary_profile(*rec.expression);
        if (profile.aux_type && is_special(*profile.aux_type))
            ++stats.special_by_class[code];
        if (code == "AUX") {
            ++stats.aux_bucket;
            if (profile.aux_type) {
                if (is_common(*profile.aux_type))
                    ++stats.common_by_kind[*profile.aux_type];
                else
                    ++stats.aux_bucket_special;
            }
        }
    }
    return stats;
}

// Share of one class in the edition, percent, full precision.
inline double class_share(const EditionStats& stats, const std::string& code) {
    if (stats.total == 0) throw EmptyEdition();
    auto it = stats.by_main_class.find(code);
    std::uint64_t count = it == stats.by_main_class.end() ? 0 : it->second;
    return 100.0 * static_cast<double>(count) / static_cast<double>(stats.total);
}

// Percentage of a class's records led by a special auxiliary.
inline double special_aux_pct(const EditionStats& stats, const std::string& code) {
    auto it = stats.by_main_class.find(code);
    if (it == stats.by_main_class.end() || it->second == 0) throw EmptyClass(code);
    auto sp = stats.special_by_class.find(code);
    std::uint64_t special = sp == stats.special_by_class.end() ? 0 : sp->second;
    return 100.0 * static_cast<double>(special) / static_cast<double>(it->second);
}

inline std::uint64_t common_aux_total(const EditionStats& stats) {
    std::uint64_t sum = 0;
    for (const auto& [kind, count] : stats.common_by_kind) sum += count;
    return sum;
}

struct TimeSeries {
    std::vector<EditionStats> editions;  // in the configured edition order

    bool operator==(const TimeSeries&) const = default;
};

inline TimeSeries time_series(const std::vector<EditionSnapshot>& snapshots,
                              ClassificationMode mode = ClassificationMode::Standard) {
    if (snapshots.empty()) throw EmptyEdition();
    TimeSeries series;
    std::map<std::string, bool> labels;
    for (const EditionSnapshot& snap : snapshots) {
        if (!labels.emplace(snap.label(), true).second) throw DuplicateLabel(snap.label());
        series.editions.push_back(compute_stats(snap, mode));
    }
    return series;
}

namespace detail {

inline std::uint64_t map_count(const std::map<std::string, std::uint64_t>& m,
                               const std::string& key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

}  // namespace detail

// Consecutive-edition deltas of one class's special-auxiliary count;
// element i is edition[i+1] minus edition[i].
inline std::vector<std::int64_t> special_deltas(const TimeSeries& series,
                                                const std::string& code) {
    std::vector<std::int64_t> deltas;
    for (std::size_t i = 1; i < series.editions.size(); ++i)
        deltas.push_back(
            static_cast<std::int64_t>(detail::map_count(series.editions[i].special_by_class, code)) -
            static_cast<std::int64_t>(detail::map_count(series.editions[i - 1].special_by_class, code)));
    return deltas;
}

inline std::vector<std::int64_t> class_deltas(const TimeSeries& series,
                                              const std::string& code) {
    std::vector<std::int64_t> deltas;
    for (std::size_t i = 1; i < series.editions.size(); ++i)
        deltas.push_back(
            static_cast<std::int64_t>(detail::map_count(series.editions[i].by_main_class, code)) -
            static_cast<std::int64_t>(detail::map_count(series.editions[i - 1].by_main_class, code)));
    return deltas;
}

// Percentages keep full precision internally; rendering rounds to two
// decimals, locale-independent.
inline std::string format_pct(double value) {
    char buf[48];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 2);
    if (ec != std::errc()) return "?";
    return std::string(buf, end);
}

}  // namespace udc
