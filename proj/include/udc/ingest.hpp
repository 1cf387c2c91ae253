// udc/ingest.hpp - loading scheme editions from flat files into validated
// snapshots, and exporting the derived analysis table.
//
// Two file formats are supported:
//
//   CanonicalTsv   UTF-8, LF line endings. "#" starts a comment line;
//                  "#label:<edition>" names the edition. Data lines are
//                  "notation<TAB>description". A leading "notation<TAB>..."
//                  header line (as written by export_tabular) is skipped,
//                  and columns beyond the second are ignored, so exported
//                  tables load straight back.
//
//   FlatText       UTF-8, lenient. Each record is "notation<2 spaces>
//                  description"; surrounding whitespace is ignored. "#"
//                  comment lines are allowed here too.
//
// Three reserved notation tokens, "~a", "~b" and "~h", denote the scheme's
// metadata records: the two combination-sign records and the non-UDC source
// record. They carry a description but no parseable notation.

#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udc/notation.hpp"
#include "udc/text.hpp"

namespace udc {

enum class EditionFormat { CanonicalTsv, FlatText };

class IoError : public Error {
public:
    using Error::Error;
};

class IngestError : public Error {
public:
    IngestError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateNotation : public IngestError {
public:
    DuplicateNotation(std::string notation, std::size_t first_line, std::size_t line)
        : IngestError(line, "duplicate notation \"" + notation + "\" first seen at line " +
                                std::to_string(first_line)),
          notation_(std::move(notation)),
          first_line_(first_line) {}

    const std::string& notation() const noexcept { return notation_; }
    std::size_t first_line() const noexcept { return first_line_; }

private:
    std::string notation_;
    std::size_t first_line_;
};

// Metadata kind for a reserved token, or nothing for ordinary notation.
inline std::optional<AuxKind> metadata_kind(std::string_view notation) {
    if (notation == "~a" || notation == "~b") return AuxKind::CommonCoordination;
    if (notation == "~h") return AuxKind::CommonNonUdc;
    return std::nullopt;
}

struct EditionRecord {
    std::string notation;  // canonical form; reserved token for metadata records
    std::string description;
    std::optional<UdcExpression> expression;  // absent for metadata records
    std::size_t source_line = 0;

    bool is_metadata() const { return !expression.has_value(); }
};

struct IngestReport {
    std::size_t accepted = 0;
    std::vector<std::pair<std::size_t, std::string>> rejected;  // (line, reason)
    std::vector<std::pair<std::size_t, std::string>> warnings;  // (line, message)
};

// A complete edition keyed by canonical notation. Immutable once built;
// records are held sorted by notation and the index maps notation to the
// record's position.
class EditionSnapshot {
public:
    EditionSnapshot() = default;

    // Sorts, indexes, and enforces notation uniqueness.
    static EditionSnapshot build(std::string label, std::vector<EditionRecord> records) {
        std::sort(records.begin(), records.end(),
                  [](const EditionRecord& a, const EditionRecord& b) {
                      return a.notation < b.notation;
                  });
        for (std::size_t i = 1; i < records.size(); ++i)
            if (records[i].notation == records[i - 1].notation)
                throw DuplicateNotation(records[i].notation, records[i - 1].source_line,
                                        records[i].source_line);
        EditionSnapshot s;
        s.label_ = std::move(label);
        s.records_ = std::move(records);
        for (std::size_t i = 0; i < s.records_.size(); ++i)
            s.index_.emplace(s.records_[i].notation, i);
        return s;
    }

    // Assembles a snapshot from already-prepared parts without any checking.
    // Intended for deserializers and tests; validate() re-checks the result.
    static EditionSnapshot from_parts(std::string label, std::vector<EditionRecord> records,
                                      std::map<std::string, std::size_t> index) {
        EditionSnapshot s;
        s.label_ = std::move(label);
        s.records_ = std::move(records);
        s.index_ = std::move(index);
        return s;
    }

    const std::string& label() const noexcept { return label_; }
    const std::vector<EditionRecord>& records() const noexcept { return records_; }
    const std::map<std::string, std::size_t>& index() const noexcept { return index_; }
    std::size_t size() const noexcept { return records_.size(); }

    const EditionRecord* find(std::string_view notation) const {
        auto it = index_.find(std::string(notation));
        return it == index_.end() ? nullptr : &records_[it->second];
    }

    // Snapshots are equal when they hold the same label and the same
    // notation/description pairs; source line numbers do not matter.
    friend bool operator==(const EditionSnapshot& a, const EditionSnapshot& b) {
        if (a.label_ != b.label_ || a.records_.size() != b.records_.size()) return false;
        for (std::size_t i = 0; i < a.records_.size(); ++i)
            if (a.records_[i].notation != b.records_[i].notation ||
                a.records_[i].description != b.records_[i].description)
                return false;
        return true;
    }

private:
    std::string label_;
    std::vector<EditionRecord> records_;
    std::map<std::string, std::size_t> index_;
};

namespace detail {

inline std::string_view trim_view(std::string_view s) {
    std::size_t lead = 0;
    return trimmed(s, lead);
}

struct RawLine {
    std::size_t number;
    std::string_view text;
};

inline std::vector<RawLine> split_lines(std::string_view content) {
    std::vector<RawLine> lines;
    std::size_t start = 0, number = 1;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!(end == content.size() && line.empty()))
            lines.push_back({number, line});
        if (end == content.size()) break;
        start = end + 1;
        ++number;
    }
    return lines;
}

constexpr std::string_view kExportHeader = "notation\tdescription\tmain_class\taux_type\taux_part";

}  // namespace detail

// Parses edition content held in memory. `label` overrides any "#label:"
// line in the file; when both are absent `fallback_label` is used.
inline std::pair<EditionSnapshot, IngestReport> load_edition_text(
    std::string_view content, EditionFormat format, std::string label = "",
    bool strict = false, std::string fallback_label = "edition") {
    IngestReport report;
    std::vector<EditionRecord> accepted;
    std::map<std::string, std::size_t> seen;  // canonical notation -> line
    std::string file_label;

    for (const detail::RawLine& raw : detail::split_lines(content)) {
        std::string_view line = detail::trim_view(raw.text);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("#label:", 0) == 0)
                file_label = std::string(detail::trim_view(line.substr(7)));
            continue;
        }
        if (format == EditionFormat::CanonicalTsv && line.rfind("notation\t", 0) == 0)
            continue;  // export header

        std::string notation_raw, description;
        if (format == EditionFormat::CanonicalTsv) {
            std::size_t tab = line.find('\t');
            if (tab == std::string_view::npos) {
                if (strict) throw IngestError(raw.number, "missing tab separator");
                report.rejected.emplace_back(raw.number, "missing tab separator");
                continue;
            }
            notation_raw = std::string(line.substr(0, tab));
            std::string_view rest = line.substr(tab + 1);
            std::size_t tab2 = rest.find('\t');
            description = std::string(tab2 == std::string_view::npos ? rest : rest.substr(0, tab2));
        } else {
            std::size_t gap = line.find("  ");
            if (gap == std::string_view::npos) {
                notation_raw = std::string(line);
            } else {
                notation_raw = std::string(detail::trim_view(line.substr(0, gap)));
                description = std::string(detail::trim_view(line.substr(gap + 2)));
            }
        }

        EditionRecord rec;
        rec.description = std::move(description);
        rec.source_line = raw.number;
        if (auto meta = metadata_kind(notation_raw)) {
            rec.notation = notation_raw;
        } else if (!notation_raw.empty() && notation_raw[0] == '~') {
            if (strict) throw IngestError(raw.number, "unknown reserved token \"" + notation_raw + "\"");
            report.rejected.emplace_back(raw.number, "unknown reserved token \"" + notation_raw + "\"");
            continue;
        } else {
            try {
                UdcExpression expr = parse(notation_raw);
                rec.notation = render(expr);
                rec.expression = std::move(expr);
            } catch (const Error& e) {
                if (strict) throw IngestError(raw.number, e.what());
                report.rejected.emplace_back(raw.number, e.what());
                continue;
            }
        }

        auto [it, fresh] = seen.emplace(rec.notation, raw.number);
        if (!fresh) {
            if (strict) throw DuplicateNotation(rec.notation, it->second, raw.number);
            report.rejected.emplace_back(
                raw.number, "duplicate notation \"" + rec.notation + "\" first seen at line " +
                                std::to_string(it->second));
            continue;
        }
        if (rec.description.empty())
            report.warnings.emplace_back(raw.number, "empty description");
        accepted.push_back(std::move(rec));
        ++report.accepted;
    }

    std::string effective = !label.empty()       ? label
                            : !file_label.empty() ? file_label
                                                  : fallback_label;
    return {EditionSnapshot::build(std::move(effective), std::move(accepted)),
            std::move(report)};
}

inline std::pair<EditionSnapshot, IngestReport> load_edition(
    const std::string& path, EditionFormat format, std::string label = "",
    bool strict = false) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem.erase(0, slash + 1);
    if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem.erase(dot);
    return load_edition_text(buf.str(), format, std::move(label), strict, stem);
}

// Writes the analysis table: one row per record, sorted by canonical
// notation, with the derived classification columns. Byte-stable.
inline void export_tabular(const EditionSnapshot& snapshot, ClassificationMode mode,
                           std::ostream& out) {
    if (!snapshot.label().empty()) out << "#label:" << snapshot.label() << "\n";
    out << detail::kExportHeader << "\n";
    for (const EditionRecord& rec : snapshot.records()) {
        std::string description = rec.description;
        std::replace(description.begin(), description.end(), '\t', ' ');
        out << rec.notation << '\t' << description << '\t';
        if (rec.is_metadata()) {
            out << '\t' << aux_kind_name(*metadata_kind(rec.notation)) << '\t';
        } else {
            out << main_class(*rec.expression, mode).code << '\t';
            AuxiliaryProfile profile = auxiliary_profile(*rec.expression);
            if (profile.aux_type) out << aux_kind_name(*profile.aux_type);
            out << '\t';
            if (profile.aux_part) out << *profile.aux_part;
        }
        out << '\n';
    }
}

inline std::string export_tabular_string(const EditionSnapshot& snapshot,
                                         ClassificationMode mode) {
    std::ostringstream out;
    export_tabular(snapshot, mode, out);
    return out.str();
}

inline void export_tabular_file(const EditionSnapshot& snapshot, ClassificationMode mode,
                                const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    export_tabular(snapshot, mode, out);
}

// Re-checks every snapshot invariant: notation must reparse to its stored
// expression and be canonical, the index must mirror the records, and empty
// descriptions are reported as warnings.
inline IngestReport validate(const EditionSnapshot& snapshot) {
    IngestReport report;
    for (const EditionRecord& rec : snapshot.records()) {
        if (rec.is_metadata()) {
            if (!metadata_kind(rec.notation)) {
                report.rejected.emplace_back(rec.source_line,
                                             "record without expression is not a known token");
                continue;
            }
        } else {
            try {
                if (parse(rec.notation) != *rec.expression || render(*rec.expression) != rec.notation) {
                    report.rejected.emplace_back(rec.source_line,
                                                 "notation \"" + rec.notation + "\" is not canonical");
                    continue;
                }
                if (auto reason = invalid_reason(*rec.expression)) {
                    report.rejected.emplace_back(rec.source_line, *reason);
                    continue;
                }
            } catch (const Error& e) {
                report.rejected.emplace_back(rec.source_line, e.what());
                continue;
            }
        }
        if (rec.description.empty())
            report.warnings.emplace_back(rec.source_line, "empty description");
        ++report.accepted;
    }
    if (snapshot.index().size() != snapshot.size()) {
        report.rejected.emplace_back(0, "index size does not match record count");
    } else {
        for (const auto& [notation, pos] : snapshot.index())
            if (pos >= snapshot.size() || snapshot.records()[pos].notation != notation) {
                report.rejected.emplace_back(0, "index entry \"" + notation + "\" is stale");
                break;
            }
    }
    return report;
}

}  // namespace udc
