// udc/notation.hpp - UDC notation grammar: parsing, canonical rendering,
// main-class assignment and auxiliary classification.
//
// One expression per scheme record. Grammar accepted by parse():
//
//   expression := term (connector term)*
//   connector  := "+" | "/" | "::" | ":"            longest match, "::" wins
//   term       := "[" expression "]" aux*
//              |  mainNumber aux*
//              |  aux+                              may not start with ".0"
//   mainNumber := digit+ ("." digit+)*              dots are presentational
//   aux        := "=" digit+ ("." digit+)*          language
//              |  "(=" chars ")"                    ethnic grouping
//              |  "(0" chars ")"                    form
//              |  "(" [1-9] chars ")"               place
//              |  '"' chars '"'                     time
//              |  "-0" digit+                       persons and materials
//              |  "-" [1-9] digit*                  special, hyphen series
//              |  ".0" digit+                       special, point-zero series
//              |  "'" digit+                        special, apostrophe series
//              |  "*" nonspace+ | [A-Z]+            non-UDC notation
//
// Dots inside a digit run never carry meaning: "539.12.02" and "539.120.2"
// denote the same main number, whose canonical form regroups the digits in
// threes from the left. A consequence is that a digit run absorbs every
// ".digit" group that follows it, so a point-zero auxiliary can only attach
// after a delimited auxiliary or a bracketed group, never directly after a
// main number.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace udc {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty notation") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string expected)
        : Error("syntax error at offset " + std::to_string(position) +
                ": expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// ---------------------------------------------------------------------------
// Classification mode
// ---------------------------------------------------------------------------

// Treat01AsMain promotes notations beginning "01" into their own class "01"
// instead of folding them into class "0".
enum class ClassificationMode { Standard, Treat01AsMain };

// ---------------------------------------------------------------------------
// Auxiliary kinds
// ---------------------------------------------------------------------------

enum class AuxKind {
    CommonCoordination,      // combination signs; scheme metadata, letters a/b
    CommonLanguage,          // =...        letter c
    CommonForm,              // (0...)      letter d
    CommonPlace,             // (1...)-(9...) letter e
    CommonEthnic,            // (=...)      letter f
    CommonTime,              // "..."       letter g
    CommonNonUdc,            // *... / CAPS letter h
    CommonPersonsMaterials,  // -0...       letter k
    SpecialHyphen,           // -1...-9...
    SpecialPointZero,        // .0...
    SpecialApostrophe,       // '...
};

constexpr bool is_common(AuxKind k) {
    return k <= AuxKind::CommonPersonsMaterials;
}

constexpr bool is_special(AuxKind k) { return !is_common(k); }

// Single-letter code used by master-file records for common kinds; the
// coordination signs cover two letters ('a' and 'b') and report 'a'.
inline std::optional<char> mrf_code(AuxKind k) {
    switch (k) {
        case AuxKind::CommonCoordination: return 'a';
        case AuxKind::CommonLanguage: return 'c';
        case AuxKind::CommonForm: return 'd';
        case AuxKind::CommonPlace: return 'e';
        case AuxKind::CommonEthnic: return 'f';
        case AuxKind::CommonTime: return 'g';
        case AuxKind::CommonNonUdc: return 'h';
        case AuxKind::CommonPersonsMaterials: return 'k';
        default: return std::nullopt;
    }
}

inline std::string_view aux_kind_name(AuxKind k) {
    switch (k) {
        case AuxKind::CommonCoordination: return "CommonCoordination";
        case AuxKind::CommonLanguage: return "CommonLanguage";
        case AuxKind::CommonForm: return "CommonForm";
        case AuxKind::CommonPlace: return "CommonPlace";
        case AuxKind::CommonEthnic: return "CommonEthnic";
        case AuxKind::CommonTime: return "CommonTime";
        case AuxKind::CommonNonUdc: return "CommonNonUdc";
        case AuxKind::CommonPersonsMaterials: return "CommonPersonsMaterials";
        case AuxKind::SpecialHyphen: return "SpecialHyphen";
        case AuxKind::SpecialPointZero: return "SpecialPointZero";
        case AuxKind::SpecialApostrophe: return "SpecialApostrophe";
    }
    return "?";
}

inline std::optional<AuxKind> aux_kind_from_name(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(AuxKind::SpecialApostrophe); ++i) {
        auto k = static_cast<AuxKind>(i);
        if (aux_kind_name(k) == name) return k;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structure of a parsed notation
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!is_digit(c)) return false;
    return true;
}

// "5391202" -> "539.120.2"
inline std::string group_in_threes(std::string_view digits) {
    std::string out;
    out.reserve(digits.size() + digits.size() / 3);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && i % 3 == 0) out += '.';
        out += digits[i];
    }
    return out;
}

}  // namespace detail

// A run of decimal digits; presentational dots removed.
struct MainNumber {
    std::string digits;

    bool operator==(const MainNumber&) const = default;
};

inline std::string render(const MainNumber& n) {
    return detail::group_in_threes(n.digits);
}

// Canonical surface form of one auxiliary segment.
inline std::string render_aux(AuxKind kind, std::string_view payload) {
    using detail::all_digits;
    switch (kind) {
        case AuxKind::CommonLanguage:
            if (!all_digits(payload)) throw Error("language auxiliary payload must be digits");
            return "=" + detail::group_in_threes(payload);
        case AuxKind::CommonForm:
            if (payload.empty() || payload.find(')') != std::string_view::npos)
                throw Error("form auxiliary payload must be non-empty and ')'-free");
            return "(0" + std::string(payload) + ")";
        case AuxKind::CommonPlace:
            if (payload.empty() || payload[0] < '1' || payload[0] > '9' ||
                payload.find(')') != std::string_view::npos)
                throw Error("place auxiliary payload must start with 1-9 and be ')'-free");
            return "(" + std::string(payload) + ")";
        case AuxKind::CommonEthnic:
            if (payload.empty() || payload.find(')') != std::string_view::npos)
                throw Error("ethnic auxiliary payload must be non-empty and ')'-free");
            return "(=" + std::string(payload) + ")";
        case AuxKind::CommonTime:
            if (payload.empty() || payload.find('"') != std::string_view::npos)
                throw Error("time auxiliary payload must be non-empty and quote-free");
            return "\"" + std::string(payload) + "\"";
        case AuxKind::CommonPersonsMaterials:
            if (!all_digits(payload)) throw Error("persons auxiliary payload must be digits");
            return "-0" + std::string(payload);
        case AuxKind::SpecialHyphen:
            if (!all_digits(payload) || payload[0] == '0')
                throw Error("hyphen auxiliary payload must be digits not starting with 0");
            return "-" + std::string(payload);
        case AuxKind::SpecialPointZero:
            if (!all_digits(payload)) throw Error("point-zero auxiliary payload must be digits");
            return ".0" + std::string(payload);
        case AuxKind::SpecialApostrophe:
            if (!all_digits(payload)) throw Error("apostrophe auxiliary payload must be digits");
            return "'" + std::string(payload);
        case AuxKind::CommonNonUdc: {
            if (payload.empty()) throw Error("non-UDC auxiliary payload must be non-empty");
            bool caps = true;
            for (char c : payload) {
                if (c == ' ' || c == '\t') throw Error("non-UDC auxiliary payload must not contain spaces");
                if (!detail::is_upper(c)) caps = false;
            }
            return caps ? std::string(payload) : "*" + std::string(payload);
        }
        case AuxKind::CommonCoordination:
            throw Error("coordination signs are scheme metadata, not notation segments");
    }
    throw Error("unknown auxiliary kind");
}

struct AuxSegment {
    AuxKind kind;
    std::string payload;  // content with the kind's delimiters stripped
    std::string raw;      // canonical surface form, derived from kind+payload

    bool operator==(const AuxSegment&) const = default;
};

inline AuxSegment make_aux(AuxKind kind, std::string payload) {
    std::string raw = render_aux(kind, payload);
    return AuxSegment{kind, std::move(payload), std::move(raw)};
}

enum class ConnectorKind { Plus, Stroke, Relation, OrderFixing };

inline std::string_view connector_symbol(ConnectorKind k) {
    switch (k) {
        case ConnectorKind::Plus: return "+";
        case ConnectorKind::Stroke: return "/";
        case ConnectorKind::Relation: return ":";
        case ConnectorKind::OrderFixing: return "::";
    }
    return "?";
}

struct UdcExpression;

// One term of an expression: a main number, a bracketed subexpression, or
// neither, followed by any number of auxiliary segments. A term never has
// both a main number and a bracket.
struct Term {
    std::optional<MainNumber> main;
    std::vector<AuxSegment> auxiliaries;
    std::vector<UdcExpression> bracket;  // empty or exactly one element

    bool operator==(const Term&) const = default;
};

struct UdcExpression {
    std::vector<Term> terms;
    std::vector<ConnectorKind> connectors;  // always terms.size() - 1

    bool operator==(const UdcExpression&) const = default;
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline std::string render(const UdcExpression& expr);

inline std::string render(const Term& term) {
    std::string out;
    if (!term.bracket.empty())
        out += "[" + render(term.bracket.front()) + "]";
    else if (term.main)
        out += render(*term.main);
    for (const AuxSegment& a : term.auxiliaries) out += a.raw;
    return out;
}

inline std::string render(const UdcExpression& expr) {
    std::string out;
    for (std::size_t i = 0; i < expr.terms.size(); ++i) {
        if (i != 0) out += connector_symbol(expr.connectors[i - 1]);
        out += render(expr.terms[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text, std::size_t base_offset = 0)
        : text_(text), base_(base_offset) {}

    UdcExpression run() {
        UdcExpression e = expression();
        if (!eof()) fail("connector or end of input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t base_;

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    void advance(std::size_t n = 1) { pos_ += n; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(base_ + pos_, expected);
    }

    UdcExpression expression() {
        UdcExpression e;
        e.terms.push_back(term());
        while (auto c = try_connector()) {
            e.connectors.push_back(*c);
            e.terms.push_back(term());
        }
        return e;
    }

    std::optional<ConnectorKind> try_connector() {
        switch (peek()) {
            case '+': advance(); return ConnectorKind::Plus;
            case '/': advance(); return ConnectorKind::Stroke;
            case ':':
                if (peek(1) == ':') {
                    advance(2);
                    return ConnectorKind::OrderFixing;
                }
                advance();
                return ConnectorKind::Relation;
            default: return std::nullopt;
        }
    }

    Term term() {
        Term t;
        if (peek() == '[') {
            advance();
            t.bracket.push_back(expression());
            if (peek() != ']') fail("']'");
            advance();
            aux_run(t, true);
        } else if (is_digit(peek())) {
            t.main = main_number();
            aux_run(t, true);
        } else {
            aux_run(t, false);
            if (t.auxiliaries.empty()) fail("main number, '[' or auxiliary");
        }
        return t;
    }

    std::string digit_run() {
        std::size_t start = pos_;
        while (is_digit(peek())) advance();
        if (pos_ == start) fail("digit");
        return std::string(text_.substr(start, pos_ - start));
    }

    MainNumber main_number() {
        std::string digits = digit_run();
        while (peek() == '.' && is_digit(peek(1))) {
            advance();
            digits += digit_run();
        }
        return MainNumber{std::move(digits)};
    }

    // Consumes auxiliary segments until none applies. `hosted` is false only
    // for a term with neither main number nor bracket, where a leading
    // point-zero segment has nothing to attach to and is rejected.
    void aux_run(Term& t, bool hosted) {
        for (;;) {
            bool pz_ok = hosted || !t.auxiliaries.empty();
            auto seg = try_aux(pz_ok);
            if (!seg) return;
            t.auxiliaries.push_back(std::move(*seg));
        }
    }

    std::optional<AuxSegment> try_aux(bool point_zero_allowed) {
        switch (char c = peek(); c) {
            case '=': {
                advance();
                std::string digits = digit_run();
                while (peek() == '.' && is_digit(peek(1))) {
                    advance();
                    digits += digit_run();
                }
                return make_aux(AuxKind::CommonLanguage, std::move(digits));
            }
            case '(': return paren_aux();
            case '"': {
                advance();
                std::string payload = scan_until('"', "'\"'");
                advance();
                return make_aux(AuxKind::CommonTime, std::move(payload));
            }
            case '-': {
                if (peek(1) == '0') {
                    advance(2);
                    return make_aux(AuxKind::CommonPersonsMaterials, digit_run());
                }
                if (is_digit(peek(1))) {
                    advance();
                    return make_aux(AuxKind::SpecialHyphen, digit_run());
                }
                advance();
                fail("digit");
            }
            case '.': {
                if (peek(1) == '0' && is_digit(peek(2))) {
                    if (!point_zero_allowed)
                        fail("a host for the point-zero auxiliary");
                    advance(2);
                    return make_aux(AuxKind::SpecialPointZero, digit_run());
                }
                return std::nullopt;
            }
            case '\'': {
                advance();
                return make_aux(AuxKind::SpecialApostrophe, digit_run());
            }
            case '*': {
                advance();
                std::size_t start = pos_;
                while (!eof() && peek() != ' ' && peek() != '\t') advance();
                if (pos_ == start) fail("non-space character");
                return make_aux(AuxKind::CommonNonUdc,
                                std::string(text_.substr(start, pos_ - start)));
            }
            default: {
                if (is_upper(c)) {
                    std::size_t start = pos_;
                    while (is_upper(peek())) advance();
                    return make_aux(AuxKind::CommonNonUdc,
                                    std::string(text_.substr(start, pos_ - start)));
                }
                return std::nullopt;
            }
        }
    }

    std::optional<AuxSegment> paren_aux() {
        char c1 = peek(1);
        if (c1 == '=') {
            advance(2);
            std::string payload = scan_until(')', "')'");
            advance();
            return make_aux(AuxKind::CommonEthnic, std::move(payload));
        }
        if (c1 == '0') {
            advance(2);
            std::string payload = scan_until(')', "')'");
            advance();
            return make_aux(AuxKind::CommonForm, std::move(payload));
        }
        if (c1 >= '1' && c1 <= '9') {
            advance();
            std::string payload = scan_until(')', "')'");
            advance();
            return make_aux(AuxKind::CommonPlace, std::move(payload));
        }
        advance();
        fail("'=' or digit");
    }

    // Collects characters up to (not including) `close`; fails on empty
    // content or unterminated input.
    std::string scan_until(char close, const char* close_name) {
        std::size_t start = pos_;
        while (!eof() && peek() != close) advance();
        if (eof()) fail(close_name);
        if (pos_ == start) fail("auxiliary content");
        return std::string(text_.substr(start, pos_ - start));
    }
};

inline std::string_view trimmed(std::string_view s, std::size_t& lead) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    lead = b;
    return s.substr(b, e - b);
}

}  // namespace detail

inline UdcExpression parse(std::string_view text) {
    std::size_t lead = 0;
    std::string_view body = detail::trimmed(text, lead);
    if (body.empty()) throw EmptyInput();
    return detail::Parser(body, lead).run();
}

// ---------------------------------------------------------------------------
// Structural validity
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_star_form(const AuxSegment& a) {
    return a.kind == AuxKind::CommonNonUdc && !a.raw.empty() && a.raw[0] == '*';
}

inline bool is_caps_form(const AuxSegment& a) {
    return a.kind == AuxKind::CommonNonUdc && !is_star_form(a);
}

// A point-zero segment may not follow anything whose rendering ends in an
// open digit run that would absorb its ".0"; that is a main number, a
// language segment, or a star-form segment.
inline bool absorbs_following_dot(const AuxSegment& a) {
    return a.kind == AuxKind::CommonLanguage || is_star_form(a);
}

inline std::optional<std::string> invalid_term_reason(const Term& t, bool last_term,
                                                      bool top_level);

inline std::optional<std::string> invalid_expression_reason(const UdcExpression& e,
                                                            bool top_level) {
    if (e.terms.empty()) return "expression has no terms";
    if (e.connectors.size() + 1 != e.terms.size())
        return "connector count does not match term count";
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        bool last = top_level && i + 1 == e.terms.size();
        if (auto r = invalid_term_reason(e.terms[i], last, top_level)) return r;
    }
    return std::nullopt;
}

inline std::optional<std::string> invalid_term_reason(const Term& t, bool last_term,
                                                      bool top_level) {
    if (t.main && !t.bracket.empty()) return "term has both main number and bracket";
    if (!t.main && t.bracket.empty() && t.auxiliaries.empty())
        return "term is empty";
    if (t.bracket.size() > 1) return "term has more than one bracket";
    if (t.main && !all_digits(t.main->digits)) return "main number is not a digit run";
    if (!t.bracket.empty())
        if (auto r = invalid_expression_reason(t.bracket.front(), false)) return r;
    for (std::size_t i = 0; i < t.auxiliaries.size(); ++i) {
        const AuxSegment& a = t.auxiliaries[i];
        try {
            if (a.raw != render_aux(a.kind, a.payload)) return "auxiliary raw form is stale";
        } catch (const Error& err) {
            return std::string(err.what());
        }
        if (a.kind == AuxKind::SpecialPointZero) {
            if (i == 0) {
                if (t.main) return "point-zero auxiliary directly after a main number";
                if (t.bracket.empty()) return "point-zero auxiliary with no host";
            } else if (absorbs_following_dot(t.auxiliaries[i - 1])) {
                return "point-zero auxiliary after an open digit run";
            }
        }
        if (i > 0 && is_caps_form(a) && is_caps_form(t.auxiliaries[i - 1]))
            return "adjacent capital-letter runs would merge";
        if (is_star_form(a)) {
            bool final_position = last_term && i + 1 == t.auxiliaries.size();
            if (!top_level || !final_position)
                return "star segment must end the whole notation";
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Returns an explanation when the expression violates a structural
// invariant (and would not survive a render/parse round trip), otherwise
// nothing. parse() only ever produces valid expressions.
inline std::optional<std::string> invalid_reason(const UdcExpression& e) {
    return detail::invalid_expression_reason(e, true);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct MainClassLabel {
    std::string code;  // "0".."9", "01", or "AUX"
    std::string display_name;

    bool operator==(const MainClassLabel&) const = default;
};

// Display names are scheme configuration, not derived data.
inline MainClassLabel main_class_label(std::string_view code) {
    struct Entry {
        std::string_view code, name;
    };
    static constexpr Entry table[] = {
        {"0", "Science and Information Organization"},
        {"01", "Bibliographie"},
        {"1", "Philosophy. Psychology"},
        {"2", "Religion"},
        {"3", "Social Sciences"},
        {"4", "Philology. Linguistics"},
        {"5", "Natural Sciences"},
        {"6", "Applied Sciences"},
        {"7", "The Arts"},
        {"8", "Literature"},
        {"9", "Geography. History"},
        {"AUX", "Common Auxiliaries"},
    };
    for (const Entry& e : table)
        if (e.code == code) return MainClassLabel{std::string(e.code), std::string(e.name)};
    throw Error("unknown main class code: " + std::string(code));
}

// First digit of the first term's main number; a bracketed first term delegates
// to the expression inside it. Records with no main-table part anywhere in
// front classify as "AUX".
inline MainClassLabel main_class(const UdcExpression& expr,
                                 ClassificationMode mode = ClassificationMode::Standard) {
    const Term* t = &expr.terms.front();
    while (!t->main && !t->bracket.empty()) t = &t->bracket.front().terms.front();
    if (!t->main) return main_class_label("AUX");
    const std::string& d = t->main->digits;
    if (mode == ClassificationMode::Treat01AsMain && d.size() >= 2 && d[0] == '0' && d[1] == '1')
        return main_class_label("01");
    return main_class_label(std::string_view(&d[0], 1));
}

struct AuxiliaryProfile {
    std::optional<AuxKind> aux_type;   // kind of the first segment, surface order
    std::optional<std::string> aux_part;  // concatenated raw forms of all segments

    bool operator==(const AuxiliaryProfile&) const = default;
};

namespace detail {

inline void collect_segments(const UdcExpression& e,
                             std::vector<const AuxSegment*>& out) {
    for (const Term& t : e.terms) {
        if (!t.bracket.empty()) collect_segments(t.bracket.front(), out);
        for (const AuxSegment& a : t.auxiliaries) out.push_back(&a);
    }
}

}  // namespace detail

inline AuxiliaryProfile auxiliary_profile(const UdcExpression& expr) {
    std::vector<const AuxSegment*> segs;
    detail::collect_segments(expr, segs);
    if (segs.empty()) return {};
    std::string part;
    for (const AuxSegment* s : segs) part += s->raw;
    return AuxiliaryProfile{segs.front()->kind, std::move(part)};
}

}  // namespace udc
