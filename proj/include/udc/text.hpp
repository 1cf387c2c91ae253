// udc/text.hpp - description normalization.
//
// Descriptions are compared after Unicode NFC normalization and whitespace
// collapsing, so "Théologie" spelled with a combining accent and with a
// precomposed character count as the same description, as do runs of blanks.

#pragma once

#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

namespace udc {

namespace detail {

inline std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += c;
    }
    return out;
}

}  // namespace detail

// Comparison key for descriptions: NFC, blank runs collapsed to one space,
// no leading or trailing blanks. Invalid UTF-8 passes through collapsed only.
inline std::string normalize_description(std::string_view s) {
    std::string collapsed = detail::collapse_whitespace(s);
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) return collapsed;
    icu::UnicodeString in = icu::UnicodeString::fromUTF8(collapsed);
    icu::UnicodeString out = nfc->normalize(in, status);
    if (U_FAILURE(status)) return collapsed;
    std::string result;
    out.toUTF8String(result);
    return result;
}

}  // namespace udc
