#include "mlcarbon/quantity.hpp"

#include "mlcarbon/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace mlcarbon {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Strips digit-grouping commas, e.g. "1,234,567.5". Returns false when commas
// are present but do not form a valid grouping.
bool strip_thousands(const std::string& in, std::string& out) {
    if (in.find(',') == std::string::npos) {
        out = in;
        return true;
    }
    std::size_t i = 0;
    while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) {
        ++i;
    }
    if (i == 0 || i > 3) {
        return false;
    }
    out.assign(in, 0, i);
    while (i < in.size() && in[i] == ',') {
        if (i + 3 >= in.size()) {
            return false;
        }
        for (std::size_t k = i + 1; k <= i + 3; ++k) {
            if (!std::isdigit(static_cast<unsigned char>(in[k]))) {
                return false;
            }
        }
        out.append(in, i + 1, 3);
        i += 4;
    }
    if (in.find(',', i) != std::string::npos) {
        return false;
    }
    out.append(in, i, std::string::npos);
    return true;
}

// Plain decimal with optional exponent: [+]?digits[.digits][eE[+-]digits].
// Consumes from *pos; returns false if no number starts there.
bool scan_decimal(const std::string& s, std::size_t& pos, double& value) {
    std::size_t i = pos;
    if (i < s.size() && s[i] == '+') {
        ++i;
    }
    std::size_t digits = 0;
    const std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i, ++digits;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i, ++digits;
        }
    }
    if (digits == 0) {
        return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
            ++j;
        }
        std::size_t exp_digits = 0;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            ++j, ++exp_digits;
        }
        if (exp_digits > 0) {
            i = j;
        }
    }
    const std::string token = s.substr(num_begin, i - num_begin);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        return false;
    }
    pos = i;
    return true;
}

void skip_spaces(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
    }
}

bool suffix_factor(char c, double& factor) {
    switch (c) {
        case 'k': case 'K': factor = 1e3;  return true;
        case 'm': case 'M': factor = 1e6;  return true; // counts never use milli
        case 'b': case 'B':
        case 'g': case 'G': factor = 1e9;  return true;
        case 't': case 'T': factor = 1e12; return true;
        default: return false;
    }
}

// Matches "× 10 ^ exp" style tails (also x, X, *, · as the times sign and
// ** as the power operator).
bool scan_pow10_tail(const std::string& s, std::size_t& pos, double& exponent) {
    std::size_t i = pos;
    skip_spaces(s, i);
    if (i >= s.size()) {
        return false;
    }
    if (s.compare(i, 2, "\xC3\x97") == 0) { // UTF-8 ×
        i += 2;
    } else if (s.compare(i, 2, "\xC2\xB7") == 0) { // UTF-8 ·
        i += 2;
    } else if (s[i] == 'x' || s[i] == 'X' || s[i] == '*') {
        ++i;
    } else {
        return false;
    }
    skip_spaces(s, i);
    if (s.compare(i, 2, "10") != 0) {
        return false;
    }
    i += 2;
    skip_spaces(s, i);
    if (i < s.size() && s.compare(i, 2, "**") == 0) {
        i += 2;
    } else if (i < s.size() && s[i] == '^') {
        ++i;
    } else {
        return false;
    }
    skip_spaces(s, i);
    std::size_t j = i;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
        ++j;
    }
    std::size_t digits = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        ++j, ++digits;
    }
    if (digits == 0) {
        return false;
    }
    const std::string token = s.substr(i, j - i);
    exponent = std::strtod(token.c_str(), nullptr);
    pos = j;
    return true;
}

} // namespace

std::optional<double> try_parse_quantity(std::string_view text) {
    const std::string_view trimmed = trim(text);
    if (trimmed.empty()) {
        return std::nullopt;
    }
    std::string cleaned;
    if (!strip_thousands(std::string(trimmed), cleaned)) {
        return std::nullopt;
    }

    std::size_t pos = 0;
    double mantissa = 0.0;
    if (!scan_decimal(cleaned, pos, mantissa)) {
        return std::nullopt;
    }

    double value = mantissa;
    double exponent = 0.0;
    if (scan_pow10_tail(cleaned, pos, exponent)) {
        value = mantissa * std::pow(10.0, exponent);
    } else {
        std::size_t after = pos;
        skip_spaces(cleaned, after);
        double factor = 1.0;
        if (after < cleaned.size() && suffix_factor(cleaned[after], factor)) {
            value = mantissa * factor;
            pos = after + 1;
        }
    }

    skip_spaces(cleaned, pos);
    if (pos != cleaned.size()) {
        return std::nullopt;
    }
    if (!std::isfinite(value) || value < 0.0) {
        return std::nullopt;
    }
    return value;
}

double parse_quantity(std::string_view text) {
    const auto value = try_parse_quantity(text);
    if (!value) {
        throw UnparseableQuantity(std::string(text));
    }
    return *value;
}

std::string canonical_quantity(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    double roundtrip = std::strtod(buf, nullptr);
    for (int prec = 1; prec < 17; ++prec) {
        char probe[64];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, value);
        if (std::strtod(probe, nullptr) == value) {
            return probe;
        }
    }
    (void)roundtrip;
    return buf;
}

} // namespace mlcarbon
