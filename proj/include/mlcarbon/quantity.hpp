#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mlcarbon {

// Parses the numeric shorthand found in model-card metadata into a
// nonnegative double. Accepted forms:
//   plain decimals            "0", "123.5", ".75"
//   C-style scientific        "5e21", "1.2E+06"
//   count suffixes            "2k", "1.2M", "7B", "3G", "0.5T" (case-insensitive)
//   typeset scientific        "5×10^21", "3.1 x 10^18", "2*10**9"
//   thousands separators      "1,234,567"
// Throws UnparseableQuantity when no rule matches or the value is negative;
// a missing field must stay missing, never become zero.
double parse_quantity(std::string_view text);

// Non-throwing variant used by the ingest layer.
std::optional<double> try_parse_quantity(std::string_view text);

// Shortest decimal rendering that parse_quantity maps back to the same value.
std::string canonical_quantity(double value);

} // namespace mlcarbon
