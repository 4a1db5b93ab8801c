#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlcarbon {

// Minimal RFC-4180-style CSV: quoted fields, embedded commas/newlines,
// doubled quotes. Enough for the snapshot and override files; no dialects.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(std::string_view name) const; // -1 when absent
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path); // throws SchemaError

std::string csv_escape(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace mlcarbon
