#include "mlcarbon/csv.hpp"

#include "mlcarbon/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mlcarbon {

int CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool any_field = false;
    bool header_done = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        any_field = true;
    };
    auto end_row = [&] {
        if (!any_field && row.empty()) {
            return; // skip blank lines
        }
        end_field();
        if (!header_done) {
            table.header = std::move(row);
            header_done = true;
        } else {
            table.rows.push_back(std::move(row));
        }
        row.clear();
        any_field = false;
    };

    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            end_field();
            any_field = true;
        } else if (c == '\n') {
            end_row();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    if (in_quotes) {
        throw SchemaError("csv: unterminated quoted field");
    }
    if (any_field || !field.empty()) {
        end_row();
    }

    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (table.rows[i].size() != table.header.size()) {
            throw SchemaError("csv row " + std::to_string(i + 2) + ": expected " +
                              std::to_string(table.header.size()) + " fields, got " +
                              std::to_string(table.rows[i].size()));
        }
    }
    return table;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SchemaError("cannot open csv file: " + path);
    }
    return read_csv(in);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << csv_escape(fields[i]);
    }
    out << '\n';
}

} // namespace mlcarbon
