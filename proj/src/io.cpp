#include "splitmeasure/io.hpp"

#include "splitmeasure/errors.hpp"

namespace splitmeasure {

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_line(const CsvRow& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_field(row[i]);
    }
    return out + "\n";
}

std::string write_csv(const std::vector<CsvRow>& rows) {
    std::string out;
    for (const auto& row : rows) out += csv_line(row);
    return out;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    CsvRow row;
    std::string field;
    std::size_t i = 0;
    bool row_open = false;
    while (i < text.size()) {
        const char c = text[i];
        row_open = true;
        if (c == '"') {
            if (!field.empty()) throw ParseError("quote inside unquoted field", i);
            ++i;
            while (true) {
                if (i >= text.size()) throw ParseError("unterminated quoted field", i);
                if (text[i] == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                field += text[i++];
            }
            if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
                throw ParseError("text after closing quote", i);
            continue;
        }
        if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            row_open = false;
        } else {
            field += c;
        }
        ++i;
    }
    if (row_open) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace splitmeasure
