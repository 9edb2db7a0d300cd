#pragma once

// Minimal RFC 4180 CSV writing and reading. Output uses LF line endings and
// quotes a field only when it contains a comma, quote or line break.

#include <string>
#include <string_view>
#include <vector>

namespace splitmeasure {

using CsvRow = std::vector<std::string>;

std::string csv_field(std::string_view field);
std::string csv_line(const CsvRow& row);
std::string write_csv(const std::vector<CsvRow>& rows);

/// Throws ParseError on an unterminated quoted field or a stray quote.
std::vector<CsvRow> parse_csv(std::string_view text);

}  // namespace splitmeasure
