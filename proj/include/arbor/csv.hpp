#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace arbor::csv {

using Record = std::vector<std::string>;

/// RFC-4180 records: comma separated, double-quote escaping, CRLF or LF line
/// ends. A trailing newline does not produce an empty record. Throws
/// LoadError on an unterminated quoted field.
std::vector<Record> parse(std::string_view text);

/// Quotes a field only when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

std::string join(const Record& fields);

/// Shortest decimal that parses back to the same double.
std::string format_number(double value);

/// Strict full-field parse; returns false on any trailing garbage or empty input.
bool parse_number(std::string_view text, double& out);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace arbor::csv
