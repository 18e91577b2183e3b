#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace synthpop {

// Line-oriented CSV reader with RFC-style quoting ("" escapes a quote inside
// a quoted field). Tracks 1-based line numbers for error messages; the header
// is line 1.
class CsvReader {
public:
    explicit CsvReader(const std::filesystem::path& path);

    const std::filesystem::path& path() const noexcept { return path_; }
    const std::vector<std::string>& header() const noexcept { return header_; }
    std::size_t line_number() const noexcept { return line_; }

    // Returns false at end of file. Blank lines are skipped.
    bool next_row(std::vector<std::string>& fields);

    // Index of a named header column; throws ValidationError if absent.
    std::size_t column(const std::string& name) const;

    // Validates that header begins with the expected columns, in order.
    // Extra trailing columns are tolerated when allow_extra is true (the
    // caller decides whether to warn).
    void require_header(const std::vector<std::string>& expected, bool allow_extra = false) const;

private:
    std::filesystem::path path_;
    std::ifstream in_;
    std::vector<std::string> header_;
    std::size_t line_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);
std::string csv_escape(const std::string& field);

// Field parsers that raise ValidationError naming file, line and column.
double parse_double_field(const std::string& value, const std::filesystem::path& file,
                          std::size_t line, const std::string& column);
long long parse_int_field(const std::string& value, const std::filesystem::path& file,
                          std::size_t line, const std::string& column);
std::uint64_t parse_u64_field(const std::string& value, const std::filesystem::path& file,
                              std::size_t line, const std::string& column);

// Shortest round-trip decimal rendering of a double (std::to_chars).
std::string format_double(double value);

} // namespace synthpop
