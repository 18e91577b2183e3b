#include "synthpop/csv.hpp"

#include <charconv>
#include <cstdlib>

#include "synthpop/error.hpp"

namespace synthpop {

namespace {

std::string location(const std::filesystem::path& file, std::size_t line) {
    return file.string() + ":" + std::to_string(line);
}

} // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

CsvReader::CsvReader(const std::filesystem::path& path) : path_(path), in_(path) {
    if (!in_) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in_, line)) throw ValidationError(path.string() + ": empty file, expected a CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    header_ = split_csv_line(line);
    line_ = 1;
}

bool CsvReader::next_row(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fields = split_csv_line(line);
        return true;
    }
    return false;
}

std::size_t CsvReader::column(const std::string& name) const {
    for (std::size_t i = 0; i < header_.size(); ++i)
        if (header_[i] == name) return i;
    throw ValidationError(path_.string() + ": missing required column '" + name + "'");
}

void CsvReader::require_header(const std::vector<std::string>& expected, bool allow_extra) const {
    if (header_.size() < expected.size() || (!allow_extra && header_.size() > expected.size())) {
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) want += ",";
            want += expected[i];
        }
        throw ValidationError(path_.string() + ": expected header '" + want + "'");
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (header_[i] != expected[i])
            throw ValidationError(path_.string() + ": header column " + std::to_string(i + 1) +
                                  " is '" + header_[i] + "', expected '" + expected[i] + "'");
    }
}

double parse_double_field(const std::string& value, const std::filesystem::path& file,
                          std::size_t line, const std::string& column) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ValidationError(location(file, line) + ": cannot parse '" + value +
                              "' as a number in column '" + column + "'");
    return v;
}

long long parse_int_field(const std::string& value, const std::filesystem::path& file,
                          std::size_t line, const std::string& column) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ValidationError(location(file, line) + ": cannot parse '" + value +
                              "' as an integer in column '" + column + "'");
    return v;
}

std::uint64_t parse_u64_field(const std::string& value, const std::filesystem::path& file,
                              std::size_t line, const std::string& column) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ValidationError(location(file, line) + ": cannot parse '" + value +
                              "' as an unsigned integer in column '" + column + "'");
    return v;
}

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace synthpop
