#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace exosynth {

/// Deterministic CSV emission: header row, `.` decimal separator, LF line
/// endings, shortest-round-trip number formatting. Identical records produce
/// byte-identical files.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> columns);

    void add_row(const std::vector<double>& values);   // size must match header
    std::string str() const;

    /// Atomic write: temp file in the target directory + rename.
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

/// Parse a CSV of doubles produced by CsvWriter: returns header + rows.
struct CsvData {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};
CsvData parse_csv(const std::string& text);

/// Write arbitrary text atomically (temp file + rename).
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace exosynth
