#include "exosynth/csv.hpp"

#include "exosynth/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace exosynth {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<double>& values) {
    if (values.size() != columns_.size()) {
        throw ConfigError("csv: row width does not match header");
    }
    rows_.push_back(values);
}

std::string CsvWriter::str() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ',';
        out += columns_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

void CsvWriter::write(const std::filesystem::path& path) const {
    write_text_atomic(path, str());
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    const fs::path tmp = dir / (path.filename().string() + ".tmp." +
                                std::to_string(std::random_device{}()));
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f << text;
        if (!f) throw Error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                    ec.message());
    }
}

CsvData parse_csv(const std::string& text) {
    CsvData data;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (header) {
            data.columns = cells;
            header = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
                throw ConfigError("csv: bad numeric cell '" + cell + "'");
            }
            row.push_back(v);
        }
        if (row.size() != data.columns.size()) {
            throw ConfigError("csv: ragged row");
        }
        data.rows.push_back(std::move(row));
    }
    return data;
}

}  // namespace exosynth
