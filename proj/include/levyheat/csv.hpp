#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace levyheat {

/// Shortest decimal form that round-trips a double (up to 17 significant digits).
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Minimal CSV emitter: UTF-8, LF line endings, 17-significant-digit floats.
class CsvWriter {
public:
    explicit CsvWriter(std::string header) { lines_.push_back(std::move(header)); }

    void raw_line(std::string line) { lines_.push_back(std::move(line)); }

    void row(const std::vector<double>& values) {
        std::string line;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) line += ',';
            line += format_double(values[i]);
        }
        lines_.push_back(std::move(line));
    }

    void row(const std::string& label, const std::vector<double>& values) {
        std::string line = label;
        for (double v : values) {
            line += ',';
            line += format_double(v);
        }
        lines_.push_back(std::move(line));
    }

    std::string str() const {
        std::string out;
        for (const auto& l : lines_) {
            out += l;
            out += '\n';
        }
        return out;
    }

    void write_file(const std::string& path) const;

private:
    std::vector<std::string> lines_;
};

/// Split one CSV line on commas (no quoting; the emitted formats never need it).
std::vector<std::string> split_csv_line(const std::string& line);

} // namespace levyheat
