#include "levyheat/csv.hpp"

#include "levyheat/common.hpp"

#include <fstream>

namespace levyheat {

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary); // binary: keep LF endings everywhere
    if (!out) throw ValidationError("cannot open for writing: " + path);
    out << str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace levyheat
