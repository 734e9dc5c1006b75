#include "relspin/table.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace relspin {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::logic_error("table row length does not match header");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_float(row[c]);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Table& table) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].size() != table.columns.size()) {
            throw std::logic_error("table row length does not match header");
        }
        out << "  {";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? ", " : "") << '"' << table.columns[c]
                << "\": " << format_float(table.rows[r][c]);
        }
        out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
    return out.str();
}

std::string to_csv(const GaugeReport& report) {
    std::ostringstream out;
    out << "max_defect,n_samples\n"
        << format_float(report.max_defect) << ',' << report.n_samples << '\n';
    return out.str();
}

std::string to_json(const GaugeReport& report) {
    std::ostringstream out;
    out << "{\"max_defect\": " << format_float(report.max_defect)
        << ", \"n_samples\": " << report.n_samples << "}\n";
    return out.str();
}

} // namespace relspin
