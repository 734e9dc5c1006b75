// Flat numeric tables and their byte-stable CSV/JSON renderings. Floats carry
// 17 significant digits so files round-trip and diff exactly.

#ifndef RELSPIN_TABLE_HPP
#define RELSPIN_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace relspin {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct GaugeReport {
    double max_defect = 0.0;
    std::size_t n_samples = 0;
};

/// "%.17g" rendering, the same in every locale.
std::string format_float(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table); // array of column-keyed objects

std::string to_csv(const GaugeReport& report);
std::string to_json(const GaugeReport& report);

} // namespace relspin

#endif
