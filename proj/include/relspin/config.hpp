// Experiment configuration. Plain-text "key = value" lines with dotted keys;
// '#' starts a comment. Unknown keys are errors.

#ifndef RELSPIN_CONFIG_HPP
#define RELSPIN_CONFIG_HPP

#include "relspin/wavepacket.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace relspin {

struct ExperimentConfig {
    std::string experiment = "entropy-scan";
    double mass = 1.0;
    Vec3 center{0.0, 0.0, 2.0};
    Vec3 center2{0.0, 0.0, -2.0}; // second particle, entangle-scan only
    double width = 0.5;
    Spinor chi0{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    GridSpec grid{21, 4.0};
    Vec3 boost_axis{1.0, 0.0, 0.0};
    std::vector<double> rapidities{0.5, 1.0, 2.0};
    std::string frame = "adapted"; // pst | helicity | adapted | custom:t0,t1,t2,t3
    std::string out;               // empty = stdout
    std::string format = "csv";    // csv | json

    void validate() const; // throws config_error
};

/// Defaults for a given subcommand (entangle-scan uses the 7-point lattice and
/// a z boost; wigner sweeps the oracle grid's rapidities).
ExperimentConfig default_config(const std::string& experiment);

/// Parses "key = value" text over the experiment's defaults. The experiment
/// key, when present, must match.
ExperimentConfig parse_config(std::istream& in, const std::string& experiment);
ExperimentConfig parse_config_file(const std::string& path, const std::string& experiment);

} // namespace relspin

#endif
