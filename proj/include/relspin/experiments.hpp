// Experiment runners behind the CLI subcommands. Each consumes a validated
// config and returns a table (or report) ready for CSV/JSON rendering.

#ifndef RELSPIN_EXPERIMENTS_HPP
#define RELSPIN_EXPERIMENTS_HPP

#include "relspin/config.hpp"
#include "relspin/polarization.hpp"
#include "relspin/table.hpp"

namespace relspin {

/// The comparison frame named by the config's frame selector. "adapted"
/// resolves to the Pauli-Lubanski frame of t = (1, -boost_axis), the null
/// direction every boost along that axis contracts; it is rapidity
/// independent and remains defined on rapidity-0 rows.
PolarizationFrame comparison_frame(const ExperimentConfig& cfg);

/// The t four-vector the gauge check probes (custom t when given, otherwise
/// the same rule as comparison_frame; pst/helicity fall back to (1,0,0,0)).
FourVector gauge_direction(const ExperimentConfig& cfg);

/// Entropy of the momentum-blind reduction vs the comparison frame, one row
/// per rapidity, plus the channel diagnostics of the comparison frame.
Table run_entropy_scan(const ExperimentConfig& cfg);

/// Wigner-angle cross-check: composed little-group rotation vs the
/// closed-form oracle over rapidity x angle rows.
Table run_wigner_table(const ExperimentConfig& cfg);

/// Max entrywise defect of pl_matrix under the gauge shift over the packet.
GaugeReport run_gauge_check(const ExperimentConfig& cfg);

/// Two-qubit negativity before/after the boost, canonical vs comparison
/// frames, one row per rapidity.
Table run_entangle_scan(const ExperimentConfig& cfg);

/// Renders in the config's format ("csv" or "json").
std::string render(const Table& table, const std::string& format);
std::string render(const GaugeReport& report, const std::string& format);

} // namespace relspin

#endif
