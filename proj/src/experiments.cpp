#include "relspin/experiments.hpp"
#include "relspin/entanglement.hpp"
#include "relspin/numerics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace relspin {

namespace {

std::vector<double> parse_custom_t(const std::string& frame) {
    std::vector<double> v;
    std::stringstream ss(frame.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    return v;
}

} // namespace

PolarizationFrame comparison_frame(const ExperimentConfig& cfg) {
    if (cfg.frame == "pst") return PolarizationFrame::canonical();
    if (cfg.frame == "helicity") return PolarizationFrame::helicity();
    if (cfg.frame == "adapted") {
        FourVector t;
        t << 1.0, -cfg.boost_axis.x(), -cfg.boost_axis.y(), -cfg.boost_axis.z();
        return PolarizationFrame::pauli_lubanski(t);
    }
    const auto v = parse_custom_t(cfg.frame);
    return PolarizationFrame::pauli_lubanski(FourVector(v[0], v[1], v[2], v[3]));
}

FourVector gauge_direction(const ExperimentConfig& cfg) {
    if (cfg.frame.rfind("custom:", 0) == 0) {
        const auto v = parse_custom_t(cfg.frame);
        return FourVector(v[0], v[1], v[2], v[3]);
    }
    if (cfg.frame == "adapted") {
        return FourVector(1.0, -cfg.boost_axis.x(), -cfg.boost_axis.y(), -cfg.boost_axis.z());
    }
    return FourVector(1.0, 0.0, 0.0, 0.0);
}

Table run_entropy_scan(const ExperimentConfig& cfg) {
    const WavePacketState packet =
        gaussian_packet(cfg.mass, cfg.center, cfg.width, cfg.chi0, cfg.grid);
    const PolarizationFrame canonical = PolarizationFrame::canonical();
    const PolarizationFrame frame = comparison_frame(cfg);

    const double s_pst_before = entropy_bits(reduced_density(packet, canonical));
    const double s_cmp_before = entropy_bits(reduced_density(packet, frame));

    std::vector<Vec3> momenta;
    momenta.reserve(packet.samples.size());
    for (const auto& s : packet.samples) momenta.push_back(s.p);

    Table table;
    table.columns = {"chi",            "S_pst_before",     "S_pst_after",
                     "S_adapted_before", "S_adapted_after", "channel_offdiag",
                     "channel_phase_spread"};
    for (double chi : cfg.rapidities) {
        const TransformPair lambda = boost(cfg.boost_axis, chi);
        const WavePacketState boosted = boost_state(packet, lambda);
        const double s_pst_after = entropy_bits(reduced_density(boosted, canonical));
        const double s_cmp_after = entropy_bits(reduced_density(boosted, frame));
        const ChannelDefect defect = channel_defect(lambda, frame, momenta, cfg.mass);
        table.rows.push_back({chi, s_pst_before, s_pst_after, s_cmp_before, s_cmp_after,
                              defect.offdiag, defect.spread});
    }
    return table;
}

Table run_wigner_table(const ExperimentConfig& cfg) {
    static const std::vector<double> etas = {0.25, 0.5, 1.0, 2.0};

    // Boost axis fixed to z; theta carries the geometry, so nothing is lost.
    Table table;
    table.columns = {"xi", "eta", "theta", "omega_composed", "omega_oracle", "abs_delta"};
    for (double xi : cfg.rapidities) {
        const TransformPair lambda = boost(Vec3(0, 0, 1), xi);
        for (double eta : etas) {
            for (int k = 0; k <= 6; ++k) {
                const double theta = k * std::numbers::pi / 6.0;
                const Vec3 direction(std::sin(theta), 0.0, std::cos(theta));
                const MassiveMomentum q(cfg.mass * std::sinh(eta) * direction, cfg.mass);
                const double composed = rotation_angle(wigner_rotation(lambda, q));
                const double oracle = wigner_angle_oracle(xi, eta, theta);
                const double delta = std::abs(composed - oracle);
                if (delta >= 1e-10) {
                    std::ostringstream msg;
                    msg << "wigner: composed angle deviates from the oracle by " << delta
                        << " at xi=" << xi << " eta=" << eta << " theta=" << theta;
                    throw numerical_error(msg.str());
                }
                table.rows.push_back({xi, eta, theta, composed, oracle, delta});
            }
        }
    }
    return table;
}

GaugeReport run_gauge_check(const ExperimentConfig& cfg) {
    const WavePacketState packet =
        gaussian_packet(cfg.mass, cfg.center, cfg.width, cfg.chi0, cfg.grid);
    const FourVector t = gauge_direction(cfg);

    std::vector<double> defects(packet.samples.size());
    numerics::parallel_for(packet.samples.size(), [&](std::size_t i) {
        const MassiveMomentum q(packet.samples[i].p, cfg.mass);
        const FourVector shifted = gauge_shift(t, q);
        defects[i] = (pl_matrix(shifted, q) - pl_matrix(t, q)).cwiseAbs().maxCoeff();
    });

    GaugeReport report;
    report.n_samples = packet.samples.size();
    for (double d : defects) report.max_defect = std::max(report.max_defect, d);
    return report;
}

Table run_entangle_scan(const ExperimentConfig& cfg) {
    const TwoParticleState bell =
        bell_packet(cfg.mass, cfg.center, cfg.center2, cfg.width, cfg.grid);
    const PolarizationFrame canonical = PolarizationFrame::canonical();
    const PolarizationFrame frame = comparison_frame(cfg);

    const double n_pst_before = negativity(reduced_two_qubit(bell, canonical, canonical));
    const double n_cmp_before = negativity(reduced_two_qubit(bell, frame, frame));

    Table table;
    table.columns = {"chi", "N_pst_before", "N_pst_after", "N_adapted_before",
                     "N_adapted_after"};
    for (double chi : cfg.rapidities) {
        const TransformPair lambda = boost(cfg.boost_axis, chi);
        const TwoParticleState boosted = boost_two(bell, lambda);
        const double n_pst_after = negativity(reduced_two_qubit(boosted, canonical, canonical));
        const double n_cmp_after = negativity(reduced_two_qubit(boosted, frame, frame));
        table.rows.push_back({chi, n_pst_before, n_pst_after, n_cmp_before, n_cmp_after});
    }
    return table;
}

std::string render(const Table& table, const std::string& format) {
    if (format == "json") return to_json(table);
    if (format == "csv") return to_csv(table);
    throw config_error("format must be csv or json");
}

std::string render(const GaugeReport& report, const std::string& format) {
    if (format == "json") return to_json(report);
    if (format == "csv") return to_csv(report);
    throw config_error("format must be csv or json");
}

} // namespace relspin
