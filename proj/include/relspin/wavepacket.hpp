// Sampled momentum-space wavepackets. A state is a finite ensemble
// {(p_i, w_i, chi_i)} on one mass shell, with w_i approximating the invariant
// measure d^3p / (2E) per grid cell. Every integral in the library is a
// weighted sum over these samples in index order; boosts transport samples
// without re-gridding, so the invariance of the measure is exact.

#ifndef RELSPIN_WAVEPACKET_HPP
#define RELSPIN_WAVEPACKET_HPP

#include "relspin/minkowski.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace relspin {

using Spinor = Eigen::Vector2cd; // amplitudes (psi(p,+1/2), psi(p,-1/2)),
                                 // canonical basis

/// Momentum-dependent 2x2 map, evaluated lazily per sample.
using SpinorRule = std::function<SpinorMap(const Vec3&)>;

struct SpinorSample {
    Vec3 p;
    double w; // invariant-measure cell weight, > 0
    Spinor chi;
};

struct WavePacketState {
    double mass = 0.0;
    std::vector<SpinorSample> samples;

    /// sum_i w_i |chi_i|^2; 1 within 1e-10 for any constructed state.
    double norm_squared() const;
};

/// Cubic sampling lattice: n points per axis (odd, >= 3) spanning
/// center +- span * width. The packet's center and width anchor it.
struct GridSpec {
    int n = 21;
    double span = 4.0;
};

/// Normalized Gaussian packet psi(p,s) ~ exp(-|p-p0|^2 / (4 width^2)) chi0(s)
/// sampled on the lattice, weights cell^3 / (2E) before renormalization.
WavePacketState gaussian_packet(double mass, const Vec3& center, double width,
                                const Spinor& chi0, const GridSpec& grid);

/// (p, w, chi) -> (Lambda p, w, W(Lambda, p) chi). Norm and weights preserved.
WavePacketState boost_state(const WavePacketState& state, const TransformPair& lambda);

/// (p_+, p_-): probabilities of spin projection +-1/2 along the momentum.
/// Phase-convention free. Requires every |p_i| > 1e-12 * mass.
std::pair<double, double> helicity_probabilities(const WavePacketState& state);

/// chi_i -> U^dag chi_i (constant spin-basis change).
WavePacketState apply_spin_unitary(const WavePacketState& state, const SpinorMap& u);

/// chi_i -> U(p_i)^dag chi_i. Each U(p_i) must be unitary within 1e-10.
WavePacketState apply_spin_unitary(const WavePacketState& state, const SpinorRule& u);

} // namespace relspin

#endif
