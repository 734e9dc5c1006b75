// Two-particle spin-momentum states on sampled product grids, single-observer
// boosts acting on both tensor factors, two-qubit reductions with independent
// per-particle polarization frames, and negativity.

#ifndef RELSPIN_ENTANGLEMENT_HPP
#define RELSPIN_ENTANGLEMENT_HPP

#include "relspin/polarization.hpp"

namespace relspin {

using TwoQubitDensity = Eigen::Matrix4cd; // basis order |r1 r2>, r1 major

struct TwoParticleSample {
    Vec3 p1;
    Vec3 p2;
    double w;             // joint invariant-measure weight, > 0
    Eigen::Matrix2cd amp; // A(s1, s2) in the canonical bases
};

struct TwoParticleState {
    double m1 = 0.0;
    double m2 = 0.0;
    std::vector<TwoParticleSample> samples;

    /// sum w |A|^2; 1 within 1e-10 for any constructed state.
    double norm_squared() const;
};

/// (|up up> + |down down>)/sqrt(2) times product Gaussians centered at
/// center1/center2, sharing one width and per-particle lattice spec.
TwoParticleState bell_packet(double mass, const Vec3& center1, const Vec3& center2,
                             double width, const GridSpec& grid);

/// One observer boosts both particles: A -> (W(Lambda,p1) (x) W(Lambda,p2)) A.
TwoParticleState boost_two(const TwoParticleState& state, const TransformPair& lambda);

/// rho = sum w vec(a) vec(a)^dag with a = U1(p1)^dag A conj(U2(p2)).
TwoQubitDensity reduced_two_qubit(const TwoParticleState& state,
                                  const PolarizationFrame& frame1,
                                  const PolarizationFrame& frame2);

/// Transpose of the second qubit's indices; an exact involution.
TwoQubitDensity partial_transpose(const TwoQubitDensity& rho);

/// Sum of |negative eigenvalues| of the partial transpose; in [0, 1/2].
double negativity(const TwoQubitDensity& rho);

} // namespace relspin

#endif
