#include "relspin/entanglement.hpp"
#include "relspin/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace relspin {

double TwoParticleState::norm_squared() const {
    numerics::KahanSum<double> acc;
    for (const auto& s : samples) {
        acc.add(s.w * s.amp.squaredNorm());
    }
    return acc.sum;
}

TwoParticleState bell_packet(double mass, const Vec3& center1, const Vec3& center2,
                             double width, const GridSpec& grid) {
    // Reuse the single-particle lattice; the spin-up amplitude carries the
    // Gaussian profile, per particle.
    const Spinor up(1.0, 0.0);
    const WavePacketState g1 = gaussian_packet(mass, center1, width, up, grid);
    const WavePacketState g2 = gaussian_packet(mass, center2, width, up, grid);

    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    TwoParticleState state;
    state.m1 = state.m2 = mass;
    state.samples.reserve(g1.samples.size() * g2.samples.size());
    for (const auto& s1 : g1.samples) {
        for (const auto& s2 : g2.samples) {
            TwoParticleSample s;
            s.p1 = s1.p;
            s.p2 = s2.p;
            s.w = s1.w * s2.w;
            s.amp = (inv_sqrt2 * s1.chi(0) * s2.chi(0)) * Eigen::Matrix2cd::Identity();
            state.samples.push_back(s);
        }
    }
    // Each factor is unit-normalized, so the product norm is 1 up to rounding;
    // renormalize anyway to pin the invariant.
    const double n2 = state.norm_squared();
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw numerical_error("bell_packet: cannot normalize a null state");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& s : state.samples) s.amp *= scale;
    return state;
}

TwoParticleState boost_two(const TwoParticleState& state, const TransformPair& lambda) {
    TwoParticleState out;
    out.m1 = state.m1;
    out.m2 = state.m2;
    out.samples.resize(state.samples.size());
    numerics::parallel_for(state.samples.size(), [&](std::size_t i) {
        const TwoParticleSample& s = state.samples[i];
        const MassiveMomentum q1(s.p1, state.m1);
        const MassiveMomentum q2(s.p2, state.m2);
        const SpinorMap w1 = wigner_rotation(lambda, q1);
        const SpinorMap w2 = wigner_rotation(lambda, q2);
        out.samples[i] = {transform_momentum(lambda.vector, q1).p,
                          transform_momentum(lambda.vector, q2).p,
                          s.w,
                          w1 * s.amp * w2.transpose()};
    });
    return out;
}

TwoQubitDensity reduced_two_qubit(const TwoParticleState& state,
                                  const PolarizationFrame& frame1,
                                  const PolarizationFrame& frame2) {
    std::vector<Eigen::Vector4cd> components(state.samples.size());
    numerics::parallel_for(state.samples.size(), [&](std::size_t i) {
        const TwoParticleSample& s = state.samples[i];
        const SpinorMap u1 = frame_basis(frame1, MassiveMomentum(s.p1, state.m1));
        const SpinorMap u2 = frame_basis(frame2, MassiveMomentum(s.p2, state.m2));
        const Eigen::Matrix2cd a = u1.adjoint() * s.amp * u2.conjugate();
        components[i] << a(0, 0), a(0, 1), a(1, 0), a(1, 1);
    });
    numerics::KahanSum<TwoQubitDensity> acc;
    acc.sum.setZero();
    acc.carry.setZero();
    for (std::size_t i = 0; i < components.size(); ++i) {
        acc.add(state.samples[i].w * (components[i] * components[i].adjoint()));
    }

    const TwoQubitDensity& rho = acc.sum;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
        std::abs(rho.trace().real() - 1.0) > 1e-10) {
        throw numerical_error("reduced_two_qubit: density invariants violated");
    }
    Eigen::SelfAdjointEigenSolver<TwoQubitDensity> solver(0.5 * (rho + rho.adjoint()));
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw numerical_error("reduced_two_qubit: negative eigenvalue");
    }
    return rho;
}

TwoQubitDensity partial_transpose(const TwoQubitDensity& rho) {
    TwoQubitDensity out;
    for (int r1 = 0; r1 < 2; ++r1)
        for (int r2 = 0; r2 < 2; ++r2)
            for (int s1 = 0; s1 < 2; ++s1)
                for (int s2 = 0; s2 < 2; ++s2)
                    out(2 * r1 + r2, 2 * s1 + s2) = rho(2 * r1 + s2, 2 * s1 + r2);
    return out;
}

double negativity(const TwoQubitDensity& rho) {
    const TwoQubitDensity pt = partial_transpose(rho);
    Eigen::SelfAdjointEigenSolver<TwoQubitDensity> solver(0.5 * (pt + pt.adjoint()));
    double n = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double ev = solver.eigenvalues()(i);
        if (ev < 0.0) n -= ev;
    }
    return n;
}

} // namespace relspin
